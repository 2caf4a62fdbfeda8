#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "rigidity/geometric.hpp"
#include "rigidity/simd/kernels.hpp"

using namespace rigidity;

namespace {

struct Cloud {
  std::vector<double> xs;
  std::vector<double> ys;
};

Cloud random_cloud(std::mt19937_64& rng, std::size_t n, double side) {
  std::uniform_real_distribution<double> u(0.0, side);
  Cloud c;
  for (std::size_t i = 0; i < n; ++i) {
    c.xs.push_back(u(rng));
    c.ys.push_back(u(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("scalar variant is always available and listed first") {
  const auto tables = simd::available_kernels();
  REQUIRE_FALSE(tables.empty());
  CHECK(tables.front().name == "scalar");
  MESSAGE("active kernels: " << simd::active_kernels().name);
}

TEST_CASE("every kernel variant is bit-identical to the scalar reference") {
  std::mt19937_64 rng(2024);
  const auto& ref = simd::scalar_kernels();
  for (const auto& variant : simd::available_kernels()) {
    CAPTURE(variant.name);
    for (std::size_t count = 0; count <= 37; ++count) {
      for (int rep = 0; rep < 20; ++rep) {
        const Cloud c = random_cloud(rng, count, 30.0);
        const double x = std::uniform_real_distribution<double>(0.0, 30.0)(rng);
        const double y = std::uniform_real_distribution<double>(0.0, 30.0)(rng);
        std::vector<double> want(count), got(count);
        ref.squared_distances(x, y, c.xs.data(), c.ys.data(), count, want.data());
        variant.squared_distances(x, y, c.xs.data(), c.ys.data(), count, got.data());
        REQUIRE(std::memcmp(want.data(), got.data(), count * sizeof(double)) == 0);

        // Use one of the exact distances as the limit to exercise ties.
        const double limit = count > 0 ? want[rng() % count] : 1.0;
        std::vector<std::uint8_t> want_mask(count), got_mask(count);
        const auto want_hits =
            ref.within_limit(x, y, c.xs.data(), c.ys.data(), count, limit, want_mask.data());
        const auto got_hits =
            variant.within_limit(x, y, c.xs.data(), c.ys.data(), count, limit, got_mask.data());
        REQUIRE(want_hits == got_hits);
        REQUIRE(want_mask == got_mask);
      }
    }
  }
}

TEST_CASE("geometric graphs agree across kernel variants") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto dep = sample_deployment(40, 30.0, seed);
    for (double r : {0.0, 3.0, 7.5, 12.0, 18.0, 30.0, 50.0}) {
      const Graph ref = geometric_graph(dep, r, simd::scalar_kernels());
      for (const auto& variant : simd::available_kernels()) {
        CHECK(geometric_graph(dep, r, variant) == ref);
      }
      CHECK(geometric_graph(dep, r) == ref);
    }
  }
}
