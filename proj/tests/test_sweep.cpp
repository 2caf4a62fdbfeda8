#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rigidity/error.hpp"
#include "rigidity/geometric.hpp"
#include "rigidity/indices.hpp"
#include "rigidity/sweep.hpp"

using namespace rigidity;

namespace {

SweepCurve constant_curve(std::vector<double> ratios, mpq_class kr, mpq_class ku) {
  SweepCurve c;
  c.ratios = ratios;
  c.k_r.assign(ratios.size(), kr);
  c.k_u.assign(ratios.size(), ku);
  c.k_r_std.assign(ratios.size(), 0.0);
  c.k_u_std.assign(ratios.size(), 0.0);
  return c;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::kParse;
}

}  // namespace

TEST_CASE("ratio_grid") {
  const auto grid = ratio_grid(0.01);
  REQUIRE(grid.size() == 101);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK(grid[57] == 0.57);
  CHECK(grid[49] == 0.49);
  CHECK(ratio_grid(0.1).size() == 11);
  CHECK(ratio_grid(0.03).size() == 34);
  CHECK(ratio_grid(1.0).size() == 2);
  CHECK(ratio_grid(0.3).size() == 4);
  CHECK(code_of([] { ratio_grid(0.0); }) == Errc::kBadGrid);
  CHECK(code_of([] { ratio_grid(-0.1); }) == Errc::kBadGrid);
  CHECK(code_of([] { ratio_grid(1.5); }) == Errc::kBadGrid);
}

TEST_CASE("grid validation") {
  const auto dep = sample_deployment(10, 30.0, 1);
  const std::vector<double> empty;
  const std::vector<double> unsorted{0.2, 0.1};
  const std::vector<double> repeated{0.1, 0.1};
  const std::vector<double> outside{0.5, 1.2};
  CHECK(code_of([&] { sweep_single(dep, empty); }) == Errc::kBadGrid);
  CHECK(code_of([&] { sweep_single(dep, unsorted); }) == Errc::kBadGrid);
  CHECK(code_of([&] { sweep_single(dep, repeated); }) == Errc::kBadGrid);
  CHECK(code_of([&] { sweep_single(dep, outside); }) == Errc::kBadGrid);
  const std::vector<double> ok{0.5};
  CHECK(code_of([&] { sweep_average(10, 30.0, 0, ok, 1); }) == Errc::kBadGrid);
}

TEST_CASE("sweep_single endpoints and monotonicity") {
  const auto grid = ratio_grid(0.01);
  const auto dep = sample_deployment(25, 30.0, 99);
  const auto curve = sweep_single(dep, grid);
  REQUIRE(curve.size() == 101);
  CHECK(curve.k_r[0] == 0);
  CHECK(curve.k_u[0] == 0);
  for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve.k_r[i] >= curve.k_r[i - 1]);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve.k_u[i] >= 0);
    CHECK(curve.k_u[i] <= 1);
    const Graph g = geometric_graph(dep, grid[i] * 30.0);
    const RatioValue kr = rigidity_index(g);
    CHECK(curve.k_r[i] == mpq_class(static_cast<long>(kr.numerator()),
                                    static_cast<unsigned long>(kr.denominator())));
    if (g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2) {
      CHECK(curve.k_r[i] == 1);
      CHECK(curve.k_u[i] == 1);
    }
  }
}

TEST_CASE("complete-graph entries have K_r = K_u = 1") {
  for (std::size_t n : {4U, 5U, 6U}) {
    // Points inside a quarter of the square are pairwise within the side.
    Deployment dep = sample_deployment(n, 30.0, 17 + n);
    for (auto& p : dep.points) {
      p.x /= 4.0;
      p.y /= 4.0;
    }
    const std::vector<double> grid{0.0, 1.0};
    const auto curve = sweep_single(dep, grid);
    CHECK(geometric_graph(dep, 30.0).edge_count() == n * (n - 1) / 2);
    CHECK(curve.k_r[1] == 1);
    CHECK(curve.k_u[1] == 1);
  }
}

TEST_CASE("sweep_average is the pointwise mean of single sweeps") {
  const auto grid = ratio_grid(0.05);
  const auto single = sweep_single(sample_deployment(12, 30.0, 40), grid);
  const auto one = sweep_average(12, 30.0, 1, grid, 40);
  CHECK(one == single);

  const int trials = 4;
  const auto avg = sweep_average(12, 30.0, trials, grid, 40);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    mpq_class kr = 0, ku = 0;
    double kr_sq = 0, ku_sq = 0;
    for (int t = 0; t < trials; ++t) {
      const auto c = sweep_single(sample_deployment(12, 30.0, 40 + t), grid);
      kr += c.k_r[i];
      ku += c.k_u[i];
      kr_sq += c.k_r[i].get_d() * c.k_r[i].get_d();
      ku_sq += c.k_u[i].get_d() * c.k_u[i].get_d();
    }
    CHECK(avg.k_r[i] == kr / trials);
    CHECK(avg.k_u[i] == ku / trials);
    const double mean_r = mpq_class(kr / trials).get_d();
    CHECK(avg.k_r_std[i] == doctest::Approx(std::sqrt(std::max(0.0, kr_sq / trials - mean_r * mean_r))).epsilon(1e-9));
    if (i > 0) CHECK(avg.k_r[i] >= avg.k_r[i - 1]);
  }
  CHECK(sweep_average(12, 30.0, trials, grid, 40) == avg);
}

TEST_CASE("threshold_ratio and relative_increase") {
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto ones = constant_curve(grid, 1, 1);
  CHECK(threshold_ratio(ones, IndexKind::kRigidity) == 0.0);

  const auto halves = constant_curve(grid, mpq_class(1, 2), mpq_class(1, 2));
  CHECK_FALSE(threshold_ratio(halves, IndexKind::kRigidity).has_value());
  CHECK_FALSE(relative_increase(halves).has_value());

  auto c = constant_curve({0.0, 0.49, 0.5, 0.57, 1.0}, 0, 0);
  c.k_r = {0, 1, 1, 1, 1};
  c.k_u = {0, mpq_class(49, 50), mpq_class(99, 100), 1, 1};
  CHECK(threshold_ratio(c, IndexKind::kRigidity) == 0.49);
  CHECK(threshold_ratio(c, IndexKind::kRedundancy) == 0.57);
  REQUIRE(relative_increase(c).has_value());
  CHECK(*relative_increase(c) == doctest::Approx(0.163265).epsilon(1e-5));

  c.k_u = c.k_r;
  CHECK(*relative_increase(c) == 0.0);
  c.k_u = {0, 0, 0, 0, mpq_class(9, 10)};
  CHECK_FALSE(relative_increase(c).has_value());
}

TEST_CASE("csv and svg output") {
  const auto grid = ratio_grid(0.1);
  const auto curve = sweep_average(10, 30.0, 3, grid, 5);
  std::ostringstream csv;
  write_sweep_csv(csv, curve);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "ratio,k_r_mean,k_r_std,k_u_mean,k_u_std,trials");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
    CHECK(line.substr(line.size() - 2) == ",3");
  }
  CHECK(rows == 11);

  std::ostringstream exact;
  write_sweep_csv(exact, curve, true);
  CHECK(exact.str().rfind("ratio,k_r_mean,k_r_std,k_u_mean,k_u_std,trials,k_r_exact,k_u_exact\n", 0) == 0);
  CHECK(exact.str().find("0.000000,0.000000,0.000000,0.000000,0.000000,3,0/1,0/1") != std::string::npos);

  std::ostringstream svg;
  write_sweep_svg(svg, curve);
  const std::string text = svg.str();
  CHECK(text.rfind("<svg", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') > 5);
  CHECK(text.find("</svg>") != std::string::npos);
}
