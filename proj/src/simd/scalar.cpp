#include "rigidity/simd/kernels.hpp"

namespace rigidity::simd {

namespace {

void squared_distances_scalar(double x, double y, const double* xs, const double* ys,
                              std::size_t count, double* out) {
  for (std::size_t j = 0; j < count; ++j) {
    const double dx = xs[j] - x;
    const double dy = ys[j] - y;
    out[j] = dx * dx + dy * dy;
  }
}

std::size_t within_limit_scalar(double x, double y, const double* xs, const double* ys,
                                std::size_t count, double limit, std::uint8_t* mask) {
  std::size_t hits = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const double dx = xs[j] - x;
    const double dy = ys[j] - y;
    const bool in = dx * dx + dy * dy <= limit;
    mask[j] = in ? 1 : 0;
    hits += in;
  }
  return hits;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static constexpr KernelTable table{"scalar", &squared_distances_scalar,
                                     &within_limit_scalar};
  return table;
}

}  // namespace rigidity::simd
