#include "rigidity/simd/kernels.hpp"

#include <arm_neon.h>

namespace rigidity::simd::detail {

namespace {

// vmulq/vaddq keep the two roundings separate; vfmaq would not.
void squared_distances_neon(double x, double y, const double* xs, const double* ys,
                            std::size_t count, double* out) {
  const float64x2_t px = vdupq_n_f64(x);
  const float64x2_t py = vdupq_n_f64(y);
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(xs + j), px);
    const float64x2_t dy = vsubq_f64(vld1q_f64(ys + j), py);
    vst1q_f64(out + j, vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
  }
  for (; j < count; ++j) {
    const double dx = xs[j] - x;
    const double dy = ys[j] - y;
    out[j] = dx * dx + dy * dy;
  }
}

std::size_t within_limit_neon(double x, double y, const double* xs, const double* ys,
                              std::size_t count, double limit, std::uint8_t* mask) {
  const float64x2_t px = vdupq_n_f64(x);
  const float64x2_t py = vdupq_n_f64(y);
  const float64x2_t lim = vdupq_n_f64(limit);
  std::size_t hits = 0;
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(xs + j), px);
    const float64x2_t dy = vsubq_f64(vld1q_f64(ys + j), py);
    const float64x2_t sq = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    const uint64x2_t le = vcleq_f64(sq, lim);
    mask[j] = vgetq_lane_u64(le, 0) ? 1 : 0;
    mask[j + 1] = vgetq_lane_u64(le, 1) ? 1 : 0;
    hits += mask[j] + mask[j + 1];
  }
  for (; j < count; ++j) {
    const double dx = xs[j] - x;
    const double dy = ys[j] - y;
    const bool in = dx * dx + dy * dy <= limit;
    mask[j] = in ? 1 : 0;
    hits += in;
  }
  return hits;
}

}  // namespace

const KernelTable& neon_kernels() noexcept {
  static constexpr KernelTable table{"neon", &squared_distances_neon, &within_limit_neon};
  return table;
}

}  // namespace rigidity::simd::detail
