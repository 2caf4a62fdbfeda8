// Compiled with -mavx2 only; no -mfma, so multiplies and adds round
// separately exactly like the scalar reference.
#include "rigidity/simd/kernels.hpp"

#include <immintrin.h>

namespace rigidity::simd::detail {

namespace {

void squared_distances_avx2(double x, double y, const double* xs, const double* ys,
                            std::size_t count, double* out) {
  const __m256d px = _mm256_set1_pd(x);
  const __m256d py = _mm256_set1_pd(y);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + j), px);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + j), py);
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(out + j, sq);
  }
  for (; j < count; ++j) {
    const double dx = xs[j] - x;
    const double dy = ys[j] - y;
    out[j] = dx * dx + dy * dy;
  }
}

std::size_t within_limit_avx2(double x, double y, const double* xs, const double* ys,
                              std::size_t count, double limit, std::uint8_t* mask) {
  const __m256d px = _mm256_set1_pd(x);
  const __m256d py = _mm256_set1_pd(y);
  const __m256d lim = _mm256_set1_pd(limit);
  std::size_t hits = 0;
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + j), px);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + j), py);
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(sq, lim, _CMP_LE_OQ));
    mask[j] = bits & 1;
    mask[j + 1] = (bits >> 1) & 1;
    mask[j + 2] = (bits >> 2) & 1;
    mask[j + 3] = (bits >> 3) & 1;
    hits += static_cast<std::size_t>(__builtin_popcount(bits));
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

const KernelTable& avx2_kernels() noexcept {
  static constexpr KernelTable table{"avx2", &squared_distances_avx2, &within_limit_avx2};
  return table;
}

}  // namespace rigidity::simd::detail
