#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace rigidity::simd {

// Inner loops of geometric graph induction. Every variant must produce
// bit-identical output to the scalar reference: squared distances are formed
// as dx*dx + dy*dy with two separate roundings and no fused multiply-add.

/// out[j] = (xs[j] - x)^2 + (ys[j] - y)^2
using SquaredDistancesFn = void (*)(double x, double y, const double* xs,
                                    const double* ys, std::size_t count,
                                    double* out);

/// mask[j] = 1 if (xs[j] - x)^2 + (ys[j] - y)^2 <= limit else 0.
/// Returns the number of set entries.
using WithinLimitFn = std::size_t (*)(double x, double y, const double* xs,
                                      const double* ys, std::size_t count,
                                      double limit, std::uint8_t* mask);

struct KernelTable {
  std::string_view name;
  SquaredDistancesFn squared_distances;
  WithinLimitFn within_limit;
};

const KernelTable& scalar_kernels() noexcept;

/// Variants compiled into this binary and supported by the running CPU,
/// scalar first.
std::span<const KernelTable> available_kernels();

/// Fastest available variant. Setting RIGIDITY_KERNELS=<name> in the
/// environment forces a specific one (e.g. "scalar") when it is available.
const KernelTable& active_kernels();

namespace detail {
#if defined(RIGIDITY_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif
#if defined(RIGIDITY_HAVE_NEON)
const KernelTable& neon_kernels() noexcept;
#endif
}  // namespace detail

}  // namespace rigidity::simd
