#include <cstdlib>
#include <string_view>
#include <vector>

#include "rigidity/simd/kernels.hpp"

namespace rigidity::simd {

namespace {

std::vector<KernelTable> detect() {
  std::vector<KernelTable> tables{scalar_kernels()};
#if defined(RIGIDITY_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) tables.push_back(detail::avx2_kernels());
#endif
#if defined(RIGIDITY_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  tables.push_back(detail::neon_kernels());
#endif
  return tables;
}

}  // namespace

std::span<const KernelTable> available_kernels() {
  static const std::vector<KernelTable> tables = detect();
  return tables;
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const auto tables = available_kernels();
    if (const char* forced = std::getenv("RIGIDITY_KERNELS")) {
      for (const auto& t : tables) {
        if (t.name == std::string_view(forced)) return t;
      }
    }
    return tables.back();
  }();
  return chosen;
}

}  // namespace rigidity::simd
