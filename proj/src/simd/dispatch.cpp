#include <cstdlib>
#include <string_view>

#include "relgraph/simd/bitops.hpp"

namespace relgraph::simd {

const BitKernels& scalar_kernels() noexcept { return detail::kScalar; }

const BitKernels* avx2_kernels() noexcept {
#if defined(RELGRAPH_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &detail::kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const BitKernels& select_kernels() noexcept {
  if (const char* forced = std::getenv("RELGRAPH_SIMD"); forced != nullptr) {
    if (std::string_view(forced) == "scalar") return scalar_kernels();
  }
  if (const BitKernels* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const BitKernels& active_kernels() noexcept {
  static const BitKernels& chosen = select_kernels();
  return chosen;
}

std::vector<const BitKernels*> available_kernels() {
  std::vector<const BitKernels*> out{&scalar_kernels()};
  if (const BitKernels* avx2 = avx2_kernels()) out.push_back(avx2);
  return out;
}

}  // namespace relgraph::simd
