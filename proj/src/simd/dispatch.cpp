#include "grazing/simd/kernels.hpp"

namespace grazing::simd {

#ifdef GRAZING_BUILD_AVX2
const Kernels& avx2_kernels();
#endif

const Kernels& active_kernels() {
#ifdef GRAZING_BUILD_AVX2
  static const Kernels& chosen = [&]() -> const Kernels& {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return avx2_kernels();
    return scalar_kernels();
  }();
  return chosen;
#else
  return scalar_kernels();
#endif
}

}  // namespace grazing::simd
