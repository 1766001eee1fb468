#pragma once

#include <cstddef>

namespace grazing::simd {

/// Hot arithmetic kernels behind the quadrature sweeps. Scalar reference
/// implementations always exist; an AVX2+FMA variant is selected at runtime
/// on x86-64 when the CPU supports it. All variants use the same summation
/// order, so results are reproducible for a fixed build and machine.
struct Kernels {
  // out[i] = s * x[i]
  void (*scaled_copy)(double s, const double* x, double* out, std::size_t n);
  // out[i] += s * x[i]
  void (*scaled_add)(double s, const double* x, double* out, std::size_t n);
  // out[i] += s * (x[i] + y[i])
  void (*scaled_add2)(double s, const double* x, const double* y, double* out,
                      std::size_t n);
  // A[i*lda + j] += s * x[i] * y[j]
  void (*rank1_update)(double* a, std::size_t lda, const double* x, std::size_t nx,
                       const double* y, std::size_t ny, double s);
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // Normalized probabilists' Hermite value table over a batch of points:
  // out[k*ld + i] = p_k(x[i]), k = 0..K.
  void (*hermite_batch)(int K, const double* x, std::size_t n, double* out,
                        std::size_t ld);

  const char* name;
};

/// Kernels for the current CPU (AVX2 where available, else scalar).
const Kernels& active_kernels();

/// The portable reference implementations (for equivalence tests).
const Kernels& scalar_kernels();

}  // namespace grazing::simd
