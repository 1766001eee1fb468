#include <cmath>

#include "grazing/simd/kernels.hpp"

namespace grazing::simd {

namespace {

void scaled_copy_scalar(double s, const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = s * x[i];
}

void scaled_add_scalar(double s, const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += s * x[i];
}

void scaled_add2_scalar(double s, const double* x, const double* y, double* out,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] += s * (x[i] + y[i]);
}

void rank1_update_scalar(double* a, std::size_t lda, const double* x, std::size_t nx,
                         const double* y, std::size_t ny, double s) {
  for (std::size_t i = 0; i < nx; ++i) {
    double sx = s * x[i];
    double* row = a + i * lda;
    for (std::size_t j = 0; j < ny; ++j) row[j] += sx * y[j];
  }
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void hermite_batch_scalar(int K, const double* x, std::size_t n, double* out,
                          std::size_t ld) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 1.0;
  if (K == 0) return;
  for (std::size_t i = 0; i < n; ++i) out[ld + i] = x[i];
  for (int k = 1; k < K; ++k) {
    double a = std::sqrt(double(k)), b = 1.0 / std::sqrt(double(k + 1));
    const double* pk = out + k * ld;
    const double* pkm = out + (k - 1) * ld;
    double* pkp = out + (k + 1) * ld;
    for (std::size_t i = 0; i < n; ++i) pkp[i] = (x[i] * pk[i] - a * pkm[i]) * b;
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {scaled_copy_scalar, scaled_add_scalar, scaled_add2_scalar,
                            rank1_update_scalar, dot_scalar, hermite_batch_scalar,
                            "scalar"};
  return k;
}

}  // namespace grazing::simd
