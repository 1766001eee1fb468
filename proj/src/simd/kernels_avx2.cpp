// AVX2 + FMA variants of the hot kernels. Compiled with -mavx2 -mfma and
// selected at runtime; see dispatch.cpp.

#include <immintrin.h>

#include <cmath>

#include "grazing/simd/kernels.hpp"

namespace grazing::simd {

namespace {

void scaled_copy_avx2(double s, const double* x, double* out, std::size_t n) {
  __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = s * x[i];
}

void scaled_add_avx2(double s, const double* x, double* out, std::size_t n) {
  __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d a0 = _mm256_loadu_pd(out + i);
    __m256d a1 = _mm256_loadu_pd(out + i + 4);
    a0 = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), a0);
    a1 = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i + 4), a1);
    _mm256_storeu_pd(out + i, a0);
    _mm256_storeu_pd(out + i + 4, a1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(out + i);
    a = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), a);
    _mm256_storeu_pd(out + i, a);
  }
  for (; i < n; ++i) out[i] += s * x[i];
}

void scaled_add2_avx2(double s, const double* x, const double* y, double* out,
                      std::size_t n) {
  __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d sum = _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    __m256d a = _mm256_loadu_pd(out + i);
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vs, sum, a));
  }
  for (; i < n; ++i) out[i] += s * (x[i] + y[i]);
}

void rank1_update_avx2(double* a, std::size_t lda, const double* x, std::size_t nx,
                       const double* y, std::size_t ny, double s) {
  for (std::size_t i = 0; i < nx; ++i) {
    double sx = s * x[i];
    scaled_add_avx2(sx, y, a + i * lda, ny);
  }
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  double buf[4];
  _mm256_storeu_pd(buf, acc0);
  double acc = ((buf[0] + buf[1]) + (buf[2] + buf[3]));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void hermite_batch_avx2(int K, const double* x, std::size_t n, double* out,
                        std::size_t ld) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_set1_pd(1.0));
  for (; i < n; ++i) out[i] = 1.0;
  if (K == 0) return;
  for (i = 0; i < n; ++i) out[ld + i] = x[i];
  for (int k = 1; k < K; ++k) {
    __m256d a = _mm256_set1_pd(std::sqrt(double(k)));
    __m256d b = _mm256_set1_pd(1.0 / std::sqrt(double(k + 1)));
    const double* pk = out + k * ld;
    const double* pkm = out + (k - 1) * ld;
    double* pkp = out + (k + 1) * ld;
    i = 0;
    for (; i + 4 <= n; i += 4) {
      __m256d xv = _mm256_loadu_pd(x + i);
      __m256d t = _mm256_mul_pd(xv, _mm256_loadu_pd(pk + i));
      t = _mm256_fnmadd_pd(a, _mm256_loadu_pd(pkm + i), t);
      _mm256_storeu_pd(pkp + i, _mm256_mul_pd(t, b));
    }
    double as = std::sqrt(double(k)), bs = 1.0 / std::sqrt(double(k + 1));
    for (; i < n; ++i) pkp[i] = (x[i] * pk[i] - as * pkm[i]) * bs;
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k = {scaled_copy_avx2, scaled_add_avx2, scaled_add2_avx2,
                            rank1_update_avx2, dot_avx2, hermite_batch_avx2, "avx2"};
  return k;
}

}  // namespace grazing::simd
