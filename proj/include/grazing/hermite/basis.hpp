#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "grazing/kernels.hpp"

namespace grazing {

/// Normalized probabilists' Hermite values p_0..p_K at x, p_k = He_k / sqrt(k!),
/// orthonormal against the unit Gaussian. `out` must hold K+1 entries.
inline void hermite_values(int K, double x, double* out) {
  out[0] = 1.0;
  if (K == 0) return;
  out[1] = x;
  for (int k = 1; k < K; ++k)
    out[k + 1] = (x * out[k] - std::sqrt(double(k)) * out[k - 1]) / std::sqrt(double(k + 1));
}

/// Derivatives p_k' = sqrt(k) p_{k-1} from a value table.
inline void hermite_derivs(int K, const double* vals, double* out) {
  out[0] = 0.0;
  for (int k = 1; k <= K; ++k) out[k] = std::sqrt(double(k)) * vals[k - 1];
}

/// Index bookkeeping for the total-degree-K tensor Hermite basis.
/// Linear order: a1 outer, then a2, then a3 contiguous, so runs over a3 are
/// unit-stride (the layout the quadrature kernels stream over).
class BasisSpec {
 public:
  explicit BasisSpec(int K) : K_(K) {
    if (K < 0) throw std::invalid_argument("BasisSpec: K >= 0");
    run_start_.assign((K + 1) * (K + 1), -1);
    for (int a1 = 0; a1 <= K; ++a1)
      for (int a2 = 0; a2 + a1 <= K; ++a2) {
        run_start_[a1 * (K + 1) + a2] = static_cast<int>(multi_.size());
        for (int a3 = 0; a3 + a1 + a2 <= K; ++a3) multi_.push_back({a1, a2, a3});
      }
    dim_ = static_cast<int>(multi_.size());
  }

  int degree() const { return K_; }
  int dim() const { return dim_; }
  const std::array<int, 3>& multi(int i) const { return multi_[i]; }
  int index(int a1, int a2, int a3) const {
    return run_start_[a1 * (K_ + 1) + a2] + a3;
  }
  /// Linear index of (a1, a2, 0); the a3-run is contiguous from here.
  int run_start(int a1, int a2) const { return run_start_[a1 * (K_ + 1) + a2]; }
  int total_degree(int i) const {
    const auto& a = multi_[i];
    return a[0] + a[1] + a[2];
  }

 private:
  int K_;
  int dim_ = 0;
  std::vector<std::array<int, 3>> multi_;
  std::vector<int> run_start_;
};

/// Tensor-product evaluation of all polynomial parts p_alpha at a point given
/// per-axis value tables (each K+1 long); out has spec.dim() entries.
void tensor_values(const BasisSpec& spec, const double* x1, const double* x2,
                   const double* x3, double* out);

/// out += scale * tensor_values(...), streaming kernel used by assembly.
void tensor_accumulate(const BasisSpec& spec, double scale, const double* x1,
                       const double* x2, const double* x3, double* out);

/// A velocity distribution f = sum c_alpha p_alpha mu^{1/2}.
template <class Scalar = double>
struct CoeffsT {
  const BasisSpec* spec = nullptr;
  std::vector<Scalar> c;

  CoeffsT() = default;
  explicit CoeffsT(const BasisSpec& s) : spec(&s), c(s.dim(), Scalar(0)) {}

  double norm() const {
    double acc = 0.0;
    for (const auto& x : c) acc += std::norm(std::complex<double>(x));
    return std::sqrt(acc);
  }
};

using HermiteCoeffs = CoeffsT<double>;
using HermiteCoeffsC = CoeffsT<std::complex<double>>;

/// Pointwise value of f(v).
double eval(const HermiteCoeffs& f, const std::array<double, 3>& v);
/// Pointwise gradient of f.
std::array<double, 3> eval_grad(const HermiteCoeffs& f, const std::array<double, 3>& v);
/// Pointwise Hessian of f.
std::array<std::array<double, 3>, 3> eval_hess(const HermiteCoeffs& f,
                                               const std::array<double, 3>& v);

/// Value of the polynomial part P_f(v) (without the mu^{1/2} factor).
double eval_poly(const HermiteCoeffs& f, const std::array<double, 3>& v);

class DegreeTooLow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Orthonormal coefficient basis of ker = span{mu^12, v_i mu^12, |v|^2 mu^12}.
std::vector<HermiteCoeffs> collision_invariant_coeffs(const BasisSpec& spec);

/// Orthogonal projection onto ker via the a, b, c moment formulas.
HermiteCoeffs project_P(const HermiteCoeffs& f);

/// Coefficients of the j-th velocity derivative map: g = d_j f as new coeffs.
/// d_j (p_a mu^12) = (sqrt(a_j)/2... ) uses the exact ladder
/// d psi_n = sqrt(n)/2 psi_{n-1} - sqrt(n+1)/2 psi_{n+1} per axis.
HermiteCoeffs derivative(const HermiteCoeffs& f, int axis);

}  // namespace grazing
