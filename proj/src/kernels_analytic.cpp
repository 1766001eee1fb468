#include <cmath>

#include "grazing/kernels.hpp"
#include "grazing/quadrature/rules1d.hpp"

namespace grazing {

// Both integrals substitute u = sin(theta/2): sin(theta) dtheta = 4 u du,
// 1 - cos(theta) = 2 u^2, and the kernel support truncates at u = eps.

double lambda_e(const ModelParams& p) {
  double hi = std::min(p.eps, std::sin(kPi / 4.0));
  auto f = [&](double u) { return b_eps(p, u) * 4.0 * u * 2.0 * u * u; };
  // integrand ~ u^{1-2s}: split a graded head so the adaptive pass converges
  double cut = hi * 1e-6;
  double head = adaptive_quadrature(f, hi * 1e-14, cut, 1e-13);
  double tail = adaptive_quadrature(f, cut, hi, 1e-13);
  return head + tail;
}

double cancellation_constant(const ModelParams& p) {
  auto f = [&](double u) {
    double c2 = 1.0 - u * u;  // cos^2(theta/2)
    return b_eps(p, u) * 4.0 * u * (std::pow(c2, -0.5 * (3.0 + p.gamma)) - 1.0);
  };
  double hi = p.eps;
  double cut = hi * 1e-4;
  // head behaves like u^{1-2s}; integrate with a graded ladder
  double head = 0.0;
  double lo = hi * 1e-12;
  while (lo < cut) {
    double next = std::min(cut, lo * 16.0);
    head += adaptive_quadrature(f, lo, next, 1e-12);
    lo = next;
  }
  double tail = adaptive_quadrature(f, cut, hi, 1e-12);
  return 2.0 * kPi * (head + tail);
}

}  // namespace grazing
