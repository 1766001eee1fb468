#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace grazing {

/// A one-dimensional quadrature rule: sum_i w_i f(x_i).
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double apply(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Gauss-Legendre on [-1, 1], exact for polynomials of degree <= 2n-1.
Rule1D gauss_legendre(int n);

/// Gauss-Legendre mapped to [a, b].
Rule1D gauss_legendre_ab(int n, double a, double b);

/// Gauss-Hermite with physicists' weight exp(-x^2) on (-inf, inf):
/// sum w_i f(x_i) = int f(x) exp(-x^2) dx, exact for degree <= 2n-1.
Rule1D gauss_hermite_phys(int n);

/// Gauss rule against the unit Gaussian probability measure
/// (2 pi)^{-1/2} exp(-x^2/2) dx; nodes are sqrt(2) * physicists' nodes.
Rule1D gauss_hermite_prob(int n);

/// Gauss rule for the radial weight rho^a exp(-rho^2/4) on (0, inf),
/// a > -1. Built by the Stieltjes procedure on a fine discretization of the
/// measure (graded near 0 to resolve rho^a), then Golub-Welsch.
/// Exact for polynomials in rho of degree <= 2n-1.
Rule1D radial_gauss(double a, int n);

/// Moments of the radial weight: int_0^inf rho^{a+k} exp(-rho^2/4) drho
/// = 2^{a+k} Gamma((a+k+1)/2). Used as the test oracle for radial_gauss.
double radial_moment(double a, int k);

/// Adaptive Gauss-Kronrod (15/7) on [a, b] with absolute/relative targets.
/// Bisection-based; throws std::runtime_error on subdivision exhaustion.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-12, double abs_tol = 0.0,
                           int max_depth = 48);

}  // namespace grazing
