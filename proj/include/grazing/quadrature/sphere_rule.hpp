#pragma once

#include <array>
#include <vector>

#include "grazing/params.hpp"
#include "grazing/quadrature/rules1d.hpp"

namespace grazing {

/// Orthonormal frame completing a unit direction to a right-handed basis.
struct Frame {
  std::array<double, 3> e1, e2, axis;
};

Frame make_frame(const std::array<double, 3>& axis);

/// Composite Gauss rule in u = sin(theta/2) on (0, eps] with dyadic panels
/// [eps 2^{-j-1}, eps 2^{-j}], j = 0..J-1. Weights carry the 4u du factor of
/// the surface measure (d sigma = 4 u du dphi). The innermost panel
/// [0, eps 2^{-J}] is dropped; `trunc_bound` is the b^eps-weighted mass of
/// sin^2(theta/2) over the dropped cap, the worst-case scale for
/// post-cancellation integrands.
struct CapRuleU {
  std::vector<double> u;
  std::vector<double> w;  // includes 4u
  double eps = 0.0;
  double trunc_bound = 0.0;
};

/// `breakpoints` are extra panel boundaries inserted into the grading (used
/// e.g. to split at an integrand kink); values outside (0, eps) are ignored.
CapRuleU make_cap_rule(const ModelParams& p, int panels, int order,
                       const std::vector<double>& breakpoints = {});

/// Product rule on the spherical cap {sin(theta/2) <= eps} around `axis`:
/// graded Gauss in u times uniform trapezoid in phi. Node weights sum to the
/// exact cap area 4 pi eps^2.
class SphereRule {
 public:
  struct Node {
    std::array<double, 3> sigma;
    double weight;  // surface measure weight
    double u;       // sin(theta/2)
  };

  SphereRule(const ModelParams& p, int panels, int order, int n_phi,
             const std::array<double, 3>& axis = {0.0, 0.0, 1.0},
             const std::vector<double>& breakpoints = {});

  const std::vector<Node>& nodes() const { return nodes_; }
  const CapRuleU& cap() const { return cap_; }
  int n_phi() const { return n_phi_; }
  double trunc_bound() const { return cap_.trunc_bound; }

  /// sum_i w_i f(sigma_i)
  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (const auto& n : nodes_) acc += n.weight * f(n.sigma);
    return acc;
  }

  /// sum_i w_i b^eps(u_i) f(sigma_i, u_i) — the kernel-weighted form.
  template <class F>
  double integrate_beps(F&& f) const {
    double acc = 0.0;
    for (const auto& n : nodes_) acc += n.weight * beps_[&n - nodes_.data()] * f(n.sigma, n.u);
    return acc;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<double> beps_;
  CapRuleU cap_;
  int n_phi_;
};

}  // namespace grazing
