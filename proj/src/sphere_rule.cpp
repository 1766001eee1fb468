#include "grazing/quadrature/sphere_rule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "grazing/kernels.hpp"

namespace grazing {

Frame make_frame(const std::array<double, 3>& axis) {
  Frame f;
  f.axis = axis;
  // pick the coordinate axis least aligned with `axis`
  int k = 0;
  double amin = std::abs(axis[0]);
  for (int i = 1; i < 3; ++i)
    if (std::abs(axis[i]) < amin) {
      amin = std::abs(axis[i]);
      k = i;
    }
  std::array<double, 3> t{0.0, 0.0, 0.0};
  t[k] = 1.0;
  double dot = t[0] * axis[0] + t[1] * axis[1] + t[2] * axis[2];
  for (int i = 0; i < 3; ++i) t[i] -= dot * axis[i];
  double n = norm3(t);
  for (int i = 0; i < 3; ++i) t[i] /= n;
  f.e1 = t;
  f.e2 = {axis[1] * t[2] - axis[2] * t[1], axis[2] * t[0] - axis[0] * t[2],
          axis[0] * t[1] - axis[1] * t[0]};
  return f;
}

CapRuleU make_cap_rule(const ModelParams& p, int panels, int order,
                       const std::vector<double>& breakpoints) {
  if (panels < 1 || order < 2)
    throw std::invalid_argument("make_cap_rule: need panels >= 1, order >= 2");
  // dyadic boundaries eps 2^{-j}, then merge caller breakpoints
  std::vector<double> bounds;
  bounds.reserve(panels + 1 + breakpoints.size());
  for (int j = 0; j <= panels; ++j) bounds.push_back(p.eps * std::ldexp(1.0, -j));
  for (double b : breakpoints)
    if (b > bounds.back() && b < p.eps) bounds.push_back(b);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  Rule1D gl = gauss_legendre(order);
  CapRuleU rule;
  rule.eps = p.eps;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    double lo = bounds[k], hi = bounds[k + 1];
    for (std::size_t i = 0; i < gl.size(); ++i) {
      double u = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i];
      double w = 0.5 * (hi - lo) * gl.weights[i];
      rule.u.push_back(u);
      rule.w.push_back(4.0 * u * w);
    }
  }
  // b^eps-weighted sin^2(theta/2) mass of the dropped cap [0, u_min]
  double u_min = bounds.front();
  double s = p.s;
  rule.trunc_bound = 2.0 * kPi * 4.0 * (1.0 - s) * std::pow(p.eps, 2.0 * s - 2.0) *
                     std::pow(u_min, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
  return rule;
}

SphereRule::SphereRule(const ModelParams& p, int panels, int order, int n_phi,
                       const std::array<double, 3>& axis,
                       const std::vector<double>& breakpoints)
    : n_phi_(n_phi) {
  if (n_phi < 4) throw std::invalid_argument("SphereRule: n_phi >= 4");
  cap_ = make_cap_rule(p, panels, order, breakpoints);
  Frame fr = make_frame(axis);
  double wphi = 2.0 * kPi / n_phi;
  nodes_.reserve(cap_.u.size() * n_phi);
  beps_.reserve(nodes_.capacity());
  for (std::size_t i = 0; i < cap_.u.size(); ++i) {
    double u = cap_.u[i];
    double ct = 1.0 - 2.0 * u * u;                    // cos(theta)
    double st = 2.0 * u * std::sqrt(1.0 - u * u);     // sin(theta)
    double be = b_eps(p, u);
    for (int m = 0; m < n_phi; ++m) {
      double phi = wphi * m;
      double c = std::cos(phi), s = std::sin(phi);
      Node n;
      n.u = u;
      n.weight = cap_.w[i] * wphi;
      for (int d = 0; d < 3; ++d)
        n.sigma[d] = ct * fr.axis[d] + st * (c * fr.e1[d] + s * fr.e2[d]);
      nodes_.push_back(n);
      beps_.push_back(be);
    }
  }
}

}  // namespace grazing
