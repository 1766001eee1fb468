#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "grazing/params.hpp"

namespace grazing {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// <y> = (1 + |y|^2)^{1/2}.
inline double bracket(double r) { return std::sqrt(1.0 + r * r); }

inline double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// ---------------------------------------------------------------------------
// Smooth cutoff zeta
// ---------------------------------------------------------------------------

/// C^inf cutoff: 1 on [0,1/2], 0 on [1,inf), strictly decreasing between.
/// Realized by the standard bump partition phi(x) = exp(-1/x) for x > 0.
inline double zeta(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  auto phi = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
  double a = phi(1.0 - r);
  double b = phi(r - 0.5);
  return a / (a + b);
}

// ---------------------------------------------------------------------------
// Maxwellian
// ---------------------------------------------------------------------------

/// mu(v) = (2 pi)^{-3/2} exp(-|v|^2/2) and companions.
struct Maxwellian {
  static double value_r(double r) {
    return std::pow(2.0 * kPi, -1.5) * std::exp(-0.5 * r * r);
  }
  static double value(const std::array<double, 3>& v) { return value_r(norm3(v)); }
  static double sqrt_r(double r) {
    return std::pow(2.0 * kPi, -0.75) * std::exp(-0.25 * r * r);
  }
  static double sqrt(const std::array<double, 3>& v) { return sqrt_r(norm3(v)); }
  /// grad mu^{1/2} = -(v/2) mu^{1/2}
  static std::array<double, 3> grad_sqrt(const std::array<double, 3>& v) {
    double m = sqrt(v);
    return {-0.5 * v[0] * m, -0.5 * v[1] * m, -0.5 * v[2] * m};
  }
};

// ---------------------------------------------------------------------------
// Angular kernel b^eps and full kernel B^eps
// ---------------------------------------------------------------------------

/// b^eps as a function of u = sin(theta/2):
///   (1-s) eps^{2s-2} u^{-2-2s} for 0 < u <= eps, zero for u > eps.
inline double b_eps(const ModelParams& p, double u) {
  if (!(u > 0.0)) throw std::domain_error("b_eps: need sin(theta/2) > 0");
  if (u > p.eps) return 0.0;
  return (1.0 - p.s) * std::pow(p.eps, 2.0 * p.s - 2.0) * std::pow(u, -2.0 - 2.0 * p.s);
}

/// B^eps(z, sigma) = C_B |z|^gamma b^eps(u), supported on z.sigma >= 0.
/// The singular endpoint theta = 0 is the caller's responsibility: quadrature
/// rules never sample it.
inline double kernel_B_eps(const ModelParams& p, const std::array<double, 3>& z,
                           const std::array<double, 3>& sigma) {
  double r = norm3(z);
  if (!(r > 0.0)) throw std::domain_error("kernel_B_eps: |v - v_*| = 0");
  double cos_theta = (z[0] * sigma[0] + z[1] * sigma[1] + z[2] * sigma[2]) / r;
  if (cos_theta < 0.0) return 0.0;  // support restriction (A4)
  if (cos_theta > 1.0) cos_theta = 1.0;
  double u = std::sqrt(0.5 * (1.0 - cos_theta));
  return p.c_b * std::pow(r, p.gamma) * b_eps(p, u);
}

// ---------------------------------------------------------------------------
// Landau coefficients
// ---------------------------------------------------------------------------

/// a(z) = Lambda |z|^{gamma+2} (I - z zT / |z|^2), symmetric PSD, a(z) z = 0.
inline std::array<std::array<double, 3>, 3> landau_a(const ModelParams& p,
                                                     const std::array<double, 3>& z) {
  double r = norm3(z);
  if (!(r > 0.0)) throw std::domain_error("landau_a: z = 0");
  double c = p.lambda_landau * std::pow(r, p.gamma + 2.0);
  std::array<std::array<double, 3>, 3> a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a[i][j] = c * ((i == j ? 1.0 : 0.0) - z[i] * z[j] / (r * r));
  return a;
}

/// Row divergence of a: (div a)_j = sum_i d_i a_{ij}(z) = -2 Lambda |z|^gamma z_j.
inline std::array<double, 3> landau_div_a(const ModelParams& p,
                                          const std::array<double, 3>& z) {
  double r = norm3(z);
  if (!(r > 0.0)) throw std::domain_error("landau_div_a: z = 0");
  double c = -2.0 * p.lambda_landau * std::pow(r, p.gamma);
  return {c * z[0], c * z[1], c * z[2]};
}

// ---------------------------------------------------------------------------
// Characteristic weight W^eps and toy coefficient
// ---------------------------------------------------------------------------

/// W^eps(y) = zeta(eps|y|) <y> + (1 - zeta(eps|y|)) <1/eps>^{1-s} <y>^s.
/// Radial; exposes the scalar form.
inline double w_eps(const ModelParams& p, double y_norm) {
  double zt = zeta(p.eps * y_norm);
  double lo = bracket(y_norm);
  if (zt >= 1.0) return lo;
  double hi = std::pow(bracket(1.0 / p.eps), 1.0 - p.s) * std::pow(lo, p.s);
  return zt * lo + (1.0 - zt) * hi;
}

inline double w_eps(const ModelParams& p, const std::array<double, 3>& y) {
  return w_eps(p, norm3(y));
}

/// Toy-model decay coefficient
///   a_eps(v) = zeta(eps|v|) <v>^{gamma+2} + (1-zeta) <v>^{gamma+2s} / eps^{2(1-s)}.
inline double a_eps_toy(const ModelParams& p, double v_norm) {
  double zt = zeta(p.eps * v_norm);
  double br = bracket(v_norm);
  double lo = std::pow(br, p.gamma + 2.0);
  if (zt >= 1.0) return lo;
  double hi = std::pow(br, p.gamma + 2.0 * p.s) * std::pow(p.eps, -2.0 * (1.0 - p.s));
  return zt * lo + (1.0 - zt) * hi;
}

// ---------------------------------------------------------------------------
// Closed-form symbol E^eps
// ---------------------------------------------------------------------------

/// E^eps(xi) = |xi|^2 on |xi| <= 1/eps, and
/// eps^{2s-2} [ (|xi|^{2s} - eps^{-2s})/s + eps^{-2s} ] above.
inline double symbol_E_closed(const ModelParams& p, double xi_norm) {
  if (xi_norm < 0.0) throw std::domain_error("symbol_E_closed: |xi| < 0");
  if (xi_norm <= 1.0 / p.eps) return xi_norm * xi_norm;
  double e2s = std::pow(p.eps, -2.0 * p.s);
  return std::pow(p.eps, 2.0 * p.s - 2.0) *
         ((std::pow(xi_norm, 2.0 * p.s) - e2s) / p.s + e2s);
}

// ---------------------------------------------------------------------------
// Decay schedule
// ---------------------------------------------------------------------------

/// Transition time, stretched exponent and interpolating schedule A_eps(t)
/// for the exponential -> sub-exponential decay switch.
struct DecaySchedule {
  ModelParams params;
  double kappa = 0.0;  // 1 / (1 + |gamma+2s|)
  double t_eps = 0.0;  // (1/eps)^{2(1-s)/|gamma+2s|}

  explicit DecaySchedule(const ModelParams& p) : params(p) {
    double g = p.abs_gamma_2s();
    if (!(g > 0.0))
      throw std::domain_error("DecaySchedule: |gamma + 2s| must be positive");
    kappa = 1.0 / (1.0 + g);
    t_eps = std::pow(1.0 / p.eps, 2.0 * (1.0 - p.s) / g);
  }

  /// A_eps(t) = zeta(t/T_eps) t + (1 - zeta(t/T_eps)) (t / eps^{2(1-s)})^kappa.
  double operator()(double t) const {
    if (t < 0.0) throw std::domain_error("DecaySchedule: t < 0");
    double zt = zeta(t / t_eps);
    double late = std::pow(t * std::pow(params.eps, -2.0 * (1.0 - params.s)), kappa);
    if (zt >= 1.0) return t;
    if (zt <= 0.0) return late;
    return zt * t + (1.0 - zt) * late;
  }
};

// ---------------------------------------------------------------------------
// Polynomial-exponential weight W_{l,q}
// ---------------------------------------------------------------------------

/// W_{l,q}(v) = <v>^l exp(q <v>), submultiplicative under translation.
struct WeightLQ {
  double l = 0.0;
  double q = 0.0;
  double operator()(double v_norm) const {
    double br = bracket(v_norm);
    return std::pow(br, l) * std::exp(q * br);
  }
  double operator()(const std::array<double, 3>& v) const { return (*this)(norm3(v)); }
};

// ---------------------------------------------------------------------------
// Scalar integrals of the angular kernel
// ---------------------------------------------------------------------------

/// lambda_e = int_0^{pi/2} b^eps(cos theta) sin(theta) (1 - cos theta) dtheta,
/// by adaptive quadrature in u = sin(theta/2). Equals 4 for eps <= sin(pi/4).
double lambda_e(const ModelParams& p);

/// Cancellation-lemma constant: C(eps) such that
/// int B^eps g_* (h' - h) = C(eps) int |v-v_*|^gamma g_* h. Closed reduction
/// C(eps) = 2 pi int sin(theta) b^eps [cos^{-(3+gamma)}(theta/2) - 1] dtheta,
/// evaluated adaptively.
double cancellation_constant(const ModelParams& p);

}  // namespace grazing
