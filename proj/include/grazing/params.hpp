#pragma once

#include <stdexcept>
#include <string>

namespace grazing {

/// Thrown when a parameter set violates one of the kernel admissibility
/// ranges. `which` names the offending parameter.
class ConstraintViolation : public std::invalid_argument {
 public:
  ConstraintViolation(std::string which, std::string what)
      : std::invalid_argument(std::move(what)), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

/// Physical / rescaling parameters of the collision kernels.
///
/// Admissible ranges: -3 < gamma <= 0, 1/2 < s < 1, gamma + 2s > -1,
/// 0 < eps <= 1/2. Everything is dimensionless.
struct ModelParams {
  double gamma = -1.0;
  double s = 0.75;
  double eps = 0.1;
  double lambda_landau = 1.0;  // Landau strength, calibrated elsewhere
  double c_b = 1.0;            // kernel prefactor

  /// |gamma + 2s|, the exponent gap driving the decay transition.
  double abs_gamma_2s() const {
    double g = gamma + 2.0 * s;
    return g < 0 ? -g : g;
  }
};

/// Validates the raw triple and returns the parameter pack, or throws
/// ConstraintViolation naming the violated range.
inline ModelParams validate_params(double gamma, double s, double eps,
                                   double lambda_landau = 1.0,
                                   double c_b = 1.0) {
  if (!(gamma > -3.0 && gamma <= 0.0))
    throw ConstraintViolation("gamma", "gamma must satisfy -3 < gamma <= 0, got " +
                                           std::to_string(gamma));
  if (!(s > 0.5 && s < 1.0))
    throw ConstraintViolation("s", "s must satisfy 1/2 < s < 1, got " +
                                       std::to_string(s));
  if (!(gamma + 2.0 * s > -1.0))
    throw ConstraintViolation("gamma_2s", "gamma + 2s must exceed -1, got " +
                                              std::to_string(gamma + 2.0 * s));
  if (!(eps > 0.0 && eps <= 0.5))
    throw ConstraintViolation("eps", "eps must satisfy 0 < eps <= 1/2, got " +
                                         std::to_string(eps));
  if (!(lambda_landau > 0.0))
    throw ConstraintViolation("lambda_landau", "Landau strength must be positive");
  if (!(c_b > 0.0)) throw ConstraintViolation("c_b", "kernel prefactor must be positive");
  ModelParams p;
  p.gamma = gamma;
  p.s = s;
  p.eps = eps;
  p.lambda_landau = lambda_landau;
  p.c_b = c_b;
  return p;
}

/// Landau-path experiments additionally need gamma >= -2 for the
/// unregularized Dirichlet form.
inline void require_landau_range(const ModelParams& p) {
  if (p.gamma < -2.0)
    throw ConstraintViolation("gamma", "Landau assembly requires gamma >= -2, got " +
                                           std::to_string(p.gamma));
}

}  // namespace grazing
