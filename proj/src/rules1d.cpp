#include "grazing/quadrature/rules1d.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace grazing {

namespace {

// Golub-Welsch: nodes/weights from the symmetric Jacobi matrix of the
// three-term recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}.
Rule1D golub_welsch(const std::vector<double>& alpha, const std::vector<double>& beta,
                    double mu0) {
  const int n = static_cast<int>(alpha.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = alpha[i];
    if (i + 1 < n) {
      double off = std::sqrt(beta[i + 1]);
      J(i, i + 1) = off;
      J(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}

}  // namespace

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  std::vector<double> alpha(n, 0.0), beta(n, 0.0);
  for (int k = 1; k < n; ++k) {
    double kk = static_cast<double>(k);
    beta[k] = kk * kk / ((2.0 * kk - 1.0) * (2.0 * kk + 1.0));
  }
  return golub_welsch(alpha, beta, 2.0);
}

Rule1D gauss_legendre_ab(int n, double a, double b) {
  Rule1D base = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < base.size(); ++i) {
    base.nodes[i] = mid + half * base.nodes[i];
    base.weights[i] *= half;
  }
  return base;
}

Rule1D gauss_hermite_phys(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite_phys: n >= 1");
  std::vector<double> alpha(n, 0.0), beta(n, 0.0);
  for (int k = 1; k < n; ++k) beta[k] = 0.5 * k;
  const double sqrt_pi = std::sqrt(3.14159265358979323846264338327950288);
  return golub_welsch(alpha, beta, sqrt_pi);
}

Rule1D gauss_hermite_prob(int n) {
  Rule1D base = gauss_hermite_phys(n);
  const double norm = 1.0 / std::sqrt(3.14159265358979323846264338327950288);
  for (std::size_t i = 0; i < base.size(); ++i) {
    base.nodes[i] *= std::sqrt(2.0);
    base.weights[i] *= norm;  // weights now sum to 1
  }
  return base;
}

double radial_moment(double a, int k) {
  return std::pow(2.0, a + k) * std::tgamma(0.5 * (a + k + 1.0));
}

Rule1D radial_gauss(double a, int n) {
  if (!(a > -1.0)) throw std::invalid_argument("radial_gauss: need a > -1");
  if (n < 1) throw std::invalid_argument("radial_gauss: n >= 1");

  // Discretize the measure rho^a exp(-rho^2/4) drho on (0, R] with
  // geometrically graded Gauss-Legendre panels near 0 (resolving rho^a) and
  // uniform panels to the far tail. R = 30 leaves a tail below 1e-90.
  const double R = 30.0;
  std::vector<double> xs, ws;
  const int p_order = 24;
  Rule1D gl = gauss_legendre(p_order);
  auto add_panel = [&](double lo, double hi) {
    for (std::size_t i = 0; i < gl.size(); ++i) {
      double x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i];
      double w = 0.5 * (hi - lo) * gl.weights[i];
      xs.push_back(x);
      ws.push_back(w * std::pow(x, a) * std::exp(-0.25 * x * x));
    }
  };
  double lo = 1e-12;
  // graded panels [lo, 1]
  while (lo < 1.0) {
    double hi = std::min(1.0, lo * 4.0);
    add_panel(lo, hi);
    lo = hi;
  }
  for (double x = 1.0; x < R; x += 1.0) add_panel(x, std::min(x + 1.0, R));

  // Stieltjes recurrence coefficients from discrete inner products.
  const int m = static_cast<int>(xs.size());
  std::vector<double> pk(m, 1.0), pkm1(m, 0.0);
  std::vector<double> alpha(n, 0.0), beta(n, 0.0);
  double nrm2 = 0.0, mu0 = 0.0;
  for (int i = 0; i < m; ++i) mu0 += ws[i];
  nrm2 = mu0;
  for (int k = 0; k < n; ++k) {
    double xp2 = 0.0;
    for (int i = 0; i < m; ++i) xp2 += ws[i] * xs[i] * pk[i] * pk[i];
    alpha[k] = xp2 / nrm2;
    if (k + 1 < n || true) {
      // advance the recurrence
      std::vector<double> pkp1(m);
      for (int i = 0; i < m; ++i)
        pkp1[i] = (xs[i] - alpha[k]) * pk[i] - (k > 0 ? beta[k] : 0.0) * pkm1[i];
      double nrm2_next = 0.0;
      for (int i = 0; i < m; ++i) nrm2_next += ws[i] * pkp1[i] * pkp1[i];
      if (k + 1 < n) beta[k + 1] = nrm2_next / nrm2;
      pkm1.swap(pk);
      pk.swap(pkp1);
      nrm2 = nrm2_next;
    }
  }
  return golub_welsch(alpha, beta, mu0);
}

namespace {

// 15-point Kronrod extension of 7-point Gauss (standard coefficients).
const double kKronrodX[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                             0.741531185599394, 0.586087235467691, 0.405845151377397,
                             0.207784955007898, 0.0};
const double kKronrodW[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                             0.140653259715525, 0.169004726639267, 0.190350578064785,
                             0.204432940075298, 0.209482141084728};
const double kGaussW[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct GKResult {
  double value;
  double error;
};

GKResult gk15(const std::function<double(double)>& f, double a, double b) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double fc = f(mid);
  double res_k = fc * kKronrodW[7];
  double res_g = fc * kGaussW[3];
  for (int i = 0; i < 7; ++i) {
    double dx = half * kKronrodX[i];
    double fl = f(mid - dx), fr = f(mid + dx);
    res_k += kKronrodW[i] * (fl + fr);
    if (i % 2 == 1) res_g += kGaussW[i / 2] * (fl + fr);
  }
  res_k *= half;
  res_g *= half;
  return {res_k, std::abs(res_k - res_g)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol_abs,
             int depth) {
  GKResult r = gk15(f, a, b);
  if (r.error <= tol_abs || depth <= 0) {
    if (depth <= 0 && r.error > 64.0 * tol_abs)
      throw std::runtime_error("adaptive_quadrature: subdivision exhausted");
    return r.value;
  }
  double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol_abs, depth - 1) +
         adapt(f, mid, b, 0.5 * tol_abs, depth - 1);
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, int max_depth) {
  GKResult whole = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::abs(whole.value));
  if (tol <= 0.0) tol = 1e-300;
  if (whole.error <= tol) return whole.value;
  double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, max_depth) + adapt(f, mid, b, 0.5 * tol, max_depth);
}

}  // namespace grazing
