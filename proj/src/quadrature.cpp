#include "jptri/quadrature.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "jptri/specfun.hpp"

namespace jptri {

namespace {

// Recurrence coefficients of monic Jacobi polynomials on [-1,1] with weight
// (1-xi)^A (1+xi)^B, Gautschi's normalization.
double jacobi_diag(double A, double B, int k) {
  if (k == 0) return (B - A) / (A + B + 2.0);
  const double t = 2.0 * k + A + B;
  return (B * B - A * A) / (t * (t + 2.0));
}

double jacobi_offdiag_sq(double A, double B, int k) {
  if (k == 1) {
    return 4.0 * (A + 1.0) * (B + 1.0) / ((A + B + 2.0) * (A + B + 2.0) * (A + B + 3.0));
  }
  const double t = 2.0 * k + A + B;
  return 4.0 * k * (k + A) * (k + B) * (k + A + B) /
         (t * t * (t + 1.0) * (t - 1.0));
}

}  // namespace

GaussJacobiRule gauss_jacobi_01(double a, double b, int q) {
  if (!(a > -1.0) || !(b > -1.0)) {
    throw std::domain_error("gauss_jacobi_01: weight exponents must exceed -1");
  }
  if (q < 1) throw std::invalid_argument("gauss_jacobi_01: need q >= 1");

  // [0,1] with u^a (1-u)^b maps to [-1,1] with (1-xi)^b (1+xi)^a.
  const double A = b, B = a;
  Eigen::VectorXd diag(q), offdiag(q > 1 ? q - 1 : 0);
  for (int k = 0; k < q; ++k) diag[k] = jacobi_diag(A, B, k);
  for (int k = 1; k < q; ++k) offdiag[k - 1] = std::sqrt(jacobi_offdiag_sq(A, B, k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi_01: eigen decomposition failed");
  }

  // Total mass of u^a (1-u)^b on [0,1] is Beta(a+1, b+1).
  const double mu0 = std::exp(ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(a + b + 2.0));

  GaussJacobiRule rule;
  rule.exp_left = a;
  rule.exp_right = b;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  double wsum = 0.0;
  for (int i = 0; i < q; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[i] = 0.5 * (1.0 + solver.eigenvalues()[i]);
    rule.weights[i] = v0 * v0;  // relative weights; normalized below
    wsum += rule.weights[i];
  }
  for (int i = 0; i < q; ++i) rule.weights[i] *= mu0 / wsum;
  return rule;
}

TriangleRule build_rule(double alpha, double beta, double gamma, int q) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !(gamma > -1.0)) {
    throw std::domain_error("build_rule: weight exponents must exceed -1");
  }
  TriangleRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.gamma = gamma;
  rule.q = q;
  rule.x_rule = gauss_jacobi_01(alpha, beta + gamma + 1.0, q);
  rule.t_rule = gauss_jacobi_01(beta, gamma, q);
  return rule;
}

double E_direct(const ParamSet& params, int j, double z, double w, int q) {
  if (j < 0 || j >= params.measure_count()) {
    throw std::invalid_argument("E_direct: measure index out of range");
  }
  if ((z >= 0.0 && z <= 1.0) || (w >= 0.0 && w <= 1.0)) {
    throw std::domain_error("E_direct: z and w must lie outside [0,1]");
  }
  TriangleRule rule = build_rule(params.alphas[j].to_double(),
                                 params.betas[j].to_double(),
                                 params.gamma.to_double(), q);
  return integrate(rule, [&](double x, double y) { return 1.0 / ((z - x) * (w - y)); });
}

double phi_direct(const MonoPoly& A, const ParamSet& params, int j, double z, double w,
                  int q) {
  if (j < 0 || j >= params.measure_count()) {
    throw std::invalid_argument("phi_direct: measure index out of range");
  }
  if ((z >= 0.0 && z <= 1.0) || (w >= 0.0 && w <= 1.0)) {
    throw std::domain_error("phi_direct: z and w must lie outside [0,1]");
  }
  TriangleRule rule = build_rule(params.alphas[j].to_double(),
                                 params.betas[j].to_double(),
                                 params.gamma.to_double(), q);
  const double a_zw = A.evaluate(z, w);
  return integrate(rule, [&](double x, double y) {
    return (a_zw - A.evaluate(x, y)) / ((z - x) * (w - y));
  });
}

SelfConverged self_converged(const std::function<double(int)>& eval, int q0,
                             double rel_tol, int max_doublings) {
  SelfConverged out;
  out.q = q0;
  double coarse = eval(q0);
  for (int step = 0; step < max_doublings; ++step) {
    const int q2 = out.q * 2;
    const double fine = eval(q2);
    out.rel_change = std::fabs(fine - coarse) /
                     (std::fabs(fine) > 0.0 ? std::fabs(fine) : 1.0);
    out.value = fine;
    out.q = q2;
    if (out.rel_change <= rel_tol) {
      out.converged = true;
      return out;
    }
    coarse = fine;
  }
  return out;
}

}  // namespace jptri
