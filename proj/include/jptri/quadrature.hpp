#pragma once

#include <functional>
#include <vector>

#include "jptri/poly.hpp"
#include "jptri/rodrigues.hpp"

namespace jptri {

/// Gaussian rule for integrals of the form  int_0^1 u^a (1-u)^b f(u) du,
/// exact for polynomial f of degree <= 2q-1. Weight singularities live in the
/// rule, never in f.
struct GaussJacobiRule {
  double exp_left = 0.0;   // a, exponent of u
  double exp_right = 0.0;  // b, exponent of (1-u)
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch construction (symmetric tridiagonal eigenproblem).
GaussJacobiRule gauss_jacobi_01(double a, double b, int q);

template <class F>
double integrate(const GaussJacobiRule& rule, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(rule.nodes[i]);
  }
  return acc;
}

/// Tensor rule for  int_T f(x,y) x^alpha y^beta (1-x-y)^gamma dx dy, built by
/// the substitution y = (1-x) t: outer weight x^alpha (1-x)^(beta+gamma+1),
/// inner weight t^beta (1-t)^gamma.
struct TriangleRule {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  int q = 0;
  GaussJacobiRule x_rule;
  GaussJacobiRule t_rule;
};

TriangleRule build_rule(double alpha, double beta, double gamma, int q);

template <class F>
double integrate(const TriangleRule& rule, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.x_rule.nodes.size(); ++i) {
    const double x = rule.x_rule.nodes[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < rule.t_rule.nodes.size(); ++j) {
      inner += rule.t_rule.weights[j] * f(x, (1.0 - x) * rule.t_rule.nodes[j]);
    }
    acc += rule.x_rule.weights[i] * inner;
  }
  return acc;
}

/// Direct quadrature of the double Stieltjes transform
///   int_T W_j(x,y) / ((z-x)(w-y)) dx dy.
/// Throws std::domain_error when z or w lies in [0,1]. j is zero-based.
double E_direct(const ParamSet& params, int j, double z, double w, int q);

/// Direct quadrature of  int_T (A(z,w) - A(x,y)) / ((z-x)(w-y)) dmu_j(x,y).
double phi_direct(const MonoPoly& A, const ParamSet& params, int j, double z, double w,
                  int q);

struct SelfConverged {
  double value = 0.0;
  double rel_change = 0.0;
  int q = 0;
  bool converged = false;
};

/// Doubles q until |I_q - I_{2q}| <= rel_tol * |I_{2q}|; returns the finer value.
SelfConverged self_converged(const std::function<double(int)>& eval, int q0,
                             double rel_tol, int max_doublings = 6);

}  // namespace jptri
