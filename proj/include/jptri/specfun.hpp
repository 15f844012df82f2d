#pragma once

#include <stdexcept>

#include "jptri/scalar.hpp"

namespace jptri {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, int n);
double pochhammer(double a, int n);
Scalar pochhammer(const Scalar& a, int n);

/// Gamma ratio Gamma(base+shift)/Gamma(base), i.e. the rising factorial (base)_shift.
struct GammaRatioKey {
  Scalar base;
  int shift = 0;

  Scalar value() const { return pochhammer(base, shift); }
};

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 607/128, 15 terms);
/// relative error below 1e-13 on [0.5, 200]. Throws std::domain_error for x <= 0.
double ln_gamma(double x);

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gauss hypergeometric series 2F1(a, b; c; z) for |z| < 1, c not a nonpositive
/// integer. Sums until the estimated tail drops below tol * |partial sum|;
/// throws ConvergenceError past max_terms.
double gauss_2f1(double a, double b, double c, double z, double tol = 1e-14,
                 long max_terms = 1000000);

/// Binomial coefficient C(n, k) as an exact rational (0 for k < 0 or k > n).
Rational binomial(int n, int k);

}  // namespace jptri
