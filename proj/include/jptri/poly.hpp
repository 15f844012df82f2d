#pragma once

#include <compare>
#include <map>

#include "jptri/scalar.hpp"

namespace jptri {

struct TermKey {
  int l = 0;
  int m = 0;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Bivariate polynomial written in the triangle basis x^l y^m (1-x-y)^(N-l-m)
/// for a fixed degree budget N. Keys satisfy l, m >= 0 and l + m <= N; exact
/// zero coefficients are dropped on insertion. Iteration is lexicographic in
/// (l, m), so emitted output is deterministic.
class BaryPoly {
 public:
  explicit BaryPoly(int total_degree);

  int total_degree() const { return degree_; }
  const std::map<TermKey, Scalar>& terms() const { return terms_; }

  Scalar coeff(int l, int m) const;
  void set_coeff(int l, int m, Scalar value);
  void add_coeff(int l, int m, const Scalar& value);

  bool is_zero() const { return terms_.empty(); }
  Scalar evaluate(const Scalar& x, const Scalar& y) const;

 private:
  void check_key(int l, int m) const;

  int degree_;
  std::map<TermKey, Scalar> terms_;
};

/// Bivariate polynomial in the monomial basis z^l w^m, l + m <= N.
class MonoPoly {
 public:
  explicit MonoPoly(int total_degree);

  int total_degree() const { return degree_; }
  const std::map<TermKey, Scalar>& terms() const { return terms_; }

  Scalar coeff(int l, int m) const;
  void set_coeff(int l, int m, Scalar value);
  void add_coeff(int l, int m, const Scalar& value);

  bool is_zero() const { return terms_.empty(); }
  Scalar evaluate(const Scalar& z, const Scalar& w) const;
  double evaluate(double z, double w) const;

 private:
  void check_key(int l, int m) const;

  int degree_;
  std::map<TermKey, Scalar> terms_;
};

/// Expands each (1-x-y)^(N-l-m) factor; the result represents the same
/// function of (x, y).
MonoPoly bary_to_mono(const BaryPoly& p);

/// p + c*q. Requires matching degree budgets.
BaryPoly scale_add(const BaryPoly& p, const BaryPoly& q, const Scalar& c);

/// Coefficientwise equality (exact when both sides are exact).
bool identical(const BaryPoly& a, const BaryPoly& b);
bool identical(const MonoPoly& a, const MonoPoly& b);

}  // namespace jptri
