#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace jptri {

/// Arbitrary-precision rational, kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or a plain integer. Throws std::invalid_argument on bad input.
Rational rational_from_string(const std::string& text);

/// Canonical "p/q" form, denominator always printed ("0/1", "-3/2", ...).
std::string rational_to_string(const Rational& value);

/// Shortest decimal that round-trips through strtod, at most 17 significant digits.
std::string format_double_shortest(double value);

enum class ScalarMode { exact, real };

/// A number carried either as an exact rational or as a double. Arithmetic
/// between two exact values stays exact; anything touching a real value
/// collapses the result to real.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(Rational v) : value_(std::move(v)) { canonicalize(); }

  static Scalar real(double v) {
    Scalar s;
    s.value_ = v;
    return s;
  }
  static Scalar exact(long num, long den = 1) { return Scalar(make_rational(num, den)); }

  ScalarMode mode() const {
    return std::holds_alternative<Rational>(value_) ? ScalarMode::exact : ScalarMode::real;
  }
  bool is_exact() const { return mode() == ScalarMode::exact; }

  /// Exact value; throws std::logic_error when in real mode.
  const Rational& rational() const;
  double to_double() const;

  bool is_zero() const;
  int sign() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact comparison when both operands are exact, double comparison otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

  /// "p/q" in exact mode, shortest round-trip decimal in real mode.
  std::string str() const;

 private:
  static int compare(const Scalar& a, const Scalar& b);
  void canonicalize();

  std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct ParsedScalar {
  Scalar value;
  bool was_decimal = false;  // true when the text forced real mode
};

/// Accepts "p/q", integers (exact mode) and decimal/scientific literals (real mode).
ParsedScalar parse_scalar(const std::string& text);

}  // namespace jptri
