#include "jptri/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace jptri {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_double_shortest(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw std::logic_error("Scalar::rational() on real-mode value");
  return std::get<Rational>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<Rational>(value_).get_d();
  return std::get<double>(value_);
}

bool Scalar::is_zero() const {
  if (is_exact()) return sgn(std::get<Rational>(value_)) == 0;
  return std::get<double>(value_) == 0.0;
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<Rational>(value_));
  double v = std::get<double>(value_);
  return (v > 0.0) - (v < 0.0);
}

void Scalar::canonicalize() {
  if (is_exact()) std::get<Rational>(value_).canonicalize();
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    return cmp(std::get<Rational>(a.value_), std::get<Rational>(b.value_));
  }
  double x = a.to_double(), y = b.to_double();
  return (x > y) - (x < y);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) += rhs.rational();
  } else {
    value_ = to_double() + rhs.to_double();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) -= rhs.rational();
  } else {
    value_ = to_double() - rhs.to_double();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) *= rhs.rational();
  } else {
    value_ = to_double() * rhs.to_double();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    if (rhs.is_zero()) throw std::domain_error("exact division by zero");
    std::get<Rational>(value_) /= rhs.rational();
  } else {
    value_ = to_double() / rhs.to_double();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar::real(-std::get<double>(value_));
}

std::string Scalar::str() const {
  if (is_exact()) return rational_to_string(rational());
  return format_double_shortest(std::get<double>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

ParsedScalar parse_scalar(const std::string& text) {
  if (text.find_first_of(".eE") != std::string::npos &&
      text.find('/') == std::string::npos) {
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
      throw std::invalid_argument("bad numeric literal: '" + text + "'");
    }
    return {Scalar::real(v), true};
  }
  return {Scalar(rational_from_string(text)), false};
}

}  // namespace jptri
