#include "jptri/poly.hpp"

#include <stdexcept>

#include "jptri/specfun.hpp"

namespace jptri {

namespace {

template <class Map>
Scalar coeff_or_zero(const Map& terms, int l, int m) {
  auto it = terms.find(TermKey{l, m});
  if (it == terms.end()) return Scalar(0);
  return it->second;
}

template <class Map>
bool maps_identical(const Map& a, const Map& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

Scalar power(const Scalar& base, int e) {
  Scalar acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

BaryPoly::BaryPoly(int total_degree) : degree_(total_degree) {
  if (total_degree < 0) throw std::invalid_argument("BaryPoly: negative degree");
}

void BaryPoly::check_key(int l, int m) const {
  if (l < 0 || m < 0 || l + m > degree_) {
    throw std::out_of_range("BaryPoly: term exponents outside the degree budget");
  }
}

Scalar BaryPoly::coeff(int l, int m) const { return coeff_or_zero(terms_, l, m); }

void BaryPoly::set_coeff(int l, int m, Scalar value) {
  check_key(l, m);
  if (value.is_zero()) {
    terms_.erase(TermKey{l, m});
  } else {
    terms_[TermKey{l, m}] = std::move(value);
  }
}

void BaryPoly::add_coeff(int l, int m, const Scalar& value) {
  check_key(l, m);
  auto [it, inserted] = terms_.try_emplace(TermKey{l, m}, value);
  if (!inserted) it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar BaryPoly::evaluate(const Scalar& x, const Scalar& y) const {
  Scalar s = Scalar(1) - x - y;
  Scalar acc(0);
  if (!x.is_exact() || !y.is_exact()) acc = Scalar::real(0.0);
  for (const auto& [key, c] : terms_) {
    acc += c * power(x, key.l) * power(y, key.m) * power(s, degree_ - key.l - key.m);
  }
  return acc;
}

MonoPoly::MonoPoly(int total_degree) : degree_(total_degree) {
  if (total_degree < 0) throw std::invalid_argument("MonoPoly: negative degree");
}

void MonoPoly::check_key(int l, int m) const {
  if (l < 0 || m < 0 || l + m > degree_) {
    throw std::out_of_range("MonoPoly: term exponents outside the degree budget");
  }
}

Scalar MonoPoly::coeff(int l, int m) const { return coeff_or_zero(terms_, l, m); }

void MonoPoly::set_coeff(int l, int m, Scalar value) {
  check_key(l, m);
  if (value.is_zero()) {
    terms_.erase(TermKey{l, m});
  } else {
    terms_[TermKey{l, m}] = std::move(value);
  }
}

void MonoPoly::add_coeff(int l, int m, const Scalar& value) {
  check_key(l, m);
  auto [it, inserted] = terms_.try_emplace(TermKey{l, m}, value);
  if (!inserted) it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar MonoPoly::evaluate(const Scalar& z, const Scalar& w) const {
  Scalar acc(0);
  if (!z.is_exact() || !w.is_exact()) acc = Scalar::real(0.0);
  for (const auto& [key, c] : terms_) {
    acc += c * power(z, key.l) * power(w, key.m);
  }
  return acc;
}

double MonoPoly::evaluate(double z, double w) const {
  double acc = 0.0;
  for (const auto& [key, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < key.l; ++i) t *= z;
    for (int i = 0; i < key.m; ++i) t *= w;
    acc += t;
  }
  return acc;
}

MonoPoly bary_to_mono(const BaryPoly& p) {
  const int N = p.total_degree();
  MonoPoly out(N);
  for (const auto& [key, c] : p.terms()) {
    const int s = N - key.l - key.m;
    // (1-x-y)^s = sum_{u+v<=s} s!/(u! v! (s-u-v)!) (-1)^(u+v) x^u y^v
    for (int u = 0; u <= s; ++u) {
      Rational row = binomial(s, u);
      for (int v = 0; v + u <= s; ++v) {
        Rational coef = row * binomial(s - u, v);
        if ((u + v) % 2 != 0) coef = -coef;
        out.add_coeff(key.l + u, key.m + v, c * Scalar(coef));
      }
    }
  }
  return out;
}

BaryPoly scale_add(const BaryPoly& p, const BaryPoly& q, const Scalar& c) {
  if (p.total_degree() != q.total_degree()) {
    throw std::invalid_argument("scale_add: degree budgets differ");
  }
  BaryPoly out = p;
  for (const auto& [key, qc] : q.terms()) {
    out.add_coeff(key.l, key.m, c * qc);
  }
  return out;
}

bool identical(const BaryPoly& a, const BaryPoly& b) {
  return a.total_degree() == b.total_degree() && maps_identical(a.terms(), b.terms());
}

bool identical(const MonoPoly& a, const MonoPoly& b) {
  return a.total_degree() == b.total_degree() && maps_identical(a.terms(), b.terms());
}

}  // namespace jptri
