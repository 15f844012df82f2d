#pragma once

#include <random>
#include <vector>

#include "jptri/poly.hpp"
#include "jptri/rodrigues.hpp"

namespace jptri::testsupport {

// Rational in (-1, 4] with denominator <= 6. Keeps every weight exponent
// integrable and the Pochhammer products small.
inline Rational random_rational_param(std::mt19937& rng) {
  std::uniform_int_distribution<int> den_d(1, 6);
  const int den = den_d(rng);
  std::uniform_int_distribution<int> num_d(-den + 1, 4 * den);
  return make_rational(num_d(rng), den);
}

inline ParamSet random_param_set(std::mt19937& rng, int r) {
  ParamSet out;
  out.gamma = Scalar(random_rational_param(rng));
  for (int j = 0; j < r; ++j) {
    while (true) {
      Scalar a(random_rational_param(rng));
      Scalar b(random_rational_param(rng));
      bool clash = false;
      for (int i = 0; i < j; ++i) {
        if (out.alphas[i] == a && out.betas[i] == b) clash = true;
      }
      if (!clash) {
        out.alphas.push_back(a);
        out.betas.push_back(b);
        break;
      }
    }
  }
  return out;
}

inline Rational random_rational_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> num_d(-9, 9);
  std::uniform_int_distribution<int> den_d(1, 4);
  return make_rational(num_d(rng), den_d(rng));
}

inline BaryPoly random_bary_poly(std::mt19937& rng, int degree, int max_terms) {
  BaryPoly p(degree);
  std::uniform_int_distribution<int> l_d(0, degree);
  for (int t = 0; t < max_terms; ++t) {
    const int l = l_d(rng);
    std::uniform_int_distribution<int> m_d(0, degree - l);
    p.add_coeff(l, m_d(rng), Scalar(random_rational_coeff(rng)));
  }
  return p;
}

// Rational point strictly inside the triangle: x, y > 0, x + y < 1.
inline std::pair<Rational, Rational> random_interior_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> den_d(3, 12);
  const int den = den_d(rng);
  std::uniform_int_distribution<int> num_d(1, den - 2);
  const int a = num_d(rng);
  std::uniform_int_distribution<int> num2_d(1, den - a - 1);
  return {make_rational(a, den), make_rational(num2_d(rng), den)};
}

inline std::vector<IndexPair> random_pairs(std::mt19937& rng, int r, int max_total) {
  std::vector<IndexPair> pairs(r);
  while (true) {
    int total = 0;
    for (auto& p : pairs) {
      std::uniform_int_distribution<int> n_d(0, max_total);
      p.n = n_d(rng);
      std::uniform_int_distribution<int> k_d(0, p.n);
      p.k = k_d(rng);
      total += p.n;
    }
    if (total <= max_total) return pairs;
  }
}

}  // namespace jptri::testsupport
