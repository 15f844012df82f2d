#include "jptri/rodrigues.hpp"

#include <algorithm>
#include <stdexcept>

#include "jptri/specfun.hpp"

namespace jptri {

bool ParamSet::is_exact() const {
  for (const auto& a : alphas)
    if (!a.is_exact()) return false;
  for (const auto& b : betas)
    if (!b.is_exact()) return false;
  return gamma.is_exact();
}

void ParamSet::validate() const {
  const int r = measure_count();
  if (r < 1 || static_cast<int>(betas.size()) != r) {
    throw std::invalid_argument("ParamSet: need matching alpha/beta lists, r >= 1");
  }
  const Scalar minus_one(-1);
  if (!(gamma > minus_one)) throw std::invalid_argument("ParamSet: gamma must exceed -1");
  for (int j = 0; j < r; ++j) {
    if (!(alphas[j] > minus_one) || !(betas[j] > minus_one)) {
      throw std::invalid_argument("ParamSet: alpha_j, beta_j must exceed -1");
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (alphas[i] == alphas[j] && betas[i] == betas[j]) {
        throw std::invalid_argument("ParamSet: (alpha_j, beta_j) pairs must be distinct");
      }
    }
  }
}

void validate(const IndexPair& pair) {
  if (pair.k < 0 || pair.n < pair.k) {
    throw std::invalid_argument("IndexPair: need 0 <= k <= n");
  }
}

int total_order(const std::vector<IndexPair>& pairs) {
  int n = 0;
  for (const auto& p : pairs) n += p.n;
  return n;
}

BaryPoly apply_D(const ParamSet& params, int j, const IndexPair& pair, int l, int m,
                 int n_total) {
  validate(pair);
  if (j < 0 || j >= params.measure_count()) {
    throw std::invalid_argument("apply_D: measure index out of range");
  }
  if (l < 0 || m < 0 || l + m > n_total) {
    throw std::invalid_argument("apply_D: bad basis term");
  }
  if (n_total - l - m < pair.n) {
    throw std::invalid_argument(
        "apply_D: operator order exceeds the term's (1-x-y) exponent");
  }
  const Scalar& alpha = params.alphas[j];
  const Scalar& beta = params.betas[j];
  const Scalar& gamma = params.gamma;
  const int nk = pair.n - pair.k;
  const int k = pair.k;
  const int rem = n_total - l - m;

  BaryPoly out(n_total);
  for (int i = 0; i <= k; ++i) {
    Scalar ci = Scalar(binomial(k, i)) * pochhammer(beta + Scalar(m + i + 1), k - i) *
                pochhammer(gamma + Scalar(rem - i + 1), i);
    if (i % 2 != 0) ci = -ci;
    for (int p = 0; p <= nk; ++p) {
      Scalar cpi = ci * Scalar(binomial(nk, p)) *
                   pochhammer(alpha + Scalar(l + p + 1), nk - p) *
                   pochhammer(gamma + Scalar(rem - i - p + 1), p);
      if (p % 2 != 0) cpi = -cpi;
      out.add_coeff(l + p, m + i, cpi);
    }
  }
  return out;
}

BaryPoly apply_D_poly(const ParamSet& params, int j, const IndexPair& pair,
                      const BaryPoly& p) {
  BaryPoly out(p.total_degree());
  for (const auto& [key, c] : p.terms()) {
    BaryPoly image = apply_D(params, j, pair, key.l, key.m, p.total_degree());
    for (const auto& [ikey, ic] : image.terms()) {
      out.add_coeff(ikey.l, ikey.m, c * ic);
    }
  }
  return out;
}

BaryPoly jp_poly_operator(const ParamSet& params, const std::vector<IndexPair>& pairs) {
  params.validate();
  if (static_cast<int>(pairs.size()) != params.measure_count()) {
    throw std::invalid_argument("jp_poly_operator: one index pair per measure required");
  }
  for (const auto& pair : pairs) validate(pair);

  BaryPoly poly(total_order(pairs));
  poly.set_coeff(0, 0, params.is_exact() ? Scalar(1) : Scalar::real(1.0));
  for (int j = 0; j < params.measure_count(); ++j) {
    poly = apply_D_poly(params, j, pairs[j], poly);
  }
  return poly;
}

BaryPoly jp_poly_explicit(const ParamSet& params, const std::vector<IndexPair>& pairs) {
  params.validate();
  if (params.measure_count() != 2 || pairs.size() != 2) {
    throw std::invalid_argument("jp_poly_explicit: defined for exactly two measures");
  }
  for (const auto& pair : pairs) validate(pair);

  const int n1 = pairs[0].n, k1 = pairs[0].k;
  const int n2 = pairs[1].n, k2 = pairs[1].k;
  const int n = n1 + n2;
  const Scalar& a1 = params.alphas[0];
  const Scalar& b1 = params.betas[0];
  const Scalar& a2 = params.alphas[1];
  const Scalar& b2 = params.betas[1];
  const Scalar& g = params.gamma;

  // First-operator coefficients, zero outside 0<=p<=n1-k1, 0<=i<=k1.
  auto A = [&](int p, int i) -> Scalar {
    Scalar v = Scalar(binomial(n1 - k1, p)) * Scalar(binomial(k1, i)) *
               pochhammer(a1 + Scalar(p + 1), n1 - k1 - p) *
               pochhammer(b1 + Scalar(i + 1), k1 - i) *
               pochhammer(g + Scalar(n - i + 1), i) *
               pochhammer(g + Scalar(n - i - p + 1), p);
    if ((p + i) % 2 != 0) v = -v;
    return v;
  };
  // Second-operator coefficients applied to the (p, i) image term.
  auto B = [&](int p, int i, int h, int s) -> Scalar {
    Scalar v = Scalar(binomial(n2 - k2, h)) * Scalar(binomial(k2, s)) *
               pochhammer(a2 + Scalar(p + h + 1), n2 - k2 - h) *
               pochhammer(b2 + Scalar(i + s + 1), k2 - s) *
               pochhammer(g + Scalar(n - p - i - s + 1), s) *
               pochhammer(g + Scalar(n - p - i - h - s + 1), h);
    if ((h + s) % 2 != 0) v = -v;
    return v;
  };

  BaryPoly out(n);
  for (int l = 0; l <= n1 + n2 - k1 - k2; ++l) {
    for (int m = 0; m <= k1 + k2; ++m) {
      Scalar c = params.is_exact() ? Scalar(0) : Scalar::real(0.0);
      const int p_lo = std::max(0, l - (n2 - k2));
      const int p_hi = std::min(l, n1 - k1);
      const int i_lo = std::max(0, m - k2);
      const int i_hi = std::min(m, k1);
      for (int p = p_lo; p <= p_hi; ++p) {
        for (int i = i_lo; i <= i_hi; ++i) {
          c += A(p, i) * B(p, i, l - p, m - i);
        }
      }
      out.add_coeff(l, m, c);
    }
  }
  return out;
}

}  // namespace jptri
