#pragma once

#include <vector>

#include "jptri/poly.hpp"
#include "jptri/scalar.hpp"

namespace jptri {

/// One derivative-order pair (n, k), 0 <= k <= n.
struct IndexPair {
  int n = 0;
  int k = 0;
};

/// Weight parameters for r measures x^alpha_j y^beta_j (1-x-y)^gamma on the
/// triangle. All exponents must exceed -1 and the (alpha_j, beta_j) pairs must
/// be pairwise distinct.
struct ParamSet {
  std::vector<Scalar> alphas;
  std::vector<Scalar> betas;
  Scalar gamma;

  int measure_count() const { return static_cast<int>(alphas.size()); }
  bool is_exact() const;
  void validate() const;
};

void validate(const IndexPair& pair);
int total_order(const std::vector<IndexPair>& pairs);

/// Applies the j-th weighted-derivative operator
///   f -> W_j^{-1} d^n/(dx^(n-k) dy^k) (W_j x^(n-k) y^k f)
/// to the basis term x^l y^m (1-x-y)^(n_total-l-m). The result is the short
/// linear combination
///   sum_{p<=n-k} sum_{i<=k} c(p,i) x^(l+p) y^(m+i) (1-x-y)^(n_total-l-m-i-p)
/// with Pochhammer-product coefficients; no differentiation is performed.
/// Requires n_total - l - m >= pair.n so every emitted exponent stays
/// nonnegative. j is a zero-based measure index.
BaryPoly apply_D(const ParamSet& params, int j, const IndexPair& pair, int l, int m,
                 int n_total);

/// Linear extension of apply_D over all terms of p.
BaryPoly apply_D_poly(const ParamSet& params, int j, const IndexPair& pair,
                      const BaryPoly& p);

/// Composes the r operators (j = 0..r-1, in listed order) on the seed
/// (1-x-y)^(n_1+...+n_r). Total degree is exactly the sum of the n_j.
BaryPoly jp_poly_operator(const ParamSet& params, const std::vector<IndexPair>& pairs);

/// Closed-form construction for r = 2: assembles the c(l,m) table from the
/// A(p,i), B(p,i,h,s) Pochhammer products directly. Must agree with
/// jp_poly_operator coefficient by coefficient.
BaryPoly jp_poly_explicit(const ParamSet& params, const std::vector<IndexPair>& pairs);

}  // namespace jptri
