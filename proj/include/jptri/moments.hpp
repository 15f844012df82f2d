#pragma once

#include <vector>

#include "jptri/poly.hpp"
#include "jptri/rodrigues.hpp"

namespace jptri {

/// Exponents of a triangle moment integrand x^a y^b (1-x-y)^c; integrable
/// when every exponent exceeds -1.
struct MomentKey {
  Scalar a, b, c;
};

/// Integral of x^a y^b (1-x-y)^c over the unit triangle:
/// Gamma(a+1) Gamma(b+1) Gamma(c+1) / Gamma(a+b+c+3).
double simplex_moment(double a, double b, double c);
double simplex_moment(const MomentKey& key);

/// Integral of p(x,y) x^l y^m W_j over the triangle, divided by the common
/// factor Gamma(alpha_j+1) Gamma(beta_j+1) Gamma(gamma+1) / Gamma(alpha_j+
/// beta_j+gamma+N+l+m+3), which is positive: the sign and zero pattern match
/// the true integral, and the value is rational for rational parameters.
/// j is zero-based.
Scalar normalized_inner_product(const BaryPoly& p, int l, int m, const ParamSet& params,
                                int j);

/// Magnitude of the same sum with every term taken absolutely; the natural
/// scale for deciding float-mode zeros.
double normalized_inner_product_scale(const BaryPoly& p, int l, int m,
                                      const ParamSet& params, int j);

struct OrthogonalityEntry {
  int l = 0;
  int m = 0;
  bool in_set = false;
  Scalar residual;
};

struct MeasureOrthogonality {
  int measure = 0;  // 1-based in reports
  std::vector<OrthogonalityEntry> entries;
  bool pass = true;
  double max_in_set_abs = 0.0;
};

struct OrthogonalityReport {
  std::vector<MeasureOrthogonality> measures;
  bool pass = true;
  double max_in_set_abs = 0.0;
};

/// Tests p against every monomial x^l y^m with l+m <= max_total_degree, for
/// every measure. A pair is in the asserted condition set when l < n_j - k_j
/// or m < k_j (the strict set); boundary pairs are measured and reported but
/// not asserted. Exact-mode residuals must vanish identically; real-mode
/// residuals must stay within tol of zero.
OrthogonalityReport verify_orthogonality(const BaryPoly& p, const ParamSet& params,
                                         const std::vector<IndexPair>& pairs,
                                         int max_total_degree, double tol = 1e-10);

/// Convenience overload: builds the operator polynomial first.
OrthogonalityReport verify_orthogonality(const ParamSet& params,
                                         const std::vector<IndexPair>& pairs,
                                         int max_total_degree, double tol = 1e-10);

}  // namespace jptri
