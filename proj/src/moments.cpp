#include "jptri/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jptri/specfun.hpp"

namespace jptri {

double simplex_moment(double a, double b, double c) {
  if (!(a > -1.0) || !(b > -1.0) || !(c > -1.0)) {
    throw std::domain_error("simplex_moment: exponents must exceed -1");
  }
  return std::exp(ln_gamma(a + 1.0) + ln_gamma(b + 1.0) + ln_gamma(c + 1.0) -
                  ln_gamma(a + b + c + 3.0));
}

double simplex_moment(const MomentKey& key) {
  return simplex_moment(key.a.to_double(), key.b.to_double(), key.c.to_double());
}

Scalar normalized_inner_product(const BaryPoly& p, int l, int m, const ParamSet& params,
                                int j) {
  if (j < 0 || j >= params.measure_count()) {
    throw std::invalid_argument("normalized_inner_product: measure index out of range");
  }
  if (l < 0 || m < 0) {
    throw std::invalid_argument("normalized_inner_product: negative monomial exponents");
  }
  const Scalar& alpha = params.alphas[j];
  const Scalar& beta = params.betas[j];
  const Scalar& gamma = params.gamma;
  const int N = p.total_degree();

  Scalar acc = params.is_exact() ? Scalar(0) : Scalar::real(0.0);
  for (const auto& [key, c] : p.terms()) {
    acc += c * pochhammer(alpha + Scalar(1), key.l + l) *
           pochhammer(beta + Scalar(1), key.m + m) *
           pochhammer(gamma + Scalar(1), N - key.l - key.m);
  }
  return acc;
}

double normalized_inner_product_scale(const BaryPoly& p, int l, int m,
                                      const ParamSet& params, int j) {
  const double alpha = params.alphas[j].to_double();
  const double beta = params.betas[j].to_double();
  const double gamma = params.gamma.to_double();
  const int N = p.total_degree();
  double acc = 0.0;
  for (const auto& [key, c] : p.terms()) {
    acc += std::fabs(c.to_double()) * pochhammer(alpha + 1.0, key.l + l) *
           pochhammer(beta + 1.0, key.m + m) *
           pochhammer(gamma + 1.0, N - key.l - key.m);
  }
  return acc;
}

OrthogonalityReport verify_orthogonality(const BaryPoly& p, const ParamSet& params,
                                         const std::vector<IndexPair>& pairs,
                                         int max_total_degree, double tol) {
  params.validate();
  if (static_cast<int>(pairs.size()) != params.measure_count()) {
    throw std::invalid_argument("verify_orthogonality: one index pair per measure");
  }
  const bool exact = params.is_exact() && p.total_degree() >= 0 &&
                     [&] {
                       for (const auto& [k, c] : p.terms())
                         if (!c.is_exact()) return false;
                       return true;
                     }();

  OrthogonalityReport report;
  for (int j = 0; j < params.measure_count(); ++j) {
    MeasureOrthogonality mr;
    mr.measure = j + 1;
    const int nk = pairs[j].n - pairs[j].k;
    const int k = pairs[j].k;
    for (int l = 0; l <= max_total_degree; ++l) {
      for (int m = 0; l + m <= max_total_degree; ++m) {
        OrthogonalityEntry e;
        e.l = l;
        e.m = m;
        e.in_set = (l < nk) || (m < k);
        e.residual = normalized_inner_product(p, l, m, params, j);
        if (e.in_set) {
          const double scale =
              exact ? 1.0
                    : std::max(normalized_inner_product_scale(p, l, m, params, j), 1.0);
          const bool zero = exact ? e.residual.is_zero()
                                  : std::fabs(e.residual.to_double()) <= tol * scale;
          if (!zero) mr.pass = false;
          mr.max_in_set_abs =
              std::max(mr.max_in_set_abs, std::fabs(e.residual.to_double()));
        }
        mr.entries.push_back(std::move(e));
      }
    }
    report.max_in_set_abs = std::max(report.max_in_set_abs, mr.max_in_set_abs);
    if (!mr.pass) report.pass = false;
    report.measures.push_back(std::move(mr));
  }
  return report;
}

OrthogonalityReport verify_orthogonality(const ParamSet& params,
                                         const std::vector<IndexPair>& pairs,
                                         int max_total_degree, double tol) {
  return verify_orthogonality(jp_poly_operator(params, pairs), params, pairs,
                              max_total_degree, tol);
}

}  // namespace jptri
