#include "jptri/hermite_pade.hpp"

#include <algorithm>
#include <cmath>

#include "jptri/specfun.hpp"

namespace jptri {

namespace {

void check_measure(const ParamSet& params, int j, const char* where) {
  if (j < 0 || j >= params.measure_count()) {
    throw std::invalid_argument(std::string(where) + ": measure index out of range");
  }
}

double ipow(double base, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

double series_coeff(const ParamSet& params, int j, int l, int m) {
  check_measure(params, j, "series_coeff");
  if (l < 0 || m < 0) throw std::invalid_argument("series_coeff: negative indices");
  const double a = params.alphas[j].to_double();
  const double b = params.betas[j].to_double();
  const double g = params.gamma.to_double();
  return std::exp(ln_gamma(g + 1.0) + ln_gamma(a + l + 1.0) + ln_gamma(b + m + 1.0) -
                  ln_gamma(a + b + g + l + m + 3.0));
}

SeriesCoeffTable build_series_table(const ParamSet& params, int j, int l_max, int m_max) {
  SeriesCoeffTable table;
  table.measure = j;
  table.l_max = l_max;
  table.m_max = m_max;
  table.values.resize(static_cast<std::size_t>(l_max + 1) * (m_max + 1));
  for (int l = 0; l <= l_max; ++l) {
    for (int m = 0; m <= m_max; ++m) {
      table.values[l * (m_max + 1) + m] = series_coeff(params, j, l, m);
    }
  }
  return table;
}

double E_truncated(const ParamSet& params, int j, double z, double w, int L, int M) {
  check_measure(params, j, "E_truncated");
  const double rz = 1.0 / z, rw = 1.0 / w;
  double acc = 0.0;
  double zpow = rz;
  for (int l = 0; l <= L; ++l) {
    double wpow = rw;
    double row = 0.0;
    for (int m = 0; m <= M; ++m) {
      row += series_coeff(params, j, l, m) * wpow;
      wpow *= rw;
    }
    acc += row * zpow;
    zpow *= rz;
  }
  return acc;
}

Scalar fractional_coeff(const MonoPoly& A, const ParamSet& params, int j, int l, int m) {
  check_measure(params, j, "fractional_coeff");
  if (l < 0 || m < 0) throw std::invalid_argument("fractional_coeff: negative indices");
  const Scalar& alpha = params.alphas[j];
  const Scalar& beta = params.betas[j];
  const int n = A.total_degree();

  const bool exact = params.is_exact() && [&] {
    for (const auto& [k, c] : A.terms())
      if (!c.is_exact()) return false;
    return true;
  }();

  if (exact) {
    // c_{l+p-i, m+i} relative to the common factor
    // Gamma(g+1)Gamma(a+1)Gamma(b+1)/Gamma(a+b+g+l+m+n+3); rising-factorial
    // ladders shared across the terms of A.
    const Rational a_r = alpha.rational();
    const Rational b_r = beta.rational();
    const Rational sigma_base =
        a_r + b_r + params.gamma.rational() + Rational(l + m + 3);
    auto ladder = [](const Rational& base, int count) {
      std::vector<Rational> out(count + 1);
      out[0] = 1;
      for (int t = 0; t < count; ++t) out[t + 1] = out[t] * (base + t);
      return out;
    };
    const auto poch_a = ladder(a_r + 1, l + n);
    const auto poch_b = ladder(b_r + 1, m + n);
    // (sigma_base + p)_(n-p) = (sigma_base)_n / (sigma_base)_p
    const auto poch_s = ladder(sigma_base, n);
    Rational acc(0);
    for (const auto& [key, a_c] : A.terms()) {
      const int p = key.l + key.m;
      acc += a_c.rational() * poch_a[l + key.l] * poch_b[m + key.m] *
             (poch_s[n] / poch_s[p]);
    }
    return Scalar(acc);
  }

  double acc = 0.0;
  for (const auto& [key, a_c] : A.terms()) {
    acc += a_c.to_double() * series_coeff(params, j, l + key.l, m + key.m);
  }
  return Scalar::real(acc);
}

namespace {

// Shared walk over the (l, m) grid of Laurent indices for one measure.
template <class Fn>
void for_each_index(int D, Fn&& fn) {
  for (int l = 0; l <= D; ++l) {
    for (int m = 0; l + m <= D; ++m) fn(l, m);
  }
}

bool residual_is_zero(const Scalar& value, bool exact, double tol, double scale) {
  if (exact) return value.is_zero();
  return std::fabs(value.to_double()) <= tol * std::max(scale, 1.0);
}

double float_scale(const MonoPoly& A, const ParamSet& params, int j, int l, int m) {
  double scale = 0.0;
  for (const auto& [key, a_c] : A.terms()) {
    scale += std::fabs(a_c.to_double()) * series_coeff(params, j, l + key.l, m + key.m);
  }
  return scale;
}

}  // namespace

HpReport check_hp_conditions(const MonoPoly& A, const ParamSet& params,
                             const std::vector<IndexPair>& pairs, int D, double tol) {
  params.validate();
  if (static_cast<int>(pairs.size()) != params.measure_count()) {
    throw std::invalid_argument("check_hp_conditions: one index pair per measure");
  }
  const bool exact = params.is_exact() && [&] {
    for (const auto& [k, c] : A.terms())
      if (!c.is_exact()) return false;
    return true;
  }();

  HpReport report;
  for (int j = 0; j < params.measure_count(); ++j) {
    MeasureHpReport mr;
    mr.measure = j + 1;
    const int nk = pairs[j].n - pairs[j].k;
    const int k = pairs[j].k;
    for_each_index(D, [&](int l, int m) {
      HpConditionEntry e;
      e.l = l;
      e.m = m;
      e.in_set = (l < nk) || (m < k);
      e.residual = fractional_coeff(A, params, j, l, m);
      if (e.in_set) {
        const double scale = exact ? 1.0 : float_scale(A, params, j, l, m);
        if (!residual_is_zero(e.residual, exact, tol, scale)) mr.pass = false;
        mr.max_in_set_abs =
            std::max(mr.max_in_set_abs, std::fabs(e.residual.to_double()));
      }
      mr.entries.push_back(std::move(e));
    });
    report.max_in_set_abs = std::max(report.max_in_set_abs, mr.max_in_set_abs);
    if (!mr.pass) report.pass = false;
    report.measures.push_back(std::move(mr));
  }
  return report;
}

ResidualOrderReport residual_order_check(const MonoPoly& A, const ParamSet& params,
                                         const std::vector<IndexPair>& pairs, int D,
                                         double tol) {
  params.validate();
  if (static_cast<int>(pairs.size()) != params.measure_count()) {
    throw std::invalid_argument("residual_order_check: one index pair per measure");
  }
  const bool exact = params.is_exact() && [&] {
    for (const auto& [k, c] : A.terms())
      if (!c.is_exact()) return false;
    return true;
  }();

  ResidualOrderReport report;
  for (int j = 0; j < params.measure_count(); ++j) {
    MeasureResidualOrder mr;
    mr.measure = j + 1;
    mr.corner_l = pairs[j].n - pairs[j].k;
    mr.corner_m = pairs[j].k;
    for_each_index(D, [&](int l, int m) {
      if (l < mr.corner_l || m < mr.corner_m) {
        Scalar v = fractional_coeff(A, params, j, l, m);
        const double scale = exact ? 1.0 : float_scale(A, params, j, l, m);
        if (!residual_is_zero(v, exact, tol, scale)) mr.in_set_all_zero = false;
      }
    });
    mr.corner_value = fractional_coeff(A, params, j, mr.corner_l, mr.corner_m);
    const double scale =
        exact ? 1.0 : float_scale(A, params, j, mr.corner_l, mr.corner_m);
    mr.corner_nonzero = !residual_is_zero(mr.corner_value, exact, tol, scale);
    if (!mr.in_set_all_zero) report.pass = false;
    report.measures.push_back(std::move(mr));
  }
  return report;
}

namespace {

// (e1+1)_h / (e1+e2+2)_h for h = 0..count-1: the Beta-constant ratio the
// inner integral of a divided difference produces for each x^h (or y^h).
std::vector<Scalar> beta_ratio_ladder(const Scalar& e1, const Scalar& e2, int count) {
  std::vector<Scalar> out;
  out.reserve(count);
  Scalar ratio(1);
  for (int h = 0; h < count; ++h) {
    out.push_back(ratio);
    ratio *= (e1 + Scalar(h + 1)) / (e1 + e2 + Scalar(h + 2));
  }
  return out;
}

}  // namespace

std::vector<P10Term> build_P10(const MonoPoly& A, const ParamSet& params, int j) {
  check_measure(params, j, "build_P10");
  // (A(z,w) - A(x,w))/(z - x) = sum_{p>=1} sum_{i<=p-1} sum_{h<=p-i-1}
  //   a_{p-i,i} w^i z^(p-i-1-h) x^h; integrating x^h over [0, 1-y] against
  //   x^alpha (1-x-y)^gamma yields (1-y)^h times the ladder ratio.
  const auto ratio =
      beta_ratio_ladder(params.alphas[j], params.gamma, std::max(1, A.total_degree()));
  std::vector<P10Term> terms;
  for (const auto& [key, c] : A.terms()) {
    const int zp = key.l;  // p - i
    const int wp = key.m;  // i
    for (int h = 0; h <= zp - 1; ++h) {
      terms.push_back(P10Term{zp - 1 - h, wp, h, c * ratio[h]});
    }
  }
  return terms;
}

MonoPoly build_P01(const MonoPoly& A, const ParamSet& params, int j) {
  check_measure(params, j, "build_P01");
  const int n = A.total_degree();
  MonoPoly b(std::max(0, n - 1));
  // (A(x,w) - A(x,y))/(w - y) integrated over [0, 1-x] against
  // y^beta (1-x-y)^gamma gives sum_{p>=1} sum_{1<=i<=p} sum_{h<=i-1}
  // a_{p-i,i} x^(p-i) w^(i-1-h) (1-x)^h times the ladder ratio; expand
  // (1-x)^h binomially and collect monomials in (x, w).
  const auto ratio = beta_ratio_ladder(params.betas[j], params.gamma, std::max(1, n));
  for (const auto& [key, c] : A.terms()) {
    const int xp = key.l;  // p - i
    const int wp = key.m;  // i
    for (int h = 0; h <= wp - 1; ++h) {
      for (int u = 0; u <= h; ++u) {
        Scalar term = c * ratio[h] * Scalar(binomial(h, u));
        if (u % 2 != 0) term = -term;
        b.add_coeff(xp + u, wp - 1 - h, term);
      }
    }
  }
  return b;
}

NumeratorState::NumeratorState(MonoPoly A, ParamSet params, int j)
    : a_(std::move(A)), b_(build_P01(a_, params, j)), p10_(build_P10(a_, params, j)),
      params_(std::move(params)), j_(j) {
  params_.validate();
  check_measure(params_, j_, "NumeratorState");
  const double alpha = params_.alphas[j_].to_double();
  const double beta = params_.betas[j_].to_double();
  const double gamma = params_.gamma.to_double();
  sigma3_ = alpha + beta + gamma + 3.0;
  c00_ = std::exp(ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0) + ln_gamma(gamma + 1.0) -
                  ln_gamma(sigma3_));
  lg_sigma3_all_first_ = ln_gamma(params_.alphas[0].to_double() +
                                  params_.betas[0].to_double() + gamma + 3.0);

  const int n = a_.total_degree();
  ratio11_.resize(std::max(0, n - 1));
  ratio21_.resize(std::max(0, n));
  double num = 1.0, den = 1.0;
  for (int d = 0; d < static_cast<int>(ratio11_.size()); ++d) {
    ratio11_[d] = num / den;
    num *= alpha + gamma + 2.0 + d;
    den *= sigma3_ + d;
  }
  num = den = 1.0;
  for (int h = 0; h < static_cast<int>(ratio21_.size()); ++h) {
    ratio21_[h] = num / den;
    num *= alpha + 1.0 + h;
    den *= sigma3_ + h;
  }
}

double NumeratorState::p10_at(double z, double w, double y) const {
  double acc = 0.0;
  for (const auto& t : p10_) {
    acc += t.coeff.to_double() * ipow(z, t.z_pow) * ipow(w, t.w_pow) *
           ipow(1.0 - y, t.one_minus_y_pow);
  }
  return acc;
}

double NumeratorState::p01_at(double x, double w) const { return b_.evaluate(x, w); }

double NumeratorState::psi11(double z, double w) const {
  // c00 * sum over table terms with h >= 1 of
  //   coeff w^i z^zp sum_k ((alpha+gamma+2)_(h-1-k)/(sigma+3)_(h-1-k)) (1-w)^k
  double acc = 0.0;
  const double omw = 1.0 - w;
  for (const auto& t : p10_) {
    const int h = t.one_minus_y_pow;
    if (h < 1) continue;
    double inner = 0.0;
    for (int k = 0; k <= h - 1; ++k) {
      inner += ratio11_[h - 1 - k] * ipow(omw, k);
    }
    acc += t.coeff.to_double() * ipow(w, t.w_pow) * ipow(z, t.z_pow) * inner;
  }
  return c00_ * acc;
}

double NumeratorState::psi12(double z, double w, double tol) const {
  if (p10_.empty()) return 0.0;
  const double beta = params_.betas[j_].to_double();
  const double f = gauss_2f1(beta + 1.0, 1.0, sigma3_, 1.0 / w, tol);
  return c00_ * p10_at(z, w, w) * f / w;
}

double NumeratorState::psi21(double z, double w) const {
  double acc = 0.0;
  for (const auto& [key, c] : b_.terms()) {
    const int xp = key.l;
    if (xp < 1) continue;
    const double b_c = c.to_double();
    const double wpow = ipow(w, key.m);
    for (int h = 0; h <= xp - 1; ++h) {
      acc += b_c * wpow * ratio21_[h] * ipow(z, xp - 1 - h);
    }
  }
  return -c00_ * acc;
}

double NumeratorState::psi22(double z, double w, double tol,
                             Psi22Prefactor prefactor) const {
  if (b_.is_zero()) return 0.0;
  const double alpha = params_.alphas[j_].to_double();
  const double f = gauss_2f1(alpha + 1.0, 1.0, sigma3_, 1.0 / z, tol);
  double pref = c00_;
  if (prefactor == Psi22Prefactor::literal_first_measure) {
    pref = c00_ * std::exp(ln_gamma(sigma3_) - lg_sigma3_all_first_);
  }
  return pref * b_.evaluate(z, w) * f / z;
}

double NumeratorState::phi(double z, double w, double tol) const {
  return psi11(z, w) + psi12(z, w, tol) + psi21(z, w) + psi22(z, w, tol);
}

double mono_magnitude(const MonoPoly& p, double z, double w) {
  double acc = 0.0;
  const double az = std::fabs(z), aw = std::fabs(w);
  for (const auto& [key, c] : p.terms()) {
    acc += std::fabs(c.to_double()) * ipow(az, key.l) * ipow(aw, key.m);
  }
  return acc;
}

double approximant_eval(const ParamSet& params, const std::vector<IndexPair>& pairs,
                        int j, double z, double w, double tol, double pole_rel) {
  check_measure(params, j, "approximant_eval");
  const MonoPoly P = bary_to_mono(jp_poly_operator(params, pairs));
  const double denom = P.evaluate(z, w);
  const double scale = mono_magnitude(P, z, w);
  if (std::fabs(denom) < pole_rel * std::max(scale, 1.0)) {
    throw PoleError("approximant_eval: denominator vanishes near the evaluation point");
  }
  NumeratorState state(P, params, j);
  return state.phi(z, w, tol) / denom;
}

}  // namespace jptri
