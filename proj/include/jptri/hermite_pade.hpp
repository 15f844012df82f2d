#pragma once

#include <stdexcept>
#include <vector>

#include "jptri/poly.hpp"
#include "jptri/rodrigues.hpp"

namespace jptri {

/// Laurent coefficient c_{l,m} of the transform E_j at z^-(l+1) w^-(m+1):
/// the moment Gamma(gamma+1) Gamma(alpha_j+l+1) Gamma(beta_j+m+1) /
/// Gamma(alpha_j+beta_j+gamma+l+m+3). j is zero-based.
double series_coeff(const ParamSet& params, int j, int l, int m);

/// Moment table for one measure, entries (l, m) up to (l_max, m_max).
struct SeriesCoeffTable {
  int measure = 0;  // zero-based
  int l_max = 0, m_max = 0;
  std::vector<double> values;  // row-major, (l_max+1) x (m_max+1)

  double at(int l, int m) const { return values[l * (m_max + 1) + m]; }
};

SeriesCoeffTable build_series_table(const ParamSet& params, int j, int l_max, int m_max);

/// Partial double Laurent sum  sum_{l<=L, m<=M} c_{l,m} z^-(l+1) w^-(m+1).
double E_truncated(const ParamSet& params, int j, double z, double w, int L, int M);

/// Laurent coefficient {A E_j}_{l,m} = sum a_{p-i,i} c_{l+p-i, m+i}.
/// Exact inputs: returns the sum with the common positive factor
/// Gamma(gamma+1) Gamma(alpha_j+1) Gamma(beta_j+1) / Gamma(alpha_j+beta_j+
/// gamma+l+m+deg A+3) divided out, so zeros are decidable. Real inputs:
/// returns the actual coefficient value.
Scalar fractional_coeff(const MonoPoly& A, const ParamSet& params, int j, int l, int m);

struct HpConditionEntry {
  int l = 0;
  int m = 0;
  bool in_set = false;  // (l, m) in L_(n_j, k_j): l < n_j - k_j or m < k_j
  Scalar residual;
};

struct MeasureHpReport {
  int measure = 0;  // 1-based in reports
  std::vector<HpConditionEntry> entries;
  bool pass = true;
  double max_in_set_abs = 0.0;
};

struct HpReport {
  std::vector<MeasureHpReport> measures;
  bool pass = true;
  double max_in_set_abs = 0.0;
};

/// Checks {A E_j}_{l,m} = 0 over L_(n_j,k_j) for every measure, l+m <= D.
HpReport check_hp_conditions(const MonoPoly& A, const ParamSet& params,
                             const std::vector<IndexPair>& pairs, int D,
                             double tol = 1e-10);

struct MeasureResidualOrder {
  int measure = 0;  // 1-based
  bool in_set_all_zero = true;
  int corner_l = 0, corner_m = 0;  // (n_j - k_j, k_j)
  Scalar corner_value;
  bool corner_nonzero = false;
};

struct ResidualOrderReport {
  std::vector<MeasureResidualOrder> measures;
  bool pass = true;  // every in-set coefficient vanishes
};

/// Verifies the Laurent tail of A E_j - Phi_j: every coefficient indexed by
/// L_(n_j,k_j) (with l+m <= D) vanishes, and reports the corner coefficient
/// at (n_j-k_j, k_j) where the tail is expected to start.
ResidualOrderReport residual_order_check(const MonoPoly& A, const ParamSet& params,
                                         const std::vector<IndexPair>& pairs, int D,
                                         double tol = 1e-10);

/// One term of P^(1,0)(z, w, y): coeff * z^z_pow * w^w_pow * (1-y)^one_minus_y_pow.
struct P10Term {
  int z_pow = 0;
  int w_pow = 0;
  int one_minus_y_pow = 0;
  Scalar coeff;
};

/// Table representing the inner x-integral of
///   int_0^(1-y) (A(z,w)-A(x,w))/(z-x) * x^alpha_j (1-x-y)^gamma dx
/// split off the measure's base weight: each x^h picks up the Beta-constant
/// ratio (alpha_j+1)_h / (alpha_j+gamma+2)_h next to its (1-y)^h power, which
/// is why the table depends on the measure. Empty for A constant in z.
std::vector<P10Term> build_P10(const MonoPoly& A, const ParamSet& params, int j);

/// Same construction for the inner y-integral, expanded over monomials
/// x^a w^b; each y^h carries (beta_j+1)_h / (beta_j+gamma+2)_h.
MonoPoly build_P01(const MonoPoly& A, const ParamSet& params, int j);

/// Which Gamma argument the psi_22 prefactor denominator uses: the evaluated
/// measure's parameters, or measure 1's parameters as printed in one source.
enum class Psi22Prefactor { measure_j, literal_first_measure };

/// Evaluator for the non-polynomial numerator Phi_j of one measure:
/// Phi_j = psi11 + psi12 + psi21 + psi22, all derived from the coefficient
/// tables of A. Immutable once built; safe to share across threads.
class NumeratorState {
 public:
  NumeratorState(MonoPoly A, ParamSet params, int j);

  int measure() const { return j_; }  // zero-based
  const MonoPoly& a_poly() const { return a_; }
  const MonoPoly& b_poly() const { return b_; }
  const std::vector<P10Term>& p10_terms() const { return p10_; }
  const ParamSet& params() const { return params_; }

  double p10_at(double z, double w, double y) const;
  double p01_at(double x, double w) const;

  double psi11(double z, double w) const;
  double psi12(double z, double w, double tol = 1e-14) const;
  double psi21(double z, double w) const;
  double psi22(double z, double w, double tol = 1e-14,
               Psi22Prefactor prefactor = Psi22Prefactor::measure_j) const;
  double phi(double z, double w, double tol = 1e-14) const;

 private:
  MonoPoly a_;
  MonoPoly b_;
  std::vector<P10Term> p10_;
  ParamSet params_;
  int j_;
  double c00_ = 0.0;      // Gamma(a+1)Gamma(b+1)Gamma(g+1)/Gamma(sigma+3)
  double sigma3_ = 0.0;   // alpha_j + beta_j + gamma + 3
  double lg_sigma3_all_first_ = 0.0;  // ln Gamma(alpha_1+beta_1+gamma+3)
  std::vector<double> ratio11_;  // (alpha+gamma+2)_d / (sigma+3)_d
  std::vector<double> ratio21_;  // (alpha+1)_h   / (sigma+3)_h
};

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Magnitude bound sum |a_{l,m}| |z|^l |w|^m used to scale the pole test.
double mono_magnitude(const MonoPoly& p, double z, double w);

/// R_j(z,w) = Phi_j(z,w) / P(z,w) with P the operator polynomial for
/// (params, pairs). Throws PoleError when |P(z,w)| < pole_rel * magnitude.
double approximant_eval(const ParamSet& params, const std::vector<IndexPair>& pairs,
                        int j, double z, double w, double tol = 1e-14,
                        double pole_rel = 1e-12);

}  // namespace jptri
