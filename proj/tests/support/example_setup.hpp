#pragma once

#include <map>
#include <vector>

#include "jptri/poly.hpp"
#include "jptri/rodrigues.hpp"

namespace jptri::testsupport {

// Worked example used across the suites: two measures with
// alpha = (0, 3/2), beta = (1/2, 4/3), gamma = 0 and orders ((2,1), (2,1)).
inline ParamSet example_params() {
  ParamSet p;
  p.alphas = {Scalar::exact(0), Scalar::exact(3, 2)};
  p.betas = {Scalar::exact(1, 2), Scalar::exact(4, 3)};
  p.gamma = Scalar::exact(0);
  return p;
}

inline std::vector<IndexPair> example_pairs() { return {{2, 1}, {2, 1}}; }

// Known monomial coefficients of the degree-4 polynomial for that setup,
// keyed by (x power, y power).
inline std::map<TermKey, Rational> example_mono_coeffs() {
  return {
      {{0, 4}, make_rational(1045, 12)}, {{1, 3}, make_rational(672)},
      {{2, 2}, make_rational(2457, 2)},  {{3, 1}, make_rational(2200, 3)},
      {{4, 0}, make_rational(455, 4)},   {{0, 3}, make_rational(-240)},
      {{1, 2}, make_rational(-1274)},    {{2, 1}, make_rational(-1350)},
      {{3, 0}, make_rational(-308)},     {{0, 2}, make_rational(455, 2)},
      {{1, 1}, make_rational(700)},      {{2, 0}, make_rational(567, 2)},
      {{0, 1}, make_rational(-250, 3)},  {{1, 0}, make_rational(-98)},
      {{0, 0}, make_rational(35, 4)},
  };
}

// Second worked example: three measures, orders ((1,0), (1,1), (2,1)).
inline ParamSet example_params_r3() {
  ParamSet p;
  p.alphas = {Scalar::exact(0), Scalar::exact(1, 2), Scalar::exact(3, 4)};
  p.betas = {Scalar::exact(1, 3), Scalar::exact(1, 5), Scalar::exact(2, 3)};
  p.gamma = Scalar::exact(1, 2);
  return p;
}

inline std::vector<IndexPair> example_pairs_r3() { return {{1, 0}, {1, 1}, {2, 1}}; }

}  // namespace jptri::testsupport
