#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jptri/hermite_pade.hpp"
#include "jptri/moments.hpp"
#include "jptri/quadrature.hpp"
#include "jptri/specfun.hpp"
#include "support/example_setup.hpp"

using namespace jptri;
using namespace jptri::testsupport;

TEST_CASE("one-dimensional rule hits Beta moments exactly") {
  for (double a : {0.0, -0.5, 1.5}) {
    for (double b : {0.0, -0.25, 2.0}) {
      const int q = 12;
      GaussJacobiRule rule = gauss_jacobi_01(a, b, q);
      for (const double u : rule.nodes) {
        CHECK(u > 0.0);
        CHECK(u < 1.0);
      }
      for (int k = 0; k <= 2 * q - 1; k += 3) {
        double expect = std::exp(ln_gamma(a + k + 1.0) + ln_gamma(b + 1.0) -
                                 ln_gamma(a + b + k + 2.0));
        double got = integrate(rule, [&](double u) {
          double p = 1.0;
          for (int i = 0; i < k; ++i) p *= u;
          return p;
        });
        CHECK(got == doctest::Approx(expect).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS_AS(gauss_jacobi_01(-1.0, 0.0, 4), std::domain_error);
  CHECK_THROWS_AS(gauss_jacobi_01(0.0, 0.0, 0), std::invalid_argument);
}

TEST_CASE("triangle rule basics") {
  TriangleRule r1 = build_rule(0, 0, 0, 1);
  CHECK(integrate(r1, [](double, double) { return 1.0; }) ==
        doctest::Approx(0.5).epsilon(1e-14));

  // int_T x y = 1/24; with the extra (1-x-y) weight it drops to 1/120
  TriangleRule r2 = build_rule(0, 0, 0, 2);
  CHECK(integrate(r2, [](double x, double y) { return x * y; }) ==
        doctest::Approx(1.0 / 24.0).epsilon(1e-13));
  TriangleRule r2g = build_rule(0, 0, 1, 2);
  CHECK(integrate(r2g, [](double x, double y) { return x * y; }) ==
        doctest::Approx(1.0 / 120.0).epsilon(1e-13));

  TriangleRule rh = build_rule(0, 0.5, 0, 20);
  CHECK(integrate(rh, [](double, double) { return 1.0; }) ==
        doctest::Approx(simplex_moment(0, 0.5, 0)).epsilon(1e-14));
}

TEST_CASE("rule moments agree with the closed form up to degree 10") {
  for (double alpha : {0.0, 1.5}) {
    for (double beta : {0.5, 4.0 / 3.0}) {
      TriangleRule rule = build_rule(alpha, beta, 0.25, 16);
      for (int l = 0; l + 0 <= 10; ++l) {
        for (int m = 0; l + m <= 10; ++m) {
          double got = integrate(rule, [&](double x, double y) {
            double p = 1.0;
            for (int i = 0; i < l; ++i) p *= x;
            for (int i = 0; i < m; ++i) p *= y;
            return p;
          });
          double expect = simplex_moment(alpha + l, beta + m, 0.25);
          CHECK(got == doctest::Approx(expect).epsilon(1e-13));
        }
      }
    }
  }
}

TEST_CASE("E_direct leading Laurent behaviour") {
  ParamSet params = example_params();
  const double big = 1e6;
  const double c00 = series_coeff(params, 0, 0, 0);
  double val = E_direct(params, 0, big, big, 16);
  CHECK(std::fabs(big * big * val - c00) <= 10.0 * c00 / big);
}

TEST_CASE("E_direct equals the truncated series far from the triangle") {
  ParamSet params = example_params();
  double direct = E_direct(params, 0, 10.0, 10.0, 64);
  double series = E_truncated(params, 0, 10.0, 10.0, 80, 80);
  CHECK(direct == doctest::Approx(series).epsilon(1e-10));
}

TEST_CASE("E_direct rejects singular evaluation points") {
  ParamSet params = example_params();
  CHECK_THROWS_AS(E_direct(params, 0, 0.5, 10.0, 8), std::domain_error);
  CHECK_THROWS_AS(E_direct(params, 0, 10.0, 1.0, 8), std::domain_error);
}

TEST_CASE("phi_direct vanishes for constant numerator polynomials") {
  ParamSet params = example_params();
  MonoPoly a0(0);
  a0.set_coeff(0, 0, Scalar(7));
  CHECK(std::fabs(phi_direct(a0, params, 0, 5.0, 5.0, 16)) < 1e-14);
}

TEST_CASE("q-doubling self-convergence") {
  ParamSet params = example_params();
  auto eval = [&](int q) { return E_direct(params, 0, 5.0, 5.0, q); };
  SelfConverged out = self_converged(eval, 64, 1e-12);
  CHECK(out.converged);
  CHECK(out.rel_change <= 1e-12);

  // a max_doublings of zero reports non-convergence
  SelfConverged none = self_converged(eval, 1, 1e-30, 0);
  CHECK_FALSE(none.converged);
}
