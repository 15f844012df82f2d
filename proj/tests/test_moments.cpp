#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jptri/moments.hpp"
#include "jptri/quadrature.hpp"
#include "jptri/specfun.hpp"
#include "support/example_setup.hpp"
#include "support/random_inputs.hpp"

using namespace jptri;
using namespace jptri::testsupport;

TEST_CASE("simplex moments") {
  CHECK(simplex_moment(0, 0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  // int_0^1 x (1-x) dx
  CHECK(simplex_moment(1, 0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  // Gamma(3/2)/Gamma(7/2) = 4/15; analytically int_0^1 sqrt(y)(1-y) dy
  CHECK(simplex_moment(0, 0.5, 0) == doctest::Approx(4.0 / 15.0).epsilon(1e-13));
  CHECK_THROWS_AS(simplex_moment(-1.0, 0, 0), std::domain_error);
}

TEST_CASE("moment consistency identity") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> es(-0.9, 6.0);
  for (int t = 0; t < 200; ++t) {
    double a = es(rng), b = es(rng), c = es(rng);
    double back = simplex_moment(a, b, c) *
                  std::exp(ln_gamma(a + b + c + 3.0) - ln_gamma(a + 1.0) -
                           ln_gamma(b + 1.0) - ln_gamma(c + 1.0));
    CHECK(back == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("simplex moment against the quadrature rule") {
  TriangleRule rule = build_rule(0.0, 0.5, 0.0, 20);
  CHECK(integrate(rule, [](double, double) { return 1.0; }) ==
        doctest::Approx(simplex_moment(0, 0.5, 0)).epsilon(1e-14));
}

TEST_CASE("normalized inner product basics") {
  ParamSet params = example_params();
  BaryPoly zero(3);
  CHECK(normalized_inner_product(zero, 1, 2, params, 0).is_zero());

  BaryPoly one(0);
  one.set_coeff(0, 0, Scalar(1));
  CHECK(normalized_inner_product(one, 0, 0, params, 0) == Scalar(1));
  CHECK(normalized_inner_product(one, 0, 0, params, 1) == Scalar(1));
}

TEST_CASE("worked example is orthogonal at (0,0)") {
  ParamSet params = example_params();
  BaryPoly p = jp_poly_operator(params, example_pairs());
  CHECK(normalized_inner_product(p, 0, 0, params, 0).is_zero());

  // cross-check by quadrature: the unnormalized integral vanishes as well
  MonoPoly q = bary_to_mono(p);
  TriangleRule rule = build_rule(0.0, 0.5, 0.0, 32);
  double raw = integrate(rule, [&](double x, double y) { return q.evaluate(x, y); });
  double scale = integrate(rule, [&](double x, double y) {
    return std::fabs(q.evaluate(x, y));
  });
  CHECK(std::fabs(raw) <= 1e-10 * scale);
}

TEST_CASE("sign of the normalized product matches the quadrature oracle") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const int r = 1 + (t % 2);
    ParamSet params = random_param_set(rng, r);
    const int j = t % r;
    BaryPoly p = random_bary_poly(rng, 1 + (t % 4), 4);
    std::uniform_int_distribution<int> lm(0, 3);
    const int l = lm(rng), m = lm(rng);

    Scalar normalized = normalized_inner_product(p, l, m, params, j);

    TriangleRule rule = build_rule(params.alphas[j].to_double(),
                                   params.betas[j].to_double(),
                                   params.gamma.to_double(), 24);
    MonoPoly q = bary_to_mono(p);
    auto weighted = [&](double x, double y) {
      double t1 = q.evaluate(x, y);
      for (int i = 0; i < l; ++i) t1 *= x;
      for (int i = 0; i < m; ++i) t1 *= y;
      return t1;
    };
    double integral = integrate(rule, weighted);
    double scale = integrate(rule, [&](double x, double y) {
      return std::fabs(weighted(x, y));
    });

    if (normalized.is_zero()) {
      CHECK(std::fabs(integral) <= 1e-10 * std::max(scale, 1e-300));
    } else {
      CHECK(normalized.sign() == ((integral > 0) - (integral < 0)));
      CHECK(std::fabs(integral) > 1e-10 * scale);
    }
  }
}

TEST_CASE("verify_orthogonality: zero orders pass vacuously") {
  ParamSet params = example_params();
  auto report = verify_orthogonality(params, {{0, 0}, {0, 0}}, 3);
  CHECK(report.pass);
  for (const auto& mr : report.measures) {
    for (const auto& e : mr.entries) CHECK_FALSE(e.in_set);
  }
}

TEST_CASE("verify_orthogonality on the worked example") {
  ParamSet params = example_params();
  auto report = verify_orthogonality(params, example_pairs(), 6);
  CHECK(report.pass);
  CHECK(report.max_in_set_abs == 0.0);
  for (const auto& mr : report.measures) {
    for (const auto& e : mr.entries) {
      CHECK(e.in_set == (e.l < 1 || e.m < 1));
      if (e.in_set) CHECK(e.residual.is_zero());
    }
  }

  // boundary pairs are measured, not asserted; record what they do here:
  // for this setup the non-strict boundary (l,m)=(1,1) does NOT vanish.
  const auto& m1 = report.measures[0].entries;
  auto corner = std::find_if(m1.begin(), m1.end(), [](const OrthogonalityEntry& e) {
    return e.l == 1 && e.m == 1;
  });
  REQUIRE(corner != m1.end());
  CHECK_FALSE(corner->in_set);
  CHECK_FALSE(corner->residual.is_zero());
}

TEST_CASE("verify_orthogonality with three measures") {
  auto report = verify_orthogonality(example_params_r3(), example_pairs_r3(), 6);
  CHECK(report.pass);
}

TEST_CASE("a perturbed coefficient breaks orthogonality") {
  ParamSet params = example_params();
  BaryPoly p = jp_poly_operator(params, example_pairs());
  BaryPoly broken = p;
  broken.add_coeff(0, 0, Scalar(1));
  auto report = verify_orthogonality(broken, params, example_pairs(), 6);
  CHECK_FALSE(report.pass);
  CHECK(report.max_in_set_abs > 0.0);
}

TEST_CASE("strict-set orthogonality over random inputs") {
  std::mt19937 rng(19);
  for (int t = 0; t < 12; ++t) {
    const int r = 2 + (t % 2);
    ParamSet params = random_param_set(rng, r);
    auto pairs = random_pairs(rng, r, 6);
    const int D = total_order(pairs) + 2;
    CHECK(verify_orthogonality(params, pairs, D).pass);
  }
}
