#include "jptri/specfun.hpp"

#include <cmath>
#include <cstdlib>

namespace jptri {

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative shift");
  Rational acc(1);
  Rational term(a);
  for (int s = 0; s < n; ++s) {
    acc *= term;
    term += 1;
  }
  return acc;
}

double pochhammer(double a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative shift");
  double acc = 1.0;
  for (int s = 0; s < n; ++s) acc *= a + s;
  return acc;
}

Scalar pochhammer(const Scalar& a, int n) {
  if (a.is_exact()) return Scalar(pochhammer(a.rational(), n));
  return Scalar::real(pochhammer(a.to_double(), n));
}

namespace {

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  double sum = kLanczosCoeff[0];
  for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (x - 1.0 + k);
  double t = x + kLanczosG - 0.5;
  return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(sum);
}

double gauss_2f1(double a, double b, double c, double z, double tol, long max_terms) {
  if (!(std::fabs(z) < 1.0)) throw std::domain_error("gauss_2f1: requires |z| < 1");
  if (c <= 0.0 && c == std::floor(c)) {
    throw std::domain_error("gauss_2f1: c is a nonpositive integer");
  }
  double sum = 1.0;
  double term = 1.0;
  for (long k = 0; k < max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (term == 0.0) return sum;  // terminating series
    double next_ratio = std::fabs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * z);
    if (k >= 2 && next_ratio < 1.0) {
      double tail = std::fabs(term) * next_ratio / (1.0 - next_ratio);
      if (tail <= tol * std::fabs(sum)) return sum;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge within term cap");
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  Rational acc(1);
  for (int s = 1; s <= k; ++s) {
    acc *= n - k + s;
    acc /= s;
  }
  return acc;
}

}  // namespace jptri
