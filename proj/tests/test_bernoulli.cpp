#include "casimir/bernoulli.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace casimir;

namespace {

// Test oracle: extract phi_k coefficients from the generating function
// x (e^{xt} - 1) / (e^x - 1) by exact rational power-series division.
// Returns coeff[i] of t^i in phi_k; independent of the polynomial route
// used by the library.
std::vector<Rational> phi_series_coeffs(int k) {
  // numerator N(x) = x (e^{xt} - 1): coefficient of x^n is t^{n-1}/(n-1)!
  // denominator D(x) = (e^x - 1)/x * x = e^x - 1: coeff of x^n is 1/n!
  // we divide (e^{xt} - 1) by (e^x - 1)/x, tracking polynomials in t.
  // Series in x up to order k: A(x) = sum_n a_n(t) x^n with
  //   a_n(t) = t^n / n!   (from e^{xt} - 1, n >= 1)
  //   b_n    = 1 / (n+1)! (from (e^x - 1)/x, n >= 0)
  // quotient q_n(t): a_n = sum_{j <= n} q_j b_{n-j}
  const int N = k;
  auto fact = [](int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f = f * Rational(i);
    return f;
  };
  // polynomial arrays indexed by t-power
  std::vector<std::vector<Rational>> q(N + 1, std::vector<Rational>(N + 1, Rational(0)));
  std::vector<Rational> b(N + 1);
  for (int n = 0; n <= N; ++n) b[n] = Rational(1) / fact(n + 1);
  for (int n = 1; n <= N; ++n) {
    // a_n = t^n / n!
    std::vector<Rational> rhs(N + 1, Rational(0));
    rhs[n] = Rational(1) / fact(n);
    for (int j = 1; j < n; ++j)
      for (int p = 0; p <= N; ++p) rhs[p] = rhs[p] - q[j][p] * b[n - j];
    for (int p = 0; p <= N; ++p) q[n][p] = rhs[p] / b[0];
  }
  // phi_k(t) = k! * q_k(t)
  std::vector<Rational> out(N + 1, Rational(0));
  for (int p = 0; p <= N; ++p) out[p] = q[k][p] * fact(k);
  return out;
}

double eval_poly(const std::vector<Rational>& c, double t) {
  double v = 0.0;
  for (size_t i = c.size(); i-- > 0;) v = v * t + c[i].to_double();
  return v;
}

}  // namespace

TEST_CASE("positive-convention Bernoulli numbers") {
  CHECK(bernoulli_hardy(1) == Rational(1, 6));
  CHECK(bernoulli_hardy(2) == Rational(1, 30));
  CHECK(bernoulli_hardy(3) == Rational(1, 42));
  CHECK(bernoulli_hardy(4) == Rational(1, 30));
  for (int r = 1; r <= 20; ++r) CHECK(bernoulli_hardy(r).to_double() > 0.0);
  CHECK_THROWS_AS(bernoulli_hardy(0), std::domain_error);
  CHECK_THROWS_AS(bernoulli_hardy(21), std::domain_error);
}

TEST_CASE("standard Bernoulli numbers against known values") {
  CHECK(bernoulli_standard(1) == Rational(-1, 2));
  CHECK(bernoulli_standard(12) == Rational(-691, 2730));
  CHECK(bernoulli_standard(20) == Rational(-174611, 330));
  CHECK(bernoulli_standard(3) == Rational(0));
  CHECK(bernoulli_standard(20).str() == "-174611/330");
}

TEST_CASE("phi from the generating-function series oracle") {
  // series-division coefficients must match the polynomial construction
  for (int k = 1; k <= 8; ++k) {
    auto oracle = phi_series_coeffs(k);
    for (double t : {0.0, 0.125, 0.37, 0.5, 0.93}) {
      CHECK(phi(k, t) == doctest::Approx(eval_poly(oracle, t)).epsilon(1e-13));
    }
  }
  // phi_2(t) = t^2 - t
  auto c2 = phi_series_coeffs(2);
  CHECK(c2[0] == Rational(0));
  CHECK(c2[1] == Rational(-1));
  CHECK(c2[2] == Rational(1));
}

TEST_CASE("Bernoulli-number extraction from the odd-even recurrence") {
  // psi_{2m}(x) - psi'_{2m+1}(x)/(2m+1) = (-1)^m B_m
  const double x = 0.37, h = 1e-6;
  for (int m = 1; m <= 5; ++m) {
    double dpsi = (psi(2 * m + 1, x + h) - psi(2 * m + 1, x - h)) / (2 * h);
    double extracted = (psi(2 * m, x) - dpsi / (2 * m + 1));
    double expected = ((m % 2 == 0) ? 1.0 : -1.0) * bernoulli_hardy(m).to_double();
    CHECK(extracted == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("psi values and periodicity") {
  for (int k = 1; k <= 12; ++k) CHECK(psi(k, 0.0) == 0.0);
  CHECK(psi(6, 0.5) == doctest::Approx(-3.0 / 64.0).epsilon(1e-14));
  CHECK(psi(2, 1.25) == doctest::Approx(-0.1875).epsilon(1e-14));
  // dyadic points survive t + 1 exactly
  for (double t : {0.25, 0.5, 0.75}) {
    CHECK(psi(4, t) == psi(4, t + 1.0));
    CHECK(psi(7, t) == psi(7, t + 1.0));
  }
  CHECK(psi(6, 0.3) == doctest::Approx(psi(6, 1.3)).epsilon(1e-14));
}

TEST_CASE("psi derivative recurrences on a grid") {
  // psi_{2m-1} = psi'_{2m} / (2m) for 2m - 1 >= 3
  const double h = 1e-6;
  for (int i = 1; i <= 50; ++i) {
    double t = 0.012 + 0.019 * i;
    for (int m = 2; m <= 5; ++m) {
      double dpsi = (psi(2 * m, t + h) - psi(2 * m, t - h)) / (2 * h);
      CHECK(psi(2 * m - 1, t) == doctest::Approx(dpsi / (2 * m)).epsilon(1e-8));
    }
  }
}

TEST_CASE("exact rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK((Rational(-3, 9)).str() == "-1/3");
  CHECK(Rational(7) / Rational(7) == Rational(1));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
