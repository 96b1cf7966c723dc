#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace casimir {

/// Exact rational on __int128, normalized (gcd-reduced, positive denominator).
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(__int128 n, __int128 d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  double to_double() const;
  std::string str() const;
};

/// Standard-convention Bernoulli number B_j (B_1 = -1/2), j <= 40.
Rational bernoulli_standard(int j);

/// All-positive convention: B_r = |B_{2r}^std|, so B_1 = 1/6, B_2 = 1/30,
/// B_3 = 1/42, ... Valid for 1 <= r <= 20.
Rational bernoulli_hardy(int r);

/// Coefficients of the Bernoulli polynomial B_k(t) = sum_i coeff[i] t^i (exact).
std::vector<Rational> bernoulli_poly_coeffs(int k);

/// phi_k(t) = B_k(t) - B_k: the coefficient polynomial of the generating
/// function x (e^{x t} - 1) / (e^x - 1), vanishing at t = 0.
double phi(int k, double t);

/// Periodic Bernoulli function psi_k(t) = phi_k(t - floor(t)); period 1,
/// psi_k(0) = 0. Piecewise polynomial of degree k. Supported for k <= 20.
double psi(int k, double t);

/// Largest supported polynomial index for phi/psi.
inline constexpr int kMaxBernoulliPoly = 20;

}  // namespace casimir
