#include "casimir/bernoulli.hpp"

#include <array>
#include <cmath>
#include <mutex>

namespace casimir {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(__int128 n, __int128 d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  __int128 g = gcd128(den, o.den);
  __int128 l = den / g * o.den;
  return Rational(num * (l / den) + o.num * (l / o.den), l);
}
Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num, o.den);
}
Rational Rational::operator*(const Rational& o) const {
  // cross-reduce before multiplying
  __int128 g1 = gcd128(num, o.den), g2 = gcd128(o.num, den);
  return Rational((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::domain_error("Rational: division by zero");
  return *this * Rational(o.den, o.num);
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
  auto i128_str = [](__int128 v) {
    if (v == 0) return std::string("0");
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return neg ? "-" + s : s;
  };
  std::string s = i128_str(num);
  if (den != 1) s += "/" + i128_str(den);
  return s;
}

namespace {

constexpr int kMaxStdIndex = 40;

Rational binom(int n, int k) {
  // exact C(n,k) for n <= 41
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

const std::vector<Rational>& std_bernoulli_table() {
  static std::vector<Rational> table = [] {
    std::vector<Rational> b;
    b.reserve(kMaxStdIndex + 1);
    b.push_back(Rational(1));
    for (int m = 1; m <= kMaxStdIndex; ++m) {
      // sum_{j=0}^{m} C(m+1, j) B_j = 0
      Rational s(0);
      for (int j = 0; j < m; ++j) s = s + binom(m + 1, j) * b[j];
      b.push_back(Rational(0) - s / Rational(m + 1));
    }
    return b;
  }();
  return table;
}

}  // namespace

Rational bernoulli_standard(int j) {
  if (j < 0 || j > kMaxStdIndex)
    throw std::domain_error("bernoulli_standard: index out of range [0,40]");
  return std_bernoulli_table()[j];
}

Rational bernoulli_hardy(int r) {
  if (r < 1 || r > 20) throw std::domain_error("bernoulli_hardy: r out of range [1,20]");
  Rational b = bernoulli_standard(2 * r);
  if (b.num < 0) b.num = -b.num;
  return b;
}

std::vector<Rational> bernoulli_poly_coeffs(int k) {
  if (k < 0 || k > kMaxBernoulliPoly)
    throw std::domain_error("bernoulli_poly_coeffs: k out of range");
  // B_k(t) = sum_j C(k,j) B_j t^{k-j}
  std::vector<Rational> c(k + 1, Rational(0));
  for (int j = 0; j <= k; ++j) c[k - j] = binom(k, j) * bernoulli_standard(j);
  return c;
}

namespace {

// phi_k coefficients as doubles, cached per k (coeff of t^i, constant dropped)
const std::array<std::vector<double>, kMaxBernoulliPoly + 1>& phi_tables() {
  static std::array<std::vector<double>, kMaxBernoulliPoly + 1> t = [] {
    std::array<std::vector<double>, kMaxBernoulliPoly + 1> a;
    for (int k = 0; k <= kMaxBernoulliPoly; ++k) {
      auto c = bernoulli_poly_coeffs(k);
      std::vector<double> d(c.size());
      for (size_t i = 0; i < c.size(); ++i) d[i] = c[i].to_double();
      d[0] = 0.0;  // subtract B_k: phi_k(0) = 0
      a[k] = std::move(d);
    }
    return a;
  }();
  return t;
}

}  // namespace

double phi(int k, double t) {
  if (k < 0 || k > kMaxBernoulliPoly) throw std::domain_error("phi: k out of range");
  const auto& c = phi_tables()[k];
  double v = 0.0;
  for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
  return v;
}

double psi(int k, double t) { return phi(k, t - std::floor(t)); }

}  // namespace casimir
