#include "casimir/image_sum.hpp"

#include <cmath>

namespace casimir {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long kMaxImages = 100'000'000L;

// quartic integral bound: sum_{m > M} (m D)^-4 < (M D)^-4 M / 3
bool tail_ok(long m, long double gap, long double accum, double tol) {
  long double t = powl(gap * m, -4.0L) * m / 3.0L;
  return t < tol * fabsl(accum);
}
}  // namespace

double image_term(double a, CutoffLambda lambda) {
  long double l2 = static_cast<long double>(lambda.value) * lambda.value;
  long double a2 = static_cast<long double>(a) * a;
  long double den = l2 + a2;
  return static_cast<double>((a2 - 3.0L * l2) / (den * den * den));
}

double density_closed(double z, double d, CutoffLambda lambda, BoundaryCondition bc) {
  if (!(d > 0.0)) throw std::domain_error("density_closed: d must be > 0");
  if (z < 0.0 || z > d) return 0.0;
  const long double lam = lambda.value;
  const long double l2 = lam * lam;
  auto T = [l2](long double a) {
    long double den = l2 + a * a;
    return (a * a - 3.0L * l2) / (den * den * den);
  };
  constexpr double tol = 1e-14;

  if (bc == BoundaryCondition::periodic) {
    long double s = 0.0L;
    for (long m = 1; m < kMaxImages; ++m) {
      s += T(m * static_cast<long double>(d));
      if (m > 4 && tail_ok(m, d, s, tol)) break;
    }
    return static_cast<double>(-s / (kPiL * kPiL));
  }

  long double s = T(2.0L * z);
  for (long m = 1; m < kMaxImages; ++m) {
    long double md = m * static_cast<long double>(d);
    s += -2.0L * T(2.0L * md) + T(2.0L * (md + z)) + T(2.0L * (md - z));
    if (m > 4 && tail_ok(m, 2.0 * d, s, tol)) break;
  }
  return static_cast<double>(0.5L * s / (kPiL * kPiL));
}

namespace {

// sum_{m > M} (m + u)^-4 with y = M + 1/2 + u: midpoint summation tail,
// y^-3/3 - y^-5/6 + 7 y^-7/48 - 31 y^-9/144, absolute error ~ y^-11
long double quartic_tail(long double y) {
  long double iy = 1.0L / y, iy2 = iy * iy;
  return iy * iy2 *
         (1.0L / 3.0L + iy2 * (-1.0L / 6.0L + iy2 * (7.0L / 48.0L - iy2 * 31.0L / 144.0L)));
}

constexpr int kExplicitImages = 24;

}  // namespace

namespace detail {

double dirichlet_image_sum_reduced(double z, double d, bool omit_left_pole,
                                   bool omit_right_pole) {
  const long double zl = z, dl = d;
  const long double u = zl / dl;
  const long double zeta4 = powl(kPiL, 4) / 90.0L;
  long double s = -2.0L * zeta4 / powl(dl, 4.0L);
  if (!omit_left_pole) s += powl(zl, -4.0L);
  for (long m = 1; m <= kExplicitImages; ++m) {
    long double md = m * dl;
    s += powl(md + zl, -4.0L);
    if (!(omit_right_pole && m == 1)) s += powl(md - zl, -4.0L);
  }
  long double y = kExplicitImages + 0.5L;
  s += (quartic_tail(y + u) + quartic_tail(y - u)) / powl(dl, 4.0L);
  return static_cast<double>(s);
}

}  // namespace detail

double density_limit(double z, double d, BoundaryCondition bc, double tol) {
  if (!(d > 0.0)) throw std::domain_error("density_limit: d must be > 0");
  if (!(tol > 0.0)) throw std::domain_error("density_limit: tol must be > 0");
  if (z < 0.0 || z > d) return 0.0;
  if (bc == BoundaryCondition::periodic) return -kPi * kPi / (90.0 * d * d * d * d);
  if (z == 0.0 || z == d)
    throw SingularityError("density_limit: non-integrable at the plates (z = 0, d)");
  double s = detail::dirichlet_image_sum_reduced(z, d, false, false);
  return s / (32.0 * kPi * kPi);
}

double energy_per_area_periodic(double d) {
  if (!(d > 0.0)) throw std::domain_error("energy_per_area_periodic: d must be > 0");
  return -kPi * kPi / (90.0 * d * d * d);
}

}  // namespace casimir
