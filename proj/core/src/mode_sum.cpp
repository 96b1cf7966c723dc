#include "casimir/mode_sum.hpp"

#include <cmath>
#include <complex>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr int kMaxTerms = 2'000'000;

// closed tail integrals (long double) for the regulators that admit them
long double J_exp_ld(long double mu, long double lam) {
  return expl(-lam * mu) * (mu * mu / lam + 2.0L * mu / (lam * lam) +
                            2.0L / (lam * lam * lam));
}
long double J_gauss_ld(long double mu, long double lam) {
  long double x = lam * mu;
  return (0.5L * x * expl(-x * x) + 0.25L * sqrtl(kPiL) * erfcl(x)) /
         (lam * lam * lam);
}

// antiderivatives in mu
long double AJ_exp_ld(long double mu, long double lam) {
  long double l2 = lam * lam;
  return -expl(-lam * mu) * (mu * mu / l2 + 4.0L * mu / (l2 * lam) + 6.0L / (l2 * l2));
}
long double AJ_gauss_ld(long double mu, long double lam) {
  long double x = lam * mu;
  return (-0.5L * expl(-x * x) + 0.25L * sqrtl(kPiL) * x * erfcl(x)) /
         (lam * lam * lam * lam);
}

struct LadderEval {
  // J(mu) and int J dmu for the generic energy/density paths
  const Regulator& reg;
  double lam;
  long double J(long double mu) const {
    switch (reg.kind()) {
      case RegulatorKind::exponential: return J_exp_ld(mu, lam);
      case RegulatorKind::gaussian: return J_gauss_ld(mu, lam);
      default: return tail_integral(reg, static_cast<double>(mu), CutoffLambda(lam));
    }
  }
  long double J_antideriv_diff(long double lo, long double hi) const {
    switch (reg.kind()) {
      case RegulatorKind::exponential: return AJ_exp_ld(hi, lam) - AJ_exp_ld(lo, lam);
      case RegulatorKind::gaussian: return AJ_gauss_ld(hi, lam) - AJ_gauss_ld(lo, lam);
      default:
        return gauss24([this](double mu) { return static_cast<double>(J(mu)); },
                       static_cast<double>(lo), static_cast<double>(hi));
    }
  }
};

struct Neumaier {
  long double sum = 0.0L, comp = 0.0L;
  void add(long double v) {
    long double t = sum + v;
    comp += (fabsl(sum) >= fabsl(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  long double total() const { return sum + comp; }
};

void require_direct_capable(const Regulator& reg) {
  if (!reg.free_momentum_integrable())
    throw AccuracyError(
        "direct mode sum unavailable: the free momentum integral int k^3 C(Lambda k) dk "
        "diverges for regulator '" + std::string(reg.name()) +
        "'; use the summation-formula route",
        kInf);
}

// ---- exponential closed geometric forms ----

struct GeomSums {
  long double S0, S1, S2;  // sum q^n, n q^n, n^2 q^n over n >= 1
};
GeomSums geometric(long double u) {
  long double q = expl(-u);
  long double E = -expm1l(-u);  // 1 - q without cancellation
  long double E2 = E * E;
  return {q / E, q / E2, q * (1.0L + q) / (E2 * E)};
}

long double plate_ladder_exp(long double s, long double lam) {
  // sum_{n>=1} J(n s, lam) exactly
  auto [S0, S1, S2] = geometric(lam * s);
  long double alpha = s * s / lam;
  long double beta = 2.0L * s / (lam * lam);
  long double gamma = 2.0L / (lam * lam * lam);
  return alpha * S2 + beta * S1 + gamma * S0;
}

double energy_exp_closed(const PlateGeometry& geom, double lam) {
  long double d = geom.d, l = lam;
  long double free_term = (d / kPiL) * 6.0L / (l * l * l * l);
  if (geom.bc == BoundaryCondition::dirichlet) {
    long double plate = plate_ladder_exp(kPiL / d, l);
    return static_cast<double>((plate - free_term) / (4.0L * kPiL));
  }
  long double plate = 2.0L / (l * l * l) + 2.0L * plate_ladder_exp(2.0L * kPiL / d, l);
  return static_cast<double>((plate - free_term) / (4.0L * kPiL));
}

double density_exp_closed(double z, const PlateGeometry& geom, double lam) {
  long double d = geom.d, l = lam;
  long double K3 = 6.0L / (l * l * l * l);
  if (geom.bc == BoundaryCondition::periodic) {
    long double plate = 2.0L / (l * l * l) + 2.0L * plate_ladder_exp(2.0L * kPiL / d, l);
    return static_cast<double>(0.5L * (plate / (2.0L * kPiL * d) - K3 / (2.0L * kPiL * kPiL)));
  }
  long double u = l * kPiL / d;
  auto [S0, S1, S2] = geometric(u);
  long double alpha = (kPiL / d) * (kPiL / d) / l;
  long double beta = 2.0L * (kPiL / d) / (l * l);
  long double gamma = 2.0L / (l * l * l);
  long double A0 = alpha * S2 + beta * S1 + gamma * S0;
  std::complex<long double> w =
      expl(-u) * std::polar(1.0L, 2.0L * kPiL * static_cast<long double>(z) / d);
  std::complex<long double> one(1.0L, 0.0L);
  long double T0 = (w / (one - w)).real();
  long double T1 = (w / ((one - w) * (one - w))).real();
  long double T2 = (w * (one + w) / ((one - w) * (one - w) * (one - w))).real();
  long double Ac = alpha * T2 + beta * T1 + gamma * T0;
  return static_cast<double>(
      0.5L * ((A0 - Ac) / (2.0L * kPiL * d) - K3 / (2.0L * kPiL * kPiL)));
}

}  // namespace

double tail_integral(const Regulator& reg, double mu, CutoffLambda lambda) {
  if (mu < 0.0) throw std::domain_error("tail_integral: mu must be >= 0");
  double lam = lambda.value;
  if (reg.kind() == RegulatorKind::exponential)
    return static_cast<double>(J_exp_ld(mu, lam));
  auto f = [&](double w) { return w * w * reg.eval(lam * w); };
  // substitute out the scale so the quadrature sees an O(1) domain
  auto g = [&](double u) { return f(mu + u / lam) / lam; };
  return integrate(g, 0.0, kInf, 1e-10).value;
}

double free_momentum_integral(const Regulator& reg, CutoffLambda lambda) {
  double l = lambda.value;
  return reg.moment3() / (l * l * l * l);
}

DensitySample density_direct(double z, const PlateGeometry& geom, CutoffLambda lambda,
                             const Regulator& reg, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("density_direct: tol must be > 0");
  if (z < 0.0 || z > geom.d) return {z, 0.0, lambda.value};
  double lam = lambda.value;
  if (reg.kind() == RegulatorKind::exponential)
    return {z, density_exp_closed(z, geom, lam), lam};

  require_direct_capable(reg);
  LadderEval le{reg, lam};
  const long double d = geom.d;
  long double free_term =
      free_momentum_integral(reg, lambda) / (2.0L * kPiL * kPiL);

  const bool dirichlet = geom.bc == BoundaryCondition::dirichlet;
  const long double s = dirichlet ? kPiL / d : 2.0L * kPiL / d;
  Neumaier acc;
  if (!dirichlet) acc.add(le.J(0.0L));
  int below = 0;
  int n = 1;
  for (; n < kMaxTerms; ++n) {
    long double Jn = le.J(n * s);
    long double w = dirichlet
                        ? 1.0L - cosl(2.0L * kPiL * n * static_cast<long double>(z) / d)
                        : 2.0L;
    acc.add(w * Jn);
    long double scale = fabsl(acc.total()) + free_term;
    if (fabsl(w * Jn) < tol * scale) {
      if (++below >= 5) {
        // decreasing-J tail bound: sum_{m>n} J(ms) <= (1/s) int_{ns}^inf J
        double tail = 2.0 / static_cast<double>(s) *
                      reg.weighted_deriv_tail_bound(0, 3, lam * n * s) /
                      (lam * lam * lam * lam);
        if (tail < tol * scale) break;
      }
    } else {
      below = 0;
    }
  }
  if (n >= kMaxTerms)
    throw AccuracyError("density_direct: truncation bound unreachable", tol);
  long double plate = acc.total() / (2.0L * kPiL * d);
  return {z, static_cast<double>(0.5L * (plate - free_term)), lam};
}

double energy_per_area_direct(const PlateGeometry& geom, CutoffLambda lambda,
                              const Regulator& reg, double tol) {
  double lam = lambda.value;
  if (reg.kind() == RegulatorKind::exponential) return energy_exp_closed(geom, lam);

  require_direct_capable(reg);
  LadderEval le{reg, lam};
  const long double d = geom.d;
  const bool dirichlet = geom.bc == BoundaryCondition::dirichlet;
  const long double s = dirichlet ? kPiL / d : 2.0L * kPiL / d;
  const long double J0 = le.J(0.0L);

  // pair each ladder term with the free-integral average over its unit cell;
  // the head [0, s/2] carries the whole would-be divergence in closed form
  Neumaier acc;
  int below = 0;
  int n = 1;
  for (; n < kMaxTerms; ++n) {
    long double cell = le.J_antideriv_diff((n - 0.5L) * s, (n + 0.5L) * s) / s;
    long double bracket = le.J(n * s) - cell;
    acc.add(bracket);
    long double scale = fabsl(acc.total()) + 0.5L * J0;
    if (fabsl(bracket) < tol * scale) {
      if (++below >= 5) {
        // |J(ms) - cell| ~ s^2 |J''|/24; bound the tail by the integral of |J''|
        double x0 = lam * (n - 0.5) * static_cast<double>(s);
        double tail_J2 = 2.0 / (lam * lam) * reg.weighted_deriv_tail_bound(0, 1, x0) +
                         1.0 / (lam * lam) * reg.weighted_deriv_tail_bound(1, 2, x0);
        double tail = static_cast<double>(s) / 24.0 * tail_J2;
        if (tail < tol * scale) break;
      }
    } else {
      below = 0;
    }
  }
  if (n >= kMaxTerms)
    throw AccuracyError("energy_per_area_direct: truncation bound unreachable", tol);

  long double head = le.J_antideriv_diff(0.0L, 0.5L * s) / s;
  long double ladder_minus_integral = acc.total() - head;
  // Dirichlet: E/A = (1/4pi) [ sum_n J(ns) - int_0^inf J(xs) dx ]
  // periodic:  E/A = (1/4pi) [ J(0) + 2 (sum_n J(ns) - int_0^inf J(xs) dx) ]
  long double ea = dirichlet ? ladder_minus_integral
                             : J0 + 2.0L * ladder_minus_integral;
  return static_cast<double>(ea / (4.0L * kPiL));
}

}  // namespace casimir
