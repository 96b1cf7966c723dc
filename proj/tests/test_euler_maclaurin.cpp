#include "casimir/euler_maclaurin.hpp"

#include <doctest.h>

#include <cmath>

#include "casimir/bernoulli.hpp"
#include "casimir/mode_sum.hpp"

using namespace casimir;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const double kEpsF = -kPi * kPi / 1440.0;
}  // namespace

TEST_CASE("g at ladder points") {
  auto ex = Regulator::exponential();
  auto gf = GFunction::dirichlet(1.0, CutoffLambda(1.0), ex);
  CHECK(g_eval(gf, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
  // g(1) = 2 e^-pi (pi^2 + 2 pi + 2)
  CHECK(g_eval(gf, 1.0) == doctest::Approx(1.5689063414251606).epsilon(1e-14));
  // g(0)/2 = M2 / L^3 for every admissible regulator
  for (auto reg : {Regulator::exponential(), Regulator::gaussian(),
                   Regulator::rational()}) {
    for (double lam : {0.5, 1.0}) {
      auto g = GFunction::dirichlet(1.0, CutoffLambda(lam), reg);
      CHECK(0.5 * g_eval(g, 0.0) ==
            doctest::Approx(reg.moment2() / (lam * lam * lam)).epsilon(1e-9));
    }
  }
}

TEST_CASE("g derivatives: closed values") {
  auto ex = Regulator::exponential();
  // spacing 1 (d = pi): g'(1) = -2/e
  auto gf = GFunction::dirichlet(kPi, CutoffLambda(1.0), ex);
  CHECK(g_deriv(gf, 1, 1.0) == doctest::Approx(-2.0 / std::exp(1.0)).epsilon(1e-14));
  CHECK(g_deriv(gf, 1, 0.0) == 0.0);
  // d = 1: g'''(0) = -4 pi^3 for any cutoff value
  auto g1 = GFunction::dirichlet(1.0, CutoffLambda(0.37), ex);
  CHECK(g_deriv(g1, 3, 0.0) ==
        doctest::Approx(-4.0 * kPi * kPi * kPi).epsilon(1e-13));
  auto g2 = GFunction::dirichlet(1.0, CutoffLambda(1.0), Regulator::gaussian());
  CHECK(g_deriv(g2, 3, 0.0) ==
        doctest::Approx(-4.0 * kPi * kPi * kPi).epsilon(1e-13));
}

TEST_CASE("g derivatives against finite differences") {
  auto check_orders = [](const GFunction& gf, double tol) {
    const double m0 = 1.3, h = 0.05;
    auto at = [&](double o) { return g_eval(gf, m0 + o * h); };
    double fd1 = (at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * h);
    double fd2 =
        (-at(-2) + 16 * at(-1) - 30 * at(0) + 16 * at(1) - at(2)) / (12 * h * h);
    double fd3 =
        (at(-3) - 8 * at(-2) + 13 * at(-1) - 13 * at(1) + 8 * at(2) - at(3)) /
        (8 * h * h * h);
    double fd4 = (-at(-3) + 12 * at(-2) - 39 * at(-1) + 56 * at(0) - 39 * at(1) +
                  12 * at(2) - at(3)) /
                 (6 * h * h * h * h);
    CHECK(g_deriv(gf, 1, m0) == doctest::Approx(fd1).epsilon(tol));
    CHECK(g_deriv(gf, 2, m0) == doctest::Approx(fd2).epsilon(tol));
    CHECK(g_deriv(gf, 3, m0) == doctest::Approx(fd3).epsilon(tol));
    CHECK(g_deriv(gf, 4, m0) == doctest::Approx(fd4).epsilon(tol));
  };
  check_orders(GFunction::dirichlet(1.0, CutoffLambda(0.1), Regulator::exponential()),
               1e-6);
  // gaussian g_eval goes through quadrature; the difference stencils amplify
  // its noise, so the window is wider
  check_orders(GFunction::dirichlet(1.0, CutoffLambda(0.1), Regulator::gaussian()),
               1e-4);
}

TEST_CASE("correction term: frozen values and small-cutoff asymptote") {
  auto ex = Regulator::exponential();
  auto gf = GFunction::dirichlet(1.0, CutoffLambda(0.01), ex);
  double s2 = sigma_k(gf, 2);
  CHECK(s2 == doctest::Approx(-0.17223280688985370).epsilon(1e-9));
  CHECK(std::abs(s2 - (-kPi * kPi * kPi / 180.0)) < 2e-4);
  CHECK(sigma_k(gf, 3) == doctest::Approx(s2).epsilon(1e-6));

  auto gg = GFunction::dirichlet(1.0, CutoffLambda(0.01), Regulator::gaussian());
  CHECK(sigma_k(gg, 2) == doctest::Approx(-0.17230568520780).epsilon(1e-8));
  auto gr = GFunction::dirichlet(1.0, CutoffLambda(0.01), Regulator::rational());
  CHECK(sigma_k(gr, 2) == doctest::Approx(-0.17177260139552).epsilon(1e-8));
}

TEST_CASE("correction term scales with the cube of the ladder spacing") {
  auto ex = Regulator::exponential();
  // (d, L) -> (2d, 2L) leaves the reduced cutoff invariant: exact 1/8
  auto a = GFunction::dirichlet(1.0, CutoffLambda(0.01), ex);
  auto b = GFunction::dirichlet(2.0, CutoffLambda(0.02), ex);
  CHECK(sigma_k(b, 2) == doctest::Approx(sigma_k(a, 2) / 8.0).epsilon(1e-12));
  // at fixed L the scaling holds only up to the O(L^2) remainder
  auto c = GFunction::dirichlet(2.0, CutoffLambda(0.005), ex);
  CHECK(sigma_k(c, 2) == doctest::Approx(sigma_k(a, 2) / 8.0).epsilon(5e-4));
}

TEST_CASE("order independence") {
  const int ks23[] = {2, 3};
  const int ks234[] = {2, 3, 4};
  const int ks2[] = {2};
  auto ex = GFunction::dirichlet(1.0, CutoffLambda(0.01), Regulator::exponential());
  CHECK(check_sigma_independence(ks23, ex) < 1e-6);
  auto ga = GFunction::dirichlet(1.0, CutoffLambda(0.01), Regulator::gaussian());
  CHECK(check_sigma_independence(ks234, ga) < 1e-6);
  CHECK(check_sigma_independence(ks2, ga) == 0.0);
}

TEST_CASE("summation-formula energy equals the direct energy") {
  PlateGeometry D(1.0, BoundaryCondition::dirichlet);
  PlateGeometry P(1.0, BoundaryCondition::periodic);
  auto ex = Regulator::exponential();
  for (double lam : {0.1, 0.02}) {
    CHECK(energy_per_area_em(D, ex, CutoffLambda(lam)) ==
          doctest::Approx(energy_per_area_direct(D, CutoffLambda(lam), ex))
              .epsilon(1e-10));
    CHECK(energy_per_area_em(P, ex, CutoffLambda(lam)) ==
          doctest::Approx(energy_per_area_direct(P, CutoffLambda(lam), ex))
              .epsilon(1e-10));
  }
}

TEST_CASE("energy decomposition: Dirichlet, three regulators") {
  PlateGeometry D(1.0, BoundaryCondition::dirichlet);
  const double sweep[] = {0.05, 0.02, 0.01, 0.005};
  for (auto reg : {Regulator::exponential(), Regulator::gaussian(),
                   Regulator::rational()}) {
    auto dec = decompose_energy(D, reg, sweep);
    // divergent coefficient is -M2/(8 pi) exactly (negative: plate minus free)
    CHECK(dec.c_div == doctest::Approx(-reg.moment2() / (8.0 * kPi)).epsilon(1e-14));
    CHECK(dec.c_div < 0.0);
    CHECK(dec.eps_f == doctest::Approx(kEpsF).epsilon(1e-4));
    CHECK(dec.remainder_exponent == doctest::Approx(2.0).epsilon(0.05));
    if (dec.direct_fit_available) {
      CHECK(dec.c_div_direct == doctest::Approx(dec.c_div).epsilon(1e-10));
      CHECK(dec.agreement < 1e-4);
    }
  }
  // the algebraic-tail cutoff has no direct route
  CHECK_FALSE(decompose_energy(D, Regulator::rational(), sweep).direct_fit_available);
  // magnitudes per regulator
  CHECK(decompose_energy(D, Regulator::exponential(), sweep).c_div ==
        doctest::Approx(-0.079577471545947668).epsilon(1e-14));
  CHECK(decompose_energy(D, Regulator::gaussian(), sweep).c_div ==
        doctest::Approx(-0.017630924485867384).epsilon(1e-14));
  CHECK(decompose_energy(D, Regulator::rational(), sweep).c_div ==
        doctest::Approx(-0.013262911924324611).epsilon(1e-14));
}

TEST_CASE("energy decomposition: periodic") {
  PlateGeometry P(1.0, BoundaryCondition::periodic);
  const double sweep[] = {0.05, 0.02, 0.01, 0.005};
  auto dec = decompose_energy(P, Regulator::exponential(), sweep);
  CHECK(dec.c_div == 0.0);
  CHECK(std::abs(dec.c_div_direct) < 1e-10);
  CHECK(dec.eps_f == doctest::Approx(-kPi * kPi / 90.0).epsilon(1e-6));
}

TEST_CASE("pairwise agreement of the finite part across regulators") {
  PlateGeometry D(1.0, BoundaryCondition::dirichlet);
  const double sweep[] = {0.02, 0.01, 0.005};
  double e1 = decompose_energy(D, Regulator::exponential(), sweep).eps_f;
  double e2 = decompose_energy(D, Regulator::gaussian(), sweep).eps_f;
  double e3 = decompose_energy(D, Regulator::rational(), sweep).eps_f;
  CHECK(e1 == doctest::Approx(e2).epsilon(1e-4));
  CHECK(e1 == doctest::Approx(e3).epsilon(1e-4));
  CHECK(e2 == doctest::Approx(e3).epsilon(1e-4));
}

TEST_CASE("order independence has teeth against coefficient corruption") {
  // rebuild -S_2(0) by hand with the second coefficient nudged from 1/30 to
  // 1/29: the resulting correction term moves by far more than the
  // independence tolerance, so a corrupted table cannot pass unnoticed
  auto ex = Regulator::exponential();
  auto gf = GFunction::dirichlet(1.0, CutoffLambda(0.01), ex);
  double good = bernoulli_hardy(2).to_double();
  double bad = 1.0 / 29.0;
  double shift = std::abs(bad - good) / 24.0 * std::abs(g_deriv(gf, 3, 0.0));
  CHECK(shift > 1e-3);
  double s2 = sigma_k(gf, 2);
  CHECK(shift / std::abs(s2) > 1e-3);  // vs the 1e-6 independence tolerance
}

TEST_CASE("preconditions and capability errors") {
  PlateGeometry D(1.0, BoundaryCondition::dirichlet);
  auto ex = Regulator::exponential();
  const double two[] = {0.02, 0.01};
  CHECK_THROWS_AS(decompose_energy(D, ex, two), std::domain_error);
  const double big[] = {0.3, 0.02, 0.01};
  CHECK_THROWS_AS(decompose_energy(D, ex, big), std::domain_error);
  const double dup[] = {0.02, 0.02, 0.01};
  CHECK_THROWS_AS(decompose_energy(D, ex, dup), std::domain_error);

  auto gf = GFunction::dirichlet(1.0, CutoffLambda(0.1), ex, /*max_order=*/6);
  CHECK(sigma_k(gf, 2) == doctest::Approx(-0.169843277204).epsilon(1e-9));
  CHECK_THROWS_AS(sigma_k(gf, 3), CapabilityError);
  CHECK_THROWS_AS(g_deriv(gf, 7, 1.0), CapabilityError);
  CHECK_THROWS_AS(sigma_k(gf, 0), std::domain_error);
}
