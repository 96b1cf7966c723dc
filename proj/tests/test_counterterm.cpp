#include "casimir/counterterm.hpp"

#include <doctest.h>

#include <cmath>

#include "casimir/euler_maclaurin.hpp"
#include "casimir/mode_sum.hpp"

using namespace casimir;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const double kEpsF = -kPi * kPi / 1440.0;
const PlateGeometry kD1{1.0, BoundaryCondition::dirichlet};
const PlateGeometry kP1{1.0, BoundaryCondition::periodic};
}  // namespace

TEST_CASE("per-plate surface density") {
  auto ex = Regulator::exponential();
  CHECK(surface_density(CutoffLambda(1.0), ex) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
  CHECK(surface_density(CutoffLambda(0.5), ex) ==
        doctest::Approx(8.0 / (2.0 * kPi)).epsilon(1e-15));
  CHECK(surface_density(CutoffLambda(1.0), Regulator::rational()) ==
        doctest::Approx(1.0 / (12.0 * kPi)).epsilon(1e-14));
  CHECK(1.0 / (12.0 * kPi) == doctest::Approx(0.026525823848649224).epsilon(1e-15));
  CHECK(surface_density(CutoffLambda(1.0), Regulator::gaussian()) ==
        doctest::Approx(std::sqrt(kPi) / (16.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("cubic homogeneity in the cutoff") {
  auto ga = Regulator::gaussian();
  double ref = surface_density(CutoffLambda(1.0), ga);
  for (double lam : {1e-3, 1e-2, 0.37, 2.0}) {
    double v = surface_density(CutoffLambda(lam), ga) * lam * lam * lam;
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("half the surface density matches the divergent coefficient") {
  PlateGeometry D(1.0, BoundaryCondition::dirichlet);
  const double sweep[] = {0.05, 0.02, 0.01, 0.005};
  for (auto reg : {Regulator::exponential(), Regulator::gaussian(),
                   Regulator::rational()}) {
    auto dec = decompose_energy(D, reg, sweep);
    double lam = 0.02;
    double half_sigma = 0.5 * surface_density(CutoffLambda(lam), reg);
    CHECK(half_sigma * lam * lam * lam ==
          doctest::Approx(std::abs(dec.c_div)).epsilon(1e-8));
  }
}

TEST_CASE("renormalized energy reaches the finite part") {
  auto ex = Regulator::exponential();
  double v = renormalized_energy_per_area(kD1, CutoffLambda(0.01), ex);
  CHECK(v == doctest::Approx(kEpsF).epsilon(1.5e-4));
  CHECK(std::abs(v - kEpsF) < 1e-6);  // measured residue ~9.7e-7 = O(L^2)
}

TEST_CASE("halving the cutoff quarters the residue") {
  auto ex = Regulator::exponential();
  double e1 =
      std::abs(renormalized_energy_per_area(kD1, CutoffLambda(0.01), ex) - kEpsF);
  double e2 =
      std::abs(renormalized_energy_per_area(kD1, CutoffLambda(0.005), ex) - kEpsF);
  double ratio = e1 / e2;
  CHECK(ratio > 4.0 * 0.85);
  CHECK(ratio < 4.0 * 1.15);
}

TEST_CASE("periodic needs no counterterm") {
  auto ex = Regulator::exponential();
  CutoffLambda L(0.01);
  CHECK(renormalized_energy_per_area(kP1, L, ex) ==
        energy_per_area_direct(kP1, L, ex));
  CHECK(renormalized_energy_per_area(kP1, L, ex) ==
        doctest::Approx(-0.10960043933859532).epsilon(1e-12));
  CHECK(std::abs(renormalized_energy_per_area(kP1, L, ex) + kPi * kPi / 90.0) < 2e-4);
}

TEST_CASE("renormalized value is regulator independent at small cutoff") {
  // the rational cutoff has no direct route, so the cross-check runs on the
  // two superexponential families
  CutoffLambda L(1e-3);
  double a = renormalized_energy_per_area(kD1, L, Regulator::exponential());
  double b = renormalized_energy_per_area(kD1, L, Regulator::gaussian());
  CHECK(a == doctest::Approx(b).epsilon(1e-4));
  CHECK(a == doctest::Approx(kEpsF).epsilon(1e-4));
}
