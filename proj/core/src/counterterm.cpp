#include "casimir/counterterm.hpp"

#include <cmath>

#include "casimir/mode_sum.hpp"

namespace casimir {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double surface_density(CutoffLambda lambda, const Regulator& reg) {
  double l = lambda.value;
  return reg.moment2() / (4.0 * kPi * l * l * l);
}

double renormalized_energy_per_area(const PlateGeometry& geom, CutoffLambda lambda,
                                    const Regulator& reg, double tol) {
  double direct = energy_per_area_direct(geom, lambda, reg, tol);
  if (geom.bc == BoundaryCondition::periodic) return direct;
  // two plates at quarter weight each; +1/2 surface_density cancels the
  // -M2/(8 pi Lambda^3) divergence of the direct energy
  return direct + 0.5 * surface_density(lambda, reg);
}

}  // namespace casimir
