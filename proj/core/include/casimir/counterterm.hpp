#pragma once

#include "casimir/regulator.hpp"
#include "casimir/types.hpp"

namespace casimir {

/// Surface energy density carried by a single plate,
///   (1/4pi) int_0^inf k^2 C(Lambda k) dk = M2 / (4 pi Lambda^3).
double surface_density(CutoffLambda lambda, const Regulator& reg);

/// Energy per unit area with the surface-renormalization counterterm applied.
/// Dirichlet: energy_per_area_direct + (1/2) surface_density -- the quarter
/// weights of the two plate deltas add to 1/2 and cancel the -M2/(8 pi
/// Lambda^3) divergence exactly, leaving eps_f + O(Lambda^2). Periodic: no
/// surface term exists; returns energy_per_area_direct unchanged.
double renormalized_energy_per_area(const PlateGeometry& geom, CutoffLambda lambda,
                                    const Regulator& reg, double tol = 1e-12);

}  // namespace casimir
