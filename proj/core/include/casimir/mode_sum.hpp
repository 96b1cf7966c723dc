#pragma once

#include "casimir/regulator.hpp"
#include "casimir/types.hpp"

namespace casimir {

/// J(mu, Lambda) = int_mu^inf w^2 C(Lambda w) dw. Closed form for the
/// exponential regulator, adaptive quadrature (1e-10 relative) otherwise.
double tail_integral(const Regulator& reg, double mu, CutoffLambda lambda);

/// K3(Lambda) = int_0^inf k^3 C(Lambda k) dk = moment3 / Lambda^4.
/// CapabilityError for regulators with a divergent free momentum integral.
double free_momentum_integral(const Regulator& reg, CutoffLambda lambda);

/// Regulated vacuum energy density at position z:
///   E_Lambda(z) = 1/2 [ (1/2pi) sum_n w_n(z) J(mu_n, Lambda)
///                       - (1/2pi^2) int_0^inf k^3 C(Lambda k) dk ],
/// i.e. plate modes minus free space. Zero exactly outside [0, d].
/// Exponential regulator: exact geometric closed form (long double, no
/// truncation). Other regulators: compensated truncated ladder sum; requires a
/// convergent free integral (AccuracyError otherwise, e.g. rational cutoff).
DensitySample density_direct(double z, const PlateGeometry& geom, CutoffLambda lambda,
                             const Regulator& reg, double tol = 1e-10);

/// Regulated energy per unit area, same sign convention (plates minus free).
/// Dirichlet: diverges like -M2/(8 pi Lambda^3) as Lambda -> 0; periodic stays
/// finite. Exponential: exact geometric closed form. Other superexponential
/// regulators: ladder terms paired with per-cell free-integral averages, which
/// keeps the large plate and free contributions from meeting in a single
/// catastrophic subtraction.
double energy_per_area_direct(const PlateGeometry& geom, CutoffLambda lambda,
                              const Regulator& reg, double tol = 1e-12);

}  // namespace casimir
