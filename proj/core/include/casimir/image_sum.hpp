#pragma once

#include "casimir/types.hpp"

namespace casimir {

/// Image kernel T(a, Lambda) = (a^2 - 3 Lambda^2) / (Lambda^2 + a^2)^3.
/// T -> 1/a^4 as Lambda -> 0 for a != 0.
double image_term(double a, CutoffLambda lambda);

/// Poisson-resummed density for the exponential regulator (exact in Lambda):
///   Dirichlet: (1/2pi^2) [ T(2z) - 2 sum_m T(2md) + sum_m (T(2(md+z)) + T(2(md-z))) ] / 1
///              with the overall 1/2 folded in,
///   periodic:  -(1/pi^2) sum_m T(md).
/// Image sums truncated at relative tail 1e-14 (quartic integral bound).
/// Zero outside [0, d].
double density_closed(double z, double d, CutoffLambda lambda, BoundaryCondition bc);

/// Cutoff-removed density.
///   Dirichlet: (1/(32 pi^2)) [ z^-4 - 2 sum_m (md)^-4 + sum_m ((md+z)^-4 + (md-z)^-4) ],
///              non-integrable at the plates (SingularityError at z = 0, d);
///   periodic:  -pi^2 / (90 d^4), homogeneous.
/// Zero outside [0, d].
double density_limit(double z, double d, BoundaryCondition bc, double tol = 1e-14);

/// Periodic energy per unit area, analytic: -pi^2 / (90 d^3).
double energy_per_area_periodic(double d);

namespace detail {

/// Cutoff-removed Dirichlet image sum in units of 1/(32 pi^2), with either
/// plate pole optionally omitted (shared with the finite-part module, which
/// needs the analytically regularized remainder near each plate).
double dirichlet_image_sum_reduced(double z, double d, bool omit_left_pole,
                                   bool omit_right_pole);

}  // namespace detail

}  // namespace casimir
