#pragma once

#include <array>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "casimir/types.hpp"

namespace casimir {

/// Endpoint power-singularity description: the integrand behaves like
/// sum_p a_p s^{-p} in the distance s to the named endpoint. Integer orders
/// p >= 2 only; coefficients are supplied analytically by the caller, never
/// fitted from samples.
struct SingularitySpec {
  enum class Endpoint { left, right };
  Endpoint endpoint = Endpoint::left;
  std::vector<std::pair<int, double>> coefficients;  // (order p, a_p)
};

struct FinitePartResult {
  double value;
  std::vector<std::pair<int, double>> subtracted;  // singular terms removed
  double epsilon_floor;  // smallest epsilon used in the internal limit check
};

/// Hadamard finite part of int_a^b f: quadrature of the regularized remainder
/// f - (singular part) plus the exact finite piece of the subtracted powers,
///   left endpoint:  sum_p a_p (b-a)^{1-p} / (1-p).
/// An epsilon-limit evaluation (Neville extrapolation of
/// int_{a+eps}^b f - sum_p a_p eps^{1-p}/(p-1)) cross-checks the closed form;
/// disagreement beyond max(tol, 1e-8) relative raises SpecMismatchError, which
/// is what a wrong or incomplete singular spec looks like. When `regularized`
/// is supplied it is integrated instead of f minus the spec (exact remainder,
/// no cancellation near the endpoint).
FinitePartResult pf_endpoint_integral(
    const std::function<double(double)>& f, const SingularitySpec& spec, double a,
    double b, double tol = 1e-10,
    const std::function<double(double)>* regularized = nullptr,
    double eps_scale = 0.2);

/// Plain epsilon-limit path, exposed for consistency testing: evaluates
/// h(eps) = int_{a+eps}^b f - (subtractions) on the given epsilons and
/// extrapolates eps -> 0 by Neville. No closed-form shortcut.
double pf_epsilon_limit(const std::function<double(double)>& f,
                        const SingularitySpec& spec, double a, double b,
                        std::span<const double> epsilons, double tol = 1e-10);

/// Finite part of the cutoff-removed Dirichlet density integrated across the
/// slab: the z^-4 poles at both plates are removed analytically (they carry
/// coefficient 1/(32 pi^2) each) and the remainder integrates to
/// -pi^2/(1440 d^3), reproducing the finite part of the energy per unit area.
double pf_energy_per_area_dirichlet(double d, double tol = 1e-12);

/// Test function for the pseudofunction derivative identity: phi plus its
/// second derivative and the Taylor coefficients c0..c3 of phi at 0 (needed for
/// the pole subtractions). phi must satisfy phi(1) = phi'(1) = 0.
struct PfTestFunction {
  std::function<double(double)> f;
  std::function<double(double)> second_derivative;
  std::array<double, 4> taylor_at_zero;  // c0, c1, c2, c3
};

struct PfIdentityResult {
  bool pass;
  double residual;
  double lhs;  // < PF(z^-4), phi >
  double rhs;  // (1/6) [ < PF(z^-2), phi'' > + 5 c3 ]
};

/// Checks < PF(z^-4), phi > = (1/6) [ < PF(z^-2), phi'' > + (5/6) phi'''(0) ]
/// on [0, 1]. The factor 6 is (z^-2)'' = 6 z^-4; the phi'''(0) term is the
/// point-supported part of the distributional derivative, which vanishes for
/// test functions flat to third order at the origin.
PfIdentityResult pf_derivative_identity_check(const PfTestFunction& phi,
                                              double tol = 1e-8);

}  // namespace casimir
