#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace casimir {

/// Boundary condition on the two plates at z = 0 and z = d.
enum class BoundaryCondition { dirichlet, periodic };

/// Smooth-cutoff length scale. Strictly positive; the cutoff-removed limit is
/// always reached by extrapolation or closed form, never by evaluating at 0.
struct CutoffLambda {
  double value;

  explicit CutoffLambda(double v) : value(v) {
    if (!(v > 0.0)) throw std::domain_error("CutoffLambda: value must be > 0");
  }
};

/// Parallel-plate slab: separation d with the boundary-condition tag.
/// Dirichlet mode ladder: mu_n = n pi / d, weight (2/d) sin^2(n pi z / d), n >= 1.
/// Periodic mode ladder:  mu_n = 2|n| pi / d, weight 1/d, n in Z.
struct PlateGeometry {
  double d;
  BoundaryCondition bc;

  PlateGeometry(double separation, BoundaryCondition bc_) : d(separation), bc(bc_) {
    if (!(d > 0.0)) throw std::domain_error("PlateGeometry: d must be > 0");
  }
};

/// One vacuum-energy-density sample. `lambda` is empty for cutoff-removed values.
struct DensitySample {
  double z;
  double value;
  std::optional<double> lambda;
};

/// A requested tolerance could not be met; carries the bound actually achieved.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_bound(achieved) {}
  double achieved_bound;
};

/// Operation not supported by the supplied regulator (e.g. derivative order
/// beyond a user regulator's declared maximum).
class CapabilityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation requested at a non-integrable singular point.
class SingularityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Asymptotic fit of an energy sweep failed its residual tolerance.
class DecompositionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Supplied singular coefficients do not match the integrand (finite-part
/// value drifts under epsilon refinement).
class SpecMismatchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
