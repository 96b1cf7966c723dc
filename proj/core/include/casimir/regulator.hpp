#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/types.hpp"

namespace casimir {

enum class RegulatorKind { exponential, gaussian, rational, user };

/// Smooth cutoff function C on [0, inf) from the admissible class:
///   C(0) = 1,
///   C^(k)(x) -> 0 as x -> inf for every k >= 1,
///   int_0^inf |C^(k)(x)| dx < inf for every k >= 1.
/// A mode of frequency w is damped by C(Lambda * w).
///
/// Built-ins (exact derivatives to any order):
///   exponential  e^{-x}
///   gaussian     e^{-x^2}
///   rational     (1 + x)^{-4}
///
/// The built-ins differ qualitatively in their tails: the rational family decays
/// only algebraically, so its free-space momentum integral int k^3 C(Lambda k) dk
/// diverges and the direct plate-sum-minus-free-integral evaluators reject it;
/// every cutoff-removed result is still reachable through the summation-formula
/// route, which is the point of shipping it.
class Regulator {
 public:
  static Regulator exponential();
  static Regulator gaussian();
  static Regulator rational();

  /// User-supplied cutoff. `deriv` may be null, in which case derivatives fall
  /// back to Richardson-extrapolated central differences with step
  /// h_k = eps^{1/(k+4)} scaled by (1 + |x|); expect ~1e-9 relative accuracy for
  /// k = 1 degrading to ~1e-4 by k = 6. `max_derivative_order` must be >= 7
  /// (eighth g-derivatives consume seventh regulator derivatives).
  struct UserSpec {
    std::function<double(double)> eval;
    std::function<double(int, double)> deriv;  // optional exact derivatives
    int max_derivative_order = 7;
    std::optional<double> analytic_moment2;
    bool free_momentum_integrable = true;  // int_0^inf k^3 C(k) dk < inf
    std::string name = "user";
  };
  static Regulator user(UserSpec spec);

  /// C(x). Throws std::domain_error for x < 0.
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// k-th derivative C^(k)(x), k >= 1. Exact for built-ins; finite differences
  /// for user regulators without a deriv callback. Throws CapabilityError above
  /// max_derivative_order().
  double deriv(int k, double x) const;

  /// M2 = int_0^inf u^2 C(u) du. Analytic for built-ins; adaptive quadrature to
  /// 1e-10 relative otherwise (AccuracyError carries the achieved bound).
  double moment2() const;

  /// M3 = int_0^inf u^3 C(u) du; CapabilityError when not integrable.
  double moment3() const;

  RegulatorKind kind() const { return kind_; }
  std::string_view name() const { return name_; }
  int max_derivative_order() const { return max_order_; }
  bool free_momentum_integrable() const { return free_momentum_integrable_; }

  /// Upper bound for int_{x0}^inf u^p |C^(i)(u)| du, p in [0,3], i in [0, max].
  /// Used for truncation-tail control in mode sums and remainder integrals.
  double weighted_deriv_tail_bound(int i, int p, double x0) const;

 private:
  Regulator() = default;
  RegulatorKind kind_ = RegulatorKind::user;
  std::string name_;
  int max_order_ = 7;
  bool free_momentum_integrable_ = true;
  std::optional<double> analytic_moment2_;
  std::function<double(double)> user_eval_;
  std::function<double(int, double)> user_deriv_;
};

/// Factory from the CLI spelling: "exp" | "gauss" | "rational".
Regulator make_regulator(std::string_view name);

struct AdmissibilityCheck {
  std::string condition;
  bool pass;
  std::string detail;
};

struct AdmissibilityReport {
  std::vector<AdmissibilityCheck> checks;
  bool all_pass() const;
};

/// Numerical admissibility audit on [0, x_max] plus tail bounds:
/// normalization C(0)=1 to 1e-12, derivative decay for k <= 6 at large sampled
/// arguments, integrability of |C^(k)| by bounded-tail quadrature, finiteness
/// and positivity of M2, and finite-difference consistency of the derivatives
/// (catches non-smooth candidates). Failures are report entries, not errors.
AdmissibilityReport validate(const Regulator& reg, double x_max = 50.0);

}  // namespace casimir
