#pragma once

#include <functional>
#include <limits>

namespace casimir {

struct QuadratureResult {
  double value;
  double error;  // estimated absolute error
};

/// Adaptive Gauss-Kronrod integration of f over [a, b]; b may be +infinity.
/// Throws AccuracyError when the error estimate exceeds
/// max(rel_tol * |value|, abs_floor).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-12, double abs_floor = 0.0);

/// Same, but returns the result without the tolerance check.
QuadratureResult integrate_no_throw(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol = 1e-12);

/// Fixed 24-point Gauss-Legendre rule on [a, b] (non-adaptive).
double gauss24(const std::function<double(double)>& f, double a, double b);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace casimir
