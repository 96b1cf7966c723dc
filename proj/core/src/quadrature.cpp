#include "casimir/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "casimir/types.hpp"

namespace casimir {

namespace {
using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
}

QuadratureResult integrate_no_throw(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol) {
  double err = 0.0;
  double v = GK::integrate(f, a, b, 15, rel_tol, &err);
  return {v, err};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_floor) {
  auto r = integrate_no_throw(f, a, b, rel_tol);
  double bound = std::max(rel_tol * std::abs(r.value), abs_floor);
  if (!(r.error <= std::max(bound, 1e-300)) || !std::isfinite(r.value)) {
    throw AccuracyError("quadrature did not reach the requested tolerance", r.error);
  }
  return r;
}

double gauss24(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 24>::integrate(f, a, b);
}

}  // namespace casimir
