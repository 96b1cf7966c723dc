#include "casimir/finite_part.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "casimir/image_sum.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_spec(const SingularitySpec& spec) {
  for (auto [p, a] : spec.coefficients) {
    (void)a;
    if (p < 2)
      throw std::domain_error("SingularitySpec: only integer pole orders >= 2");
  }
}

double singular_part(const SingularitySpec& spec, double s) {
  double v = 0.0;
  for (auto [p, a] : spec.coefficients) v += a * std::pow(s, -p);
  return v;
}

// finite piece of the subtracted powers over an interval of length h:
// sum_p a_p h^{1-p} / (1-p)
double subtracted_finite_piece(const SingularitySpec& spec, double h) {
  double v = 0.0;
  for (auto [p, a] : spec.coefficients) v += a * std::pow(h, 1 - p) / (1.0 - p);
  return v;
}

double neville_at_zero(std::vector<double> xs, std::vector<double> ys) {
  const size_t n = xs.size();
  for (size_t m = 1; m < n; ++m)
    for (size_t i = 0; i + m < n; ++i)
      ys[i] = (xs[i + m] * ys[i] - xs[i] * ys[i + 1]) / (xs[i + m] - xs[i]);
  return ys[0];
}

// h(eps) = int_{a+eps}^b f - (divergent subtractions); evaluated in the
// algebraically identical form int_{a+eps}^b (f - S) + (finite piece of S),
// which keeps every intermediate O(1). A wrong singular spec leaves a pole in
// f - S and the extrapolation drifts, which is exactly what the caller checks.
double eps_limit(const std::function<double(double)>& remainder,
                 const SingularitySpec& spec, double a, double b,
                 std::span<const double> epsilons, double tol) {
  const bool left = spec.endpoint == SingularitySpec::Endpoint::left;
  std::vector<double> xs(epsilons.begin(), epsilons.end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  const double fin = subtracted_finite_piece(spec, b - a);
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double e : xs) {
    double lo = left ? a + e : a;
    double hi = left ? b : b - e;
    double v = integrate_no_throw(remainder, lo, hi, std::min(tol, 1e-11)).value;
    ys.push_back(v + fin);
  }
  return neville_at_zero(std::move(xs), std::move(ys));
}

std::function<double(double)> make_remainder(const std::function<double(double)>& f,
                                             const SingularitySpec& spec, double a,
                                             double b) {
  const bool left = spec.endpoint == SingularitySpec::Endpoint::left;
  return [&f, &spec, a, b, left](double z) {
    double s = left ? z - a : b - z;
    return f(z) - singular_part(spec, s);
  };
}

}  // namespace

FinitePartResult pf_endpoint_integral(const std::function<double(double)>& f,
                                      const SingularitySpec& spec, double a, double b,
                                      double tol,
                                      const std::function<double(double)>* regularized,
                                      double eps_scale) {
  if (!(b > a)) throw std::domain_error("pf_endpoint_integral: need b > a");
  if (!(eps_scale > 0.0) || eps_scale > 0.5)
    throw std::domain_error("pf_endpoint_integral: eps_scale in (0, 0.5]");
  check_spec(spec);

  const double finite_piece = subtracted_finite_piece(spec, b - a);
  const double eps0 = eps_scale * (b - a);
  FinitePartResult out;
  out.subtracted = spec.coefficients;

  if (regularized || spec.coefficients.empty()) {
    // exact remainder (or nothing singular at all): integrate the full domain,
    // extrapolation as cross-check
    const std::function<double(double)>& rem = regularized ? *regularized : f;
    auto qr = integrate_no_throw(rem, a, b, std::min(tol, 1e-11));
    out.value = qr.value + finite_piece;
    double scale = std::abs(out.value) + std::abs(finite_piece) + std::abs(qr.value);
    if (qr.error > std::max(tol * scale, 1e-13 * scale))
      throw AccuracyError("pf_endpoint_integral: remainder quadrature stalled",
                          qr.error);
    std::array<double, 4> eps{eps0 / 2, eps0 / 4, eps0 / 8, eps0 / 16};
    double lim = eps_limit(rem, spec, a, b, eps, tol);
    if (std::abs(lim - out.value) > std::max(1e4 * tol, 1e-4) * scale)
      throw SpecMismatchError(
          "pf_endpoint_integral: epsilon-limit drift; singular spec mismatch");
    out.epsilon_floor = eps.back();
    return out;
  }

  // raw path: f - (singular part) suffers total cancellation too close to the
  // endpoint, so the head is never integrated through; the cut is extrapolated
  // to zero from safe distances instead
  auto remainder = make_remainder(f, spec, a, b);
  std::array<double, 5> eps5{eps0, eps0 / 2, eps0 / 4, eps0 / 8, eps0 / 16};
  std::array<double, 4> eps4{eps0 / 2, eps0 / 4, eps0 / 8, eps0 / 16};
  double v5 = eps_limit(remainder, spec, a, b, eps5, tol);
  double v4 = eps_limit(remainder, spec, a, b, eps4, tol);
  out.value = v5;
  double scale = std::abs(v5) + std::abs(finite_piece);
  // the two node sets agree for a continuous remainder; a wrong singular spec
  // leaves a pole in it and the extrapolations diverge from each other
  if (std::abs(v5 - v4) > std::max(1e4 * tol, 1e-4) * scale)
    throw SpecMismatchError(
        "pf_endpoint_integral: epsilon-limit drift; singular spec mismatch");
  out.epsilon_floor = eps5.back();
  return out;
}

double pf_epsilon_limit(const std::function<double(double)>& f,
                        const SingularitySpec& spec, double a, double b,
                        std::span<const double> epsilons, double tol) {
  if (epsilons.size() < 2)
    throw std::domain_error("pf_epsilon_limit: need at least two epsilons");
  check_spec(spec);
  auto remainder = make_remainder(f, spec, a, b);
  return eps_limit(remainder, spec, a, b, epsilons, tol);
}

double pf_energy_per_area_dirichlet(double d, double tol) {
  if (!(d > 0.0)) throw std::domain_error("pf_energy_per_area_dirichlet: d > 0");
  const double c4 = 1.0 / (32.0 * kPi * kPi);

  // density with the z = 0 pole removed analytically
  auto reg_left = [d, c4](double z) {
    return c4 * detail::dirichlet_image_sum_reduced(z, d, true, false);
  };
  // density with the z = d pole (the m = 1 image at md - z) removed
  auto reg_right = [d, c4](double z) {
    return c4 * detail::dirichlet_image_sum_reduced(z, d, false, true);
  };

  auto density = [d](double z) {
    return density_limit(z, d, BoundaryCondition::dirichlet, 1e-15);
  };

  SingularitySpec left{SingularitySpec::Endpoint::left, {{4, c4}}};
  std::function<double(double)> reg_left_fn = reg_left;
  auto r1 = pf_endpoint_integral(density, left, 0.0, 0.5 * d, tol, &reg_left_fn);

  SingularitySpec right{SingularitySpec::Endpoint::right, {{4, c4}}};
  std::function<double(double)> reg_right_fn = reg_right;
  auto r2 = pf_endpoint_integral(density, right, 0.5 * d, d, tol, &reg_right_fn);

  return r1.value + r2.value;
}

PfIdentityResult pf_derivative_identity_check(const PfTestFunction& phi, double tol) {
  if (!phi.f || !phi.second_derivative)
    throw std::invalid_argument("pf_derivative_identity_check: callbacks required");
  if (std::abs(phi.f(1.0)) > 1e-10 || std::abs(phi.f(1.0 - 1e-5)) > 1e-6)
    throw std::domain_error(
        "pf_derivative_identity_check: phi must vanish to second order at z = 1");
  const auto [c0, c1, c2, c3] = phi.taylor_at_zero;

  // < PF(z^-4), phi >: subtract the cubic Taylor polynomial; on [0,1] the
  // subtracted powers contribute -c0/3 - c1/2 - c2 (the z^-1 log piece is 0)
  auto rem4 = [&](double z) {
    double p3 = ((c3 * z + c2) * z + c1) * z + c0;
    return (phi.f(z) - p3) / (z * z * z * z);
  };
  double lhs = integrate_no_throw(rem4, 0.0, 1.0, 1e-11).value - c0 / 3.0 - c1 / 2.0 - c2;

  // < PF(z^-2), phi'' >: phi''(z) ~ 2 c2 + 6 c3 z near 0
  auto rem2 = [&](double z) {
    return (phi.second_derivative(z) - 2.0 * c2 - 6.0 * c3 * z) / (z * z);
  };
  double pf2 = integrate_no_throw(rem2, 0.0, 1.0, 1e-11).value - 2.0 * c2;

  // derivative pairing: the factor 6 from (z^-2)'' and the point-supported
  // correction (5/6) phi'''(0) = 5 c3
  double rhs = (pf2 + 5.0 * c3) / 6.0;

  PfIdentityResult out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.residual = std::abs(lhs - rhs);
  out.pass = out.residual <= tol * std::max(1.0, std::abs(lhs));
  return out;
}

}  // namespace casimir
