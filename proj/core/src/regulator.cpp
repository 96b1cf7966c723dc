#include "casimir/regulator.hpp"

#include <cmath>
#include <limits>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kBuiltinMaxOrder = 64;

// physicists' Hermite polynomial H_i(x)
double hermite(int i, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (i == 0) return h0;
  for (int n = 1; n < i; ++n) {
    double h2 = 2.0 * x * h1 - 2.0 * n * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double rational_falling(int i) {
  // product (4)(5)...(3+i) = (3+i)!/3!
  double c = 1.0;
  for (int j = 0; j < i; ++j) c *= (4.0 + j);
  return c;
}

// upper incomplete gamma Gamma(s, x) for half-integer s >= 1/2 via the upward
// recurrence from Gamma(1/2,x) = sqrt(pi) erfc(sqrt x) and Gamma(1,x) = e^-x
double upper_gamma(double s, double x) {
  double g;
  double base;
  if (std::fmod(s, 1.0) == 0.0) {
    g = std::exp(-x);
    base = 1.0;
  } else {
    g = std::sqrt(kPi) * std::erfc(std::sqrt(x));
    base = 0.5;
  }
  for (double t = base; t < s; t += 1.0) g = t * g + std::pow(x, t) * std::exp(-x);
  return g;
}

}  // namespace

Regulator Regulator::exponential() {
  Regulator r;
  r.kind_ = RegulatorKind::exponential;
  r.name_ = "exp";
  r.max_order_ = kBuiltinMaxOrder;
  r.analytic_moment2_ = 2.0;
  r.free_momentum_integrable_ = true;
  return r;
}

Regulator Regulator::gaussian() {
  Regulator r;
  r.kind_ = RegulatorKind::gaussian;
  r.name_ = "gauss";
  r.max_order_ = kBuiltinMaxOrder;
  r.analytic_moment2_ = std::sqrt(kPi) / 4.0;
  r.free_momentum_integrable_ = true;
  return r;
}

Regulator Regulator::rational() {
  Regulator r;
  r.kind_ = RegulatorKind::rational;
  r.name_ = "rational";
  r.max_order_ = kBuiltinMaxOrder;
  r.analytic_moment2_ = 1.0 / 3.0;
  r.free_momentum_integrable_ = false;  // k^3 (1+k)^-4 is log-divergent
  return r;
}

Regulator Regulator::user(UserSpec spec) {
  if (!spec.eval) throw std::invalid_argument("Regulator::user: eval is required");
  if (spec.max_derivative_order < 7)
    throw CapabilityError("user regulator must support derivative order >= 7");
  Regulator r;
  r.kind_ = RegulatorKind::user;
  r.name_ = std::move(spec.name);
  r.max_order_ = spec.max_derivative_order;
  r.analytic_moment2_ = spec.analytic_moment2;
  r.free_momentum_integrable_ = spec.free_momentum_integrable;
  r.user_eval_ = std::move(spec.eval);
  r.user_deriv_ = std::move(spec.deriv);
  return r;
}

double Regulator::eval(double x) const {
  if (x < 0.0) throw std::domain_error("Regulator::eval: x must be >= 0");
  switch (kind_) {
    case RegulatorKind::exponential: return std::exp(-x);
    case RegulatorKind::gaussian: return std::exp(-x * x);
    case RegulatorKind::rational: {
      double v = 1.0 + x;
      double v2 = v * v;
      return 1.0 / (v2 * v2);
    }
    case RegulatorKind::user: return user_eval_(x);
  }
  return 0.0;
}

double Regulator::deriv(int k, double x) const {
  if (k < 1) throw std::domain_error("Regulator::deriv: k must be >= 1");
  if (x < 0.0) throw std::domain_error("Regulator::deriv: x must be >= 0");
  if (k > max_order_)
    throw CapabilityError("Regulator::deriv: order " + std::to_string(k) +
                          " beyond supported maximum " + std::to_string(max_order_));
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  switch (kind_) {
    case RegulatorKind::exponential: return sign * std::exp(-x);
    case RegulatorKind::gaussian: return sign * hermite(k, x) * std::exp(-x * x);
    case RegulatorKind::rational:
      return sign * rational_falling(k) * std::pow(1.0 + x, -4.0 - k);
    case RegulatorKind::user: break;
  }
  if (user_deriv_) return user_deriv_(k, x);
  // Richardson-extrapolated central differences; step shrinks with order.
  double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (k + 4)) *
             (1.0 + std::abs(x));
  auto central = [&](double step) {
    // k-th central difference: sum_j (-1)^j C(k,j) f(x + (k/2 - j) step) / step^k
    double s = 0.0, c = 1.0;
    for (int j = 0; j <= k; ++j) {
      double xx = x + (0.5 * k - j) * step;
      double fx = user_eval_(xx < 0.0 ? 0.0 : xx);
      s += ((j % 2 == 0) ? 1.0 : -1.0) * c * fx;
      c = c * (k - j) / (j + 1);
    }
    return s / std::pow(step, k);
  };
  double d1 = central(h), d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

double Regulator::moment2() const {
  if (analytic_moment2_) return *analytic_moment2_;
  auto f = [this](double u) { return u * u * eval(u); };
  auto r = integrate(f, 0.0, kInf, 1e-10);
  return r.value;
}

double Regulator::moment3() const {
  switch (kind_) {
    case RegulatorKind::exponential: return 6.0;
    case RegulatorKind::gaussian: return 0.5;
    case RegulatorKind::rational:
      throw CapabilityError("moment3: divergent for the rational cutoff");
    case RegulatorKind::user: break;
  }
  if (!free_momentum_integrable_)
    throw CapabilityError("moment3: regulator declared non-integrable");
  auto f = [this](double u) { return u * u * u * eval(u); };
  return integrate(f, 0.0, kInf, 1e-10).value;
}

double Regulator::weighted_deriv_tail_bound(int i, int p, double x0) const {
  if (p < 0 || p > 3) throw std::domain_error("weighted_deriv_tail_bound: p in [0,3]");
  if (x0 < 0.0) x0 = 0.0;
  switch (kind_) {
    case RegulatorKind::exponential:
      // int_x0^inf u^p e^-u du = Gamma(p+1, x0)
      return upper_gamma(p + 1.0, x0);
    case RegulatorKind::gaussian: {
      // |H_i(u)| <= 2 (2u)^i for u >= max(1, i); push x0 up to the valid range
      double lo = std::max({x0, 1.0, static_cast<double>(i)});
      // int_lo^inf 2 (2u)^i u^p e^{-u^2} du = 2^i Gamma((i+p+1)/2, lo^2)
      double extra = (lo > x0) ? (lo - x0) * 2.0 * std::pow(2.0 * lo, i) : 0.0;
      return std::pow(2.0, i) * upper_gamma(0.5 * (i + p + 1), lo * lo) + extra;
    }
    case RegulatorKind::rational: {
      // |C^(i)(u)| = c_i (1+u)^{-4-i}; u^p <= (1+u)^p
      double c = rational_falling(i);
      int q = 3 + i - p;
      return c * std::pow(1.0 + x0, -q) / q;
    }
    case RegulatorKind::user: {
      // conservative sampled geometric envelope
      double v = std::abs(i == 0 ? eval(x0) : deriv(i, x0));
      double v2 = std::abs(i == 0 ? eval(x0 + 1.0) : deriv(i, x0 + 1.0));
      double ratio = (v > 0.0) ? std::min(v2 / v, 0.99) : 0.0;
      double amp = std::pow(x0 + 2.0, p) * v;
      return amp / (1.0 - ratio);
    }
  }
  return 0.0;
}

Regulator make_regulator(std::string_view name) {
  if (name == "exp") return Regulator::exponential();
  if (name == "gauss") return Regulator::gaussian();
  if (name == "rational") return Regulator::rational();
  throw std::invalid_argument("unknown regulator '" + std::string(name) +
                              "' (expected exp|gauss|rational)");
}

bool AdmissibilityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

AdmissibilityReport validate(const Regulator& reg, double x_max) {
  AdmissibilityReport rep;
  auto add = [&rep](std::string cond, bool pass, std::string detail) {
    rep.checks.push_back({std::move(cond), pass, std::move(detail)});
  };

  // normalization
  double c0 = reg.eval(0.0);
  add("C(0) = 1", std::abs(c0 - 1.0) <= 1e-12, "C(0) = " + fmt(c0));

  // jump scan: the max local difference quotient of a smooth C is stable under
  // grid refinement, while a jump quadruples it
  bool smooth = true;
  std::string smooth_detail;
  {
    auto lip = [&](int n) {
      double h = x_max / n, worst = 0.0;
      for (int i = 0; i < n; ++i) {
        double x = i * h;
        worst = std::max(worst, std::abs(reg.eval(x + h) - reg.eval(x)) / h);
      }
      return worst;
    };
    double l1 = lip(2000), l2 = lip(8000);
    if (l2 > 2.5 * l1 + 1e-12) {
      smooth = false;
      smooth_detail = "local difference quotient grows under refinement (" + fmt(l1) +
                      " -> " + fmt(l2) + ")";
    }
  }

  // derivative consistency: C^(k) against central differences of C^(k-1)
  for (int k = 1; k <= 6 && smooth; ++k) {
    for (double x : {0.3, 0.9, 1.5, 2.5, 7.0}) {
      auto lower = [&](double xx) {
        return k == 1 ? reg.eval(xx) : reg.deriv(k - 1, xx);
      };
      double h = 1e-4 * (1.0 + x);
      double fd1 = (lower(x + h) - lower(x - h)) / (2.0 * h);
      double fd2 = (lower(x + h / 2) - lower(x - h / 2)) / h;
      double fd = (4.0 * fd2 - fd1) / 3.0;
      double dv = reg.deriv(k, x);
      double scale = std::max({std::abs(dv), std::abs(fd), 1e-8});
      if (std::abs(fd - dv) > 1e-3 * scale) {
        smooth = false;
        smooth_detail = "k=" + std::to_string(k) + " x=" + fmt(x) +
                        ": deriv=" + fmt(dv) + " fd=" + fmt(fd);
        break;
      }
    }
  }
  add("derivatives consistent (smoothness)", smooth, smooth_detail);

  // decay of C^(k) at large argument, k = 0..6
  bool decays = true;
  std::string decay_detail;
  for (int k = 0; k <= 6 && decays; ++k) {
    double near = std::abs(k == 0 ? reg.eval(1.0) : reg.deriv(k, 1.0));
    double far = std::abs(k == 0 ? reg.eval(x_max) : reg.deriv(k, x_max));
    double farther = std::abs(k == 0 ? reg.eval(2.0 * x_max) : reg.deriv(k, 2.0 * x_max));
    if (!(far <= 1e-3 * std::max(near, 1e-12) || far <= 1e-14) ||
        !(farther <= far * 1.01 + 1e-300)) {
      decays = false;
      decay_detail = "k=" + std::to_string(k) + ": |C^(k)(" + fmt(x_max) +
                     ")| = " + fmt(far);
    }
  }
  add("C^(k) -> 0 at infinity (k <= 6)", decays, decay_detail);

  // integrability of |C^(k)| on [0, x_max] + tail bound
  bool integrable = true;
  std::string int_detail;
  for (int k = 1; k <= 6 && integrable; ++k) {
    try {
      auto f = [&](double x) { return std::abs(reg.deriv(k, x)); };
      auto r = integrate_no_throw(f, 0.0, x_max, 1e-8);
      double tail = reg.weighted_deriv_tail_bound(k, 0, x_max);
      if (!std::isfinite(r.value) || !std::isfinite(tail) ||
          r.error > 1e-4 * std::max(r.value, 1e-12)) {
        integrable = false;
        int_detail = "k=" + std::to_string(k) + ": integral=" + fmt(r.value) +
                     " err=" + fmt(r.error);
      }
    } catch (const std::exception& e) {
      integrable = false;
      int_detail = "k=" + std::to_string(k) + ": " + e.what();
    }
  }
  add("int |C^(k)| finite (k <= 6)", integrable, int_detail);

  // second moment
  bool m2ok = true;
  std::string m2_detail;
  try {
    // bounded-domain integral plus tail estimate; a non-decaying C makes the
    // tail estimate blow up
    auto f = [&](double u) { return u * u * reg.eval(u); };
    double head = integrate_no_throw(f, 0.0, x_max, 1e-10).value;
    double tail = reg.weighted_deriv_tail_bound(0, 2, x_max);
    double m2 = head + 0.5 * tail;
    m2ok = std::isfinite(m2) && m2 > 0.0 && tail < 0.5 * std::max(head, 1e-12);
    m2_detail = "M2 ~ " + fmt(m2) + " (tail bound " + fmt(tail) + ")";
  } catch (const std::exception& e) {
    m2ok = false;
    m2_detail = e.what();
  }
  add("M2 finite and positive", m2ok, m2_detail);

  return rep;
}

}  // namespace casimir
