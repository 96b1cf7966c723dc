#include "casimir/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <vector>

#include "casimir/bernoulli.hpp"
#include "casimir/counterterm.hpp"
#include "casimir/euler_maclaurin.hpp"
#include "casimir/finite_part.hpp"
#include "casimir/image_sum.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/report.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kEpsF = -kPi * kPi / 1440.0;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = x.size();
  for (size_t i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> geomspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return v;
}

std::string fmt(double v) { return format_double(v); }

struct Criterion {
  std::string id;
  std::string description;
  std::function<void(CriterionResult&)> run;
};

// worst-case tracker: pass iff achieved <= tolerance
void worst(CriterionResult& r, double achieved) {
  r.achieved = std::max(r.achieved, achieved);
}

std::vector<Criterion> build_criteria() {
  std::vector<Criterion> cs;

  cs.push_back({"closed-vs-direct",
                "image-sum closed form vs direct mode sum, exponential cutoff",
                [](CriterionResult& r) {
                  r.tolerance = 1e-8;
                  PlateGeometry geom(1.0, BoundaryCondition::dirichlet);
                  auto reg = Regulator::exponential();
                  for (double lam : {0.05, 0.1, 0.2}) {
                    CutoffLambda L(lam);
                    for (int i = 1; i <= 9; ++i) {
                      double z = 0.1 * i;
                      double a = density_direct(z, geom, L, reg, 1e-12).value;
                      double b = density_closed(z, 1.0, L, BoundaryCondition::dirichlet);
                      worst(r, rel(a, b));
                    }
                  }
                  r.pass = r.achieved <= r.tolerance;
                  r.detail = "max relative deviation over 27 grid points";
                }});

  cs.push_back({"periodic-exact",
                "periodic density at small cutoff; analytic energy per area",
                [](CriterionResult& r) {
                  r.tolerance = 1e-5;
                  PlateGeometry geom(1.0, BoundaryCondition::periodic);
                  auto reg = Regulator::exponential();
                  CutoffLambda L(1e-3);
                  double target = -kPi * kPi / 90.0;
                  std::vector<double> vals;
                  for (double z : {0.1, 0.25, 0.5, 0.75, 0.9})
                    vals.push_back(density_direct(z, geom, L, reg, 1e-12).value);
                  for (double v : vals) worst(r, rel(v, target));
                  double zdep = 0.0;
                  for (double v : vals) zdep = std::max(zdep, rel(v, vals[0]));
                  double analytic = energy_per_area_periodic(1.0);
                  bool ok = r.achieved <= r.tolerance && zdep <= 1e-10 &&
                            rel(analytic, target) <= 1e-15;
                  r.pass = ok;
                  r.detail = "value dev " + fmt(r.achieved) + ", z-dependence " +
                             fmt(zdep) + ", analytic dev " + fmt(rel(analytic, target));
                }});

  cs.push_back(
      {"thm31", "correction term independent of the summation order k",
       [](CriterionResult& r) {
         r.tolerance = 1e-6;
         const int ks[] = {2, 3, 4};
         for (auto reg :
              {Regulator::exponential(), Regulator::gaussian(), Regulator::rational()}) {
           for (double lam : {0.1, 0.01}) {
             auto gf = GFunction::dirichlet(1.0, CutoffLambda(lam), reg);
             worst(r, check_sigma_independence(ks, gf));
           }
         }
         r.pass = r.achieved <= r.tolerance;
         r.detail = "max pairwise deviation, k in {2,3,4}, 3 regulators x 2 cutoffs";
       }});

  cs.push_back(
      {"thm32", "regulator-independent finite part; divergent coefficient",
       [](CriterionResult& r) {
         r.tolerance = 1e-4;
         const double sweep[] = {0.05, 0.02, 0.01, 0.005};
         double cdev = 0.0;
         std::vector<double> eps_list;
         for (auto reg :
              {Regulator::exponential(), Regulator::gaussian(), Regulator::rational()}) {
           PlateGeometry geom(1.0, BoundaryCondition::dirichlet);
           auto dec = decompose_energy(geom, reg, sweep);
           worst(r, rel(dec.eps_f, kEpsF));
           double m = reg.moment2() / (8.0 * kPi);
           cdev = std::max(cdev, std::abs(std::abs(dec.c_div) - m) / m);
           if (dec.c_div >= 0.0) cdev = 1.0;  // sign must be negative (plate - free)
           if (dec.direct_fit_available)
             cdev = std::max(cdev, std::abs(std::abs(dec.c_div_direct) - m) / m);
           eps_list.push_back(dec.eps_f);
         }
         double pairwise = 0.0;
         for (double a : eps_list)
           for (double b : eps_list) pairwise = std::max(pairwise, rel(a, b));
         r.pass = r.achieved <= r.tolerance && cdev <= 1e-6 && pairwise <= 1e-4;
         r.detail = "eps_f dev " + fmt(r.achieved) + ", |c_div| vs M2/(8pi) dev " +
                    fmt(cdev) + ", pairwise " + fmt(pairwise);
       }});

  cs.push_back({"remainder-law", "residual after removing divergence scales as L^2",
                [](CriterionResult& r) {
                  r.tolerance = 0.1;
                  auto reg = Regulator::exponential();
                  auto lams = geomspace(1e-3, 1e-1, 9);
                  std::vector<double> resid;
                  for (double lam : lams) {
                    auto gf = GFunction::dirichlet(1.0, CutoffLambda(lam), reg);
                    resid.push_back(std::abs(sigma_k(gf, 2) / (8.0 * kPi) - kEpsF));
                  }
                  double p = loglog_slope(lams, resid);
                  r.achieved = std::abs(p - 2.0);
                  r.pass = r.achieved <= r.tolerance;
                  r.detail = "fitted exponent " + fmt(p);
                }});

  cs.push_back(
      {"thm41", "finite-part integral of the divergent density recovers eps_f",
       [](CriterionResult& r) {
         r.tolerance = 1e-8;
         double v = pf_energy_per_area_dirichlet(1.0, 1e-12);
         worst(r, rel(v, kEpsF));
         const double sweep[] = {0.05, 0.02, 0.01, 0.005};
         PlateGeometry geom(1.0, BoundaryCondition::dirichlet);
         auto dec = decompose_energy(geom, Regulator::exponential(), sweep);
         double cross = rel(v, dec.eps_f);
         // unit finite part: z^-4/(16 pi^2) on [0,1] -> -1/(48 pi^2)
         double c = 1.0 / (16.0 * kPi * kPi);
         SingularitySpec spec{SingularitySpec::Endpoint::left, {{4, c}}};
         auto unit = pf_endpoint_integral(
             [c](double z) { return c / (z * z * z * z); }, spec, 0.0, 1.0, 1e-13);
         double unit_dev = std::abs(unit.value + 1.0 / (48.0 * kPi * kPi));
         r.pass = r.achieved <= r.tolerance && cross <= 1e-6 && unit_dev <= 1e-12;
         r.detail = "value " + fmt(v) + ", cross-path dev " + fmt(cross) +
                    ", unit-case dev " + fmt(unit_dev);
       }});

  cs.push_back(
      {"symanzik", "surface counterterm renders the energy finite, O(L^2) residue",
       [](CriterionResult& r) {
         r.tolerance = 2e-4;
         PlateGeometry geom(1.0, BoundaryCondition::dirichlet);
         auto reg = Regulator::exponential();
         double e1 = renormalized_energy_per_area(geom, CutoffLambda(0.01), reg);
         double e2 = renormalized_energy_per_area(geom, CutoffLambda(0.005), reg);
         double err1 = std::abs(e1 - kEpsF), err2 = std::abs(e2 - kEpsF);
         worst(r, err1 / std::abs(kEpsF));
         double ratio = err1 / err2;
         bool ratio_ok = ratio >= 4.0 * 0.85 && ratio <= 4.0 * 1.15;
         r.pass = r.achieved <= r.tolerance && ratio_ok;
         r.detail = "relative residue " + fmt(r.achieved) + ", halving ratio " +
                    fmt(ratio);
       }});

  cs.push_back(
      {"periodic-ratio", "no surface term for periodic b.c.; eps_P / eps_f = 16",
       [](CriterionResult& r) {
         r.tolerance = 1e-10;
         const double sweep[] = {0.05, 0.02, 0.01, 0.005};
         PlateGeometry geom(1.0, BoundaryCondition::periodic);
         auto dec = decompose_energy(geom, Regulator::exponential(), sweep);
         worst(r, std::abs(dec.c_div));
         if (dec.direct_fit_available) worst(r, std::abs(dec.c_div_direct));
         double ratio = energy_per_area_periodic(1.0) / kEpsF;
         double ratio_dev = std::abs(ratio - 16.0) / 16.0;
         r.pass = r.achieved <= r.tolerance && ratio_dev <= 1e-10;
         r.detail = "|c_div| " + fmt(r.achieved) + ", ratio dev " + fmt(ratio_dev);
       }});

  cs.push_back(
      {"dirichlet-divergence", "plate-edge divergence of the integrated density",
       [](CriterionResult& r) {
         r.tolerance = 0.05;
         auto lams = geomspace(1e-3, 1e-1, 7);
         std::vector<double> vals;
         for (double e : lams) {
           auto f = [](double z) {
             return density_limit(z, 1.0, BoundaryCondition::dirichlet, 1e-12);
           };
           vals.push_back(integrate_no_throw(f, e, 1.0 - e, 1e-10).value);
         }
         double slope = loglog_slope(lams, vals);
         r.achieved = std::abs(slope + 3.0);
         bool positive_growth = vals.front() > vals.back() && vals.front() > 0.0;
         r.pass = r.achieved <= r.tolerance && positive_growth;
         r.detail = "fitted exponent " + fmt(slope) +
                    " (divergent |energy|; sign convention documented)";
       }});

  cs.push_back(
      {"property-suites", "recurrences, derivative checks, linearity, determinism",
       [](CriterionResult& r) {
         r.tolerance = 1.0;  // composite: achieved counts failed sub-checks
         r.achieved = 0.0;
         std::string fails;

         // psi recurrences at 50 interior points to 1e-8
         {
           double h = 1e-6, bad = 0.0;
           for (int i = 1; i <= 50; ++i) {
             double t = 0.012 + 0.019 * i;
             for (int m = 2; m <= 5; ++m) {
               double dpsi = (psi(2 * m, t + h) - psi(2 * m, t - h)) / (2 * h);
               bad = std::max(bad, std::abs(psi(2 * m - 1, t) - dpsi / (2 * m)));
             }
             for (int m = 1; m <= 4; ++m) {
               double dpsi = (psi(2 * m + 1, t + h) - psi(2 * m + 1, t - h)) / (2 * h);
               double sgn = (m % 2 == 0) ? 1.0 : -1.0;
               double rhs = dpsi / (2 * m + 1) + sgn * bernoulli_hardy(m).to_double();
               bad = std::max(bad, std::abs(psi(2 * m, t) - rhs));
             }
             bad = std::max(bad, std::abs(psi(6, t) - psi(6, t + 1.0)));
           }
           if (bad > 1e-8) {
             r.achieved += 1.0;
             fails += " psi-recurrence(" + fmt(bad) + ")";
           }
         }

         // g_deriv vs finite differences of g_eval, orders 1..4, to 1e-6
         {
           auto gf = GFunction::dirichlet(1.0, CutoffLambda(0.1),
                                          Regulator::exponential());
           auto g = [&](double m) { return g_eval(gf, m); };
           double m0 = 1.3, h = 0.05, bad = 0.0;
           auto at = [&](double o) { return g(m0 + o * h); };
           double fd1 =
               (at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * h);
           double fd2 =
               (-at(-2) + 16 * at(-1) - 30 * at(0) + 16 * at(1) - at(2)) /
               (12 * h * h);
           double fd3 = (at(-3) - 8 * at(-2) + 13 * at(-1) - 13 * at(1) +
                         8 * at(2) - at(3)) /
                        (8 * h * h * h);
           double fd4 = (-at(-3) + 12 * at(-2) - 39 * at(-1) + 56 * at(0) -
                         39 * at(1) + 12 * at(2) - at(3)) /
                        (6 * h * h * h * h);
           bad = std::max(bad, rel(g_deriv(gf, 1, m0), fd1));
           bad = std::max(bad, rel(g_deriv(gf, 2, m0), fd2));
           bad = std::max(bad, rel(g_deriv(gf, 3, m0), fd3));
           bad = std::max(bad, rel(g_deriv(gf, 4, m0), fd4));
           if (bad > 1e-6) {
             r.achieved += 1.0;
             fails += " g-deriv-fd(" + fmt(bad) + ")";
           }
         }

         // PF linearity to 1e-12 and epsilon-limit consistency to 1e-8
         {
           auto f1 = [](double z) { return 1.0 / (z * z * z * z) + std::cos(z); };
           auto f2 = [](double z) { return 2.0 / (z * z) + z; };
           double alpha = 0.7;
           auto combo = [&](double z) { return alpha * f1(z) + f2(z); };
           SingularitySpec s1{SingularitySpec::Endpoint::left, {{4, 1.0}}};
           SingularitySpec s2{SingularitySpec::Endpoint::left, {{2, 2.0}}};
           SingularitySpec sc{SingularitySpec::Endpoint::left,
                              {{4, alpha * 1.0}, {2, 2.0}}};
           std::function<double(double)> r1 = [](double z) { return std::cos(z); };
           std::function<double(double)> r2 = [](double z) { return z; };
           std::function<double(double)> rc = [&](double z) {
             return alpha * std::cos(z) + z;
           };
           double v1 = pf_endpoint_integral(f1, s1, 0.0, 1.0, 1e-13, &r1).value;
           double v2 = pf_endpoint_integral(f2, s2, 0.0, 1.0, 1e-13, &r2).value;
           double vc = pf_endpoint_integral(combo, sc, 0.0, 1.0, 1e-13, &rc).value;
           double lin = std::abs(vc - (alpha * v1 + v2));
           // epsilon-limit route against the closed form, moderate-pole case
           auto f3 = [](double z) { return 0.01 / (z * z) + std::cos(z); };
           SingularitySpec s3{SingularitySpec::Endpoint::left, {{2, 0.01}}};
           double v3 = pf_endpoint_integral(f3, s3, 0.0, 1.0, 1e-13).value;
           const double eps[] = {1e-2, 1e-3, 1e-4, 1e-5};
           double lim = pf_epsilon_limit(f3, s3, 0.0, 1.0, eps);
           double cons = rel(lim, v3);
           if (lin > 1e-12) {
             r.achieved += 1.0;
             fails += " pf-linearity(" + fmt(lin) + ")";
           }
           if (cons > 1e-8) {
             r.achieved += 1.0;
             fails += " pf-eps-limit(" + fmt(cons) + ")";
           }
         }

         // determinism: identical bytes from two independent evaluations
         {
           auto render = [] {
             std::string s = "z,value\n";
             PlateGeometry geom(1.0, BoundaryCondition::dirichlet);
             auto reg = Regulator::exponential();
             for (int i = 1; i < 10; ++i) {
               double z = 0.1 * i;
               auto d = density_direct(z, geom, CutoffLambda(0.05), reg);
               s += csv_line({format_double(z), format_double(d.value)});
             }
             const double sweep[] = {0.05, 0.02, 0.01, 0.005};
             auto dec = decompose_energy(geom, Regulator::exponential(), sweep);
             s += format_double(dec.c_div) + "|" + format_double(dec.eps_f) + "|" +
                  format_double(dec.remainder_exponent) + "\n";
             return s;
           };
           if (render() != render()) {
             r.achieved += 1.0;
             fails += " determinism";
           }
         }

         r.tolerance = 0.0;
         r.pass = r.achieved == 0.0;
         r.detail = fails.empty() ? "all sub-checks passed" : ("failed:" + fails);
       }});

  return cs;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::string_view filter) {
  std::vector<CriterionResult> out;
  for (auto& c : build_criteria()) {
    if (!filter.empty() && c.id.find(filter) == std::string::npos) continue;
    CriterionResult r;
    r.id = c.id;
    r.description = c.description;
    r.pass = false;
    r.achieved = 0.0;
    r.tolerance = 0.0;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    // stated runtime budgets
    if (r.id == "closed-vs-direct" && r.seconds >= 10.0) {
      r.pass = false;
      r.detail += " [runtime budget 10 s exceeded]";
    }
    if (r.id == "thm31" && r.seconds >= 60.0) {
      r.pass = false;
      r.detail += " [runtime budget 60 s exceeded]";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_criterion_line(const CriterionResult& r) {
  std::string s = r.pass ? "PASS" : "FAIL";
  s += "  " + r.id + ": " + r.description;
  s += "  [achieved " + format_double(r.achieved) + ", tolerance " +
       format_double(r.tolerance) + ", " + format_double(r.seconds) + " s]";
  if (!r.detail.empty()) s += "  -- " + r.detail;
  return s;
}

}  // namespace casimir
