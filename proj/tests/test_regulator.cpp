#include "casimir/regulator.hpp"

#include <doctest.h>

#include <cmath>
#include <future>

#include "casimir/quadrature.hpp"

using namespace casimir;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("built-in evaluation") {
  auto ex = Regulator::exponential();
  auto ga = Regulator::gaussian();
  auto ra = Regulator::rational();
  CHECK(ex.eval(0.0) == 1.0);
  CHECK(ga.eval(0.0) == 1.0);
  CHECK(ra.eval(0.0) == 1.0);
  CHECK(ex.eval(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(ra.eval(1.0) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(ga.eval(2.0) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
  CHECK_THROWS_AS(ex.eval(-0.1), std::domain_error);
}

TEST_CASE("built-in derivatives") {
  auto ex = Regulator::exponential();
  auto ra = Regulator::rational();
  auto ga = Regulator::gaussian();
  CHECK(ex.deriv(1, 0.0) == -1.0);
  CHECK(ex.deriv(3, 0.0) == -1.0);
  CHECK(ex.deriv(2, 0.0) == 1.0);
  CHECK(ra.deriv(1, 0.0) == -4.0);
  CHECK(ra.deriv(2, 0.0) == 20.0);
  CHECK(ga.deriv(1, 0.0) == 0.0);
  CHECK(ga.deriv(2, 0.0) == -2.0);
  CHECK_THROWS_AS(ex.deriv(0, 1.0), std::domain_error);
}

TEST_CASE("derivatives agree with central differences") {
  for (auto reg : {Regulator::exponential(), Regulator::gaussian(),
                   Regulator::rational()}) {
    for (int k = 1; k <= 4; ++k) {
      for (double x : {0.2, 0.7, 1.3, 2.9}) {
        auto lower = [&](double xx) { return k == 1 ? reg.eval(xx) : reg.deriv(k - 1, xx); };
        double h = 1e-5 * (1.0 + x);
        double fd1 = (lower(x + h) - lower(x - h)) / (2 * h);
        double fd2 = (lower(x + h / 2) - lower(x - h / 2)) / h;
        double fd = (4.0 * fd2 - fd1) / 3.0;
        CHECK(reg.deriv(k, x) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("second moments") {
  CHECK(Regulator::exponential().moment2() == 2.0);
  CHECK(Regulator::rational().moment2() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(Regulator::gaussian().moment2() ==
        doctest::Approx(std::sqrt(kPi) / 4.0).epsilon(1e-15));
  // user-supplied: quadrature path
  Regulator::UserSpec spec;
  spec.eval = [](double x) { return std::exp(-x); };
  spec.max_derivative_order = 8;
  auto user = Regulator::user(spec);
  CHECK(user.moment2() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("moment scaling under the cutoff") {
  // int_0^inf k^2 C(L k) dk = M2 / L^3
  for (auto reg : {Regulator::exponential(), Regulator::gaussian(),
                   Regulator::rational()}) {
    double m2 = reg.moment2();
    for (double L : {0.5, 1.0, 2.0}) {
      auto f = [&](double k) { return k * k * reg.eval(L * k); };
      double v = integrate(f, 0.0, kInf, 1e-10).value;
      CHECK(v == doctest::Approx(m2 / (L * L * L)).epsilon(1e-8));
    }
  }
}

TEST_CASE("admissibility audit") {
  CHECK(validate(Regulator::exponential()).all_pass());
  CHECK(validate(Regulator::gaussian()).all_pass());
  CHECK(validate(Regulator::rational()).all_pass());

  // a constant does not decay
  Regulator::UserSpec constant;
  constant.eval = [](double) { return 1.0; };
  constant.max_derivative_order = 8;
  auto rep = validate(Regulator::user(constant));
  CHECK(!rep.all_pass());
  bool decay_failed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && c.condition.find("infinity") != std::string::npos)
      decay_failed = true;
  CHECK(decay_failed);

  // a sharp step is not smooth
  Regulator::UserSpec step;
  step.eval = [](double x) { return x < 1.0 ? 1.0 : 0.0; };
  step.max_derivative_order = 8;
  auto rep2 = validate(Regulator::user(step));
  CHECK(!rep2.all_pass());
  bool smooth_failed = false;
  for (const auto& c : rep2.checks)
    if (!c.pass && c.condition.find("smooth") != std::string::npos)
      smooth_failed = true;
  CHECK(smooth_failed);
}

TEST_CASE("capability limits") {
  Regulator::UserSpec spec;
  spec.eval = [](double x) { return std::exp(-x); };
  spec.max_derivative_order = 6;
  CHECK_THROWS_AS(Regulator::user(spec), CapabilityError);
  spec.max_derivative_order = 7;
  auto user = Regulator::user(spec);
  CHECK_THROWS_AS(user.deriv(8, 1.0), CapabilityError);
  CHECK(user.deriv(1, 1.0) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-8));
  CHECK(user.deriv(3, 0.5) == doctest::Approx(-std::exp(-0.5)).epsilon(1e-5));
}

TEST_CASE("name factory") {
  CHECK(make_regulator("exp").kind() == RegulatorKind::exponential);
  CHECK(make_regulator("gauss").kind() == RegulatorKind::gaussian);
  CHECK(make_regulator("rational").kind() == RegulatorKind::rational);
  CHECK_THROWS_AS(make_regulator("nope"), std::invalid_argument);
}

TEST_CASE("concurrent evaluation is consistent") {
  auto reg = Regulator::gaussian();
  auto job = [&reg] {
    double s = 0.0;
    for (int i = 0; i < 1000; ++i) s += reg.eval(1e-3 * i) + reg.deriv(3, 1e-3 * i);
    return s;
  };
  auto f1 = std::async(std::launch::async, job);
  auto f2 = std::async(std::launch::async, job);
  double ref = job();
  CHECK(f1.get() == ref);
  CHECK(f2.get() == ref);
}
