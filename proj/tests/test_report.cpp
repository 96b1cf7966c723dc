#include "casimir/report.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace casimir;

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.1096622711232151) == "-0.1096622711232151");
  CHECK(format_double(1e300) == "1e+300");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
  // round-trip exactness
  for (double v : {1.0 / 3.0, 7.25e-31, -123456.789, 2.2250738585072014e-308}) {
    double back = std::stod(format_double(v));
    CHECK(back == v);
  }
}

TEST_CASE("csv assembly") {
  CHECK(csv_line({"z", "value"}) == "z,value\n");
  CHECK(csv_line({format_double(0.5), format_double(-1.25)}) == "0.5,-1.25\n");
  CHECK(csv_line({}) == "\n");
}

TEST_CASE("formatting is deterministic") {
  std::string a, b;
  for (int pass = 0; pass < 2; ++pass) {
    std::string s;
    for (int i = 1; i <= 50; ++i) s += format_double(std::sqrt(i) * 1e-3) + ",";
    (pass == 0 ? a : b) = s;
  }
  CHECK(a == b);
}
