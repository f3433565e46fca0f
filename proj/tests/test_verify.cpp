#include <doctest.h>

#include <cmath>

#include "vdw/constants.hpp"
#include "vdw/verify.hpp"

using namespace vdw;

TEST_CASE("polylog3 against closed forms") {
  CHECK(polylog3(0.0) == 0.0);
  // Li3(1/2) = 7 zeta(3)/8 - pi^2 ln2 / 12 + ln^3 2 / 6
  const double zeta3 = 1.2020569031595942854;
  const double ln2 = std::log(2.0);
  const double li3_half =
      7.0 * zeta3 / 8.0 - constants::pi * constants::pi * ln2 / 12.0 + ln2 * ln2 * ln2 / 6.0;
  CHECK(polylog3(0.5) == doctest::Approx(li3_half).epsilon(1e-14));
  // small x: leading terms x + x^2/8 + x^3/27
  const double x = 1e-4;
  CHECK(polylog3(x) == doctest::Approx(x + x * x / 8.0 + x * x * x / 27.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)polylog3(1.0), std::invalid_argument);
}

TEST_CASE("hamaker constant basics") {
  CHECK(hamaker_constant(MaterialModel::constant(1.0), 300.0) == 0.0);
  const auto d = MaterialModel::lorentz(0.0, {{2.0, 1e16, 0.0}});
  const double a = hamaker_constant(d, 300.0);
  CHECK(a > 0.0);
  CHECK(a < 1e-18);  // typical dielectric Hamaker constants are ~1e-20 J
  // stronger response gives a larger constant
  const auto d2 = MaterialModel::lorentz(0.0, {{5.0, 1e16, 0.0}});
  CHECK(hamaker_constant(d2, 300.0) > a);
}

TEST_CASE("report bookkeeping") {
  VerificationReport report;
  report.suite = "demo";
  report.add("exact match", 1.0, 1.0, 0.0);
  report.add("mismatch", 1.0, 2.0, 1e-3);
  report.finalize();
  CHECK(report.cases.size() == 2);
  CHECK(report.cases[0].pass);
  CHECK(!report.cases[1].pass);
  CHECK(report.cases[1].relative_error == doctest::Approx(0.5));
  CHECK(!report.overall);
  report.cases.pop_back();
  report.finalize();
  CHECK(report.overall);
}

TEST_CASE("suites are deterministic for a fixed seed") {
  const auto a = check_reduction_chain(42, 2);
  const auto b = check_reduction_chain(42, 2);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].actual == b.cases[i].actual);
    CHECK(a.cases[i].expected == b.cases[i].expected);
  }
  CHECK(a.seed == 42);
}

TEST_CASE("reduction suite passes on a small sample") {
  const auto report = check_reduction_chain(7, 3);
  for (const auto& c : report.cases) {
    INFO(c.description, " rel_err=", c.relative_error);
    CHECK(c.pass);
  }
  CHECK(report.overall);
}

TEST_CASE("dlp suite passes on a small sample") {
  const auto report = check_dlp_equivalence(7, 3);
  for (const auto& c : report.cases) {
    INFO(c.description, " rel_err=", c.relative_error);
    CHECK(c.pass);
  }
}

TEST_CASE("finite difference suite passes on a small sample") {
  const auto report = check_finite_difference(7, 2);
  for (const auto& c : report.cases) {
    INFO(c.description, " rel_err=", c.relative_error);
    CHECK(c.pass);
  }
}

TEST_CASE("report formatting") {
  VerificationReport report;
  report.suite = "demo";
  report.seed = 9;
  report.add("case", 1.0, 1.0, 1e-9);
  report.finalize();
  const std::string text = format_report(report);
  CHECK(text.find("demo") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("suite passed") != std::string::npos);
}
