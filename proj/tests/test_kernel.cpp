#include <doctest.h>

#include <cmath>

#include "vdw/constants.hpp"
#include "vdw/kernel.hpp"
#include "vdw/pressure.hpp"

using namespace vdw;

namespace {

const MaterialModel kVacuum = MaterialModel::vacuum();
const MaterialModel kGlassLike = MaterialModel::lorentz(0.0, {{2.0, 2e16, 0.0}});

ProbeGeometry half_space_gap(const MaterialModel& left, const MaterialModel& right, double z_v) {
  ProbeGeometry geom;
  geom.left_side = {kVacuum, {}, left};
  geom.right_side = {kVacuum, {}, right};
  geom.z_v = z_v;
  return geom;
}

MatsubaraSpec mats300(double rel = 1e-12) {
  MatsubaraSpec m;
  m.temperature = 300.0;
  m.rel_tol = rel;
  return m;
}

QuadratureSpec quad12() {
  QuadratureSpec q;
  q.rel_tol = 1e-12;
  return q;
}

}  // namespace

TEST_CASE("matsubara frequencies") {
  CHECK(matsubara_frequency(0, 300.0) == 0.0);
  CHECK(matsubara_frequency(0, 5.0) == 0.0);
  // 2 pi k_B T / hbar at 300 K, recomputed by hand from the CODATA values
  CHECK(matsubara_frequency(1, 300.0) == doctest::Approx(2.4677902551530606e14).epsilon(1e-12));
  CHECK(matsubara_frequency(10, 300.0) == 2.0 * matsubara_frequency(5, 300.0));
  CHECK_THROWS_AS((void)matsubara_frequency(-1, 300.0), std::invalid_argument);
  CHECK_THROWS_AS((void)matsubara_frequency(1, 0.0), std::invalid_argument);
}

TEST_CASE("kernel vanishes for vacuum and at large gaps") {
  const auto quad = quad12();
  CHECK(kernel_Kn(half_space_gap(kVacuum, kVacuum, 1e-8), 1, 300.0, quad) == 0.0);
  CHECK(kernel_Kn(half_space_gap(kGlassLike, kGlassLike, 1.0), 3, 300.0, quad) ==
        doctest::Approx(0.0).epsilon(1e-30));
  CHECK_THROWS_AS((void)kernel_Kn(half_space_gap(kVacuum, kVacuum, 0.0), 1, 300.0, quad),
                  std::invalid_argument);
}

TEST_CASE("kernel left/right exchange symmetry") {
  const auto quad = quad12();
  const auto other = MaterialModel::constant(5.0);
  for (int n : {0, 1, 5}) {
    const double a = kernel_Kn(half_space_gap(kGlassLike, other, 1e-8), n, 300.0, quad);
    const double b = kernel_Kn(half_space_gap(other, kGlassLike, 1e-8), n, 300.0, quad);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
    CHECK(a > 0.0);
  }
}

TEST_CASE("stress tensor sums the kernel with half-weighted n = 0") {
  const auto quad = quad12();
  const auto mats = mats300();
  const auto geom = half_space_gap(kGlassLike, kGlassLike, 1e-8);
  const auto series = stress_tensor_avg(geom, mats, quad, /*record_terms=*/true);
  CHECK(series.value > 0.0);
  const double k0 = kernel_Kn(geom, 0, 300.0, quad);
  CHECK(series.terms[0].contribution ==
        doctest::Approx(0.5 * constants::k_boltzmann * 300.0 * k0).epsilon(1e-12));
  double resum = 0.0;
  for (const auto& t : series.terms) resum += t.contribution;
  CHECK(resum == doctest::Approx(series.value).epsilon(1e-12));
  // |term| eventually decreasing
  bool decreasing = true;
  for (std::size_t i = 3; i + 1 < series.terms.size(); ++i)
    decreasing = decreasing &&
                 std::abs(series.terms[i + 1].contribution) <= std::abs(series.terms[i].contribution);
  CHECK(decreasing);
}

TEST_CASE("stress tensor reduces to the n = 0 term at high temperature") {
  // T = 1e4 K, z_v = 1 um: xi_1 z_v / c ~ 27, so only n = 0 survives
  MatsubaraSpec mats;
  mats.temperature = 1e4;
  mats.rel_tol = 1e-12;
  const auto quad = quad12();
  const auto geom = half_space_gap(kGlassLike, kGlassLike, 1e-6);
  const double full = stress_tensor_avg(geom, mats, quad).value;
  const double k0_half = 0.5 * constants::k_boltzmann * 1e4 * kernel_Kn(geom, 0, 1e4, quad);
  CHECK(full == doctest::Approx(k0_half).epsilon(1e-9));
}

TEST_CASE("stress tensor vanishes for vacuum") {
  CHECK(stress_tensor_avg(half_space_gap(kVacuum, kVacuum, 1e-8), mats300(), quad12()).value ==
        0.0);
}

TEST_CASE("work to close the gap") {
  const auto quad = quad12();
  const auto mats = mats300();
  auto geom = half_space_gap(kGlassLike, kGlassLike, 0.0);
  CHECK_THROWS_AS((void)work_to_close_gap(geom, 0.0, mats, quad), std::invalid_argument);
  // the thermal term decays only as 1/delta^2, so compare magnitudes
  CHECK(std::abs(work_to_close_gap(geom, 1e-6, mats, quad)) <
        1e-5 * std::abs(work_to_close_gap(geom, 1e-9, mats, quad)));
  CHECK(work_to_close_gap(half_space_gap(kVacuum, kVacuum, 0.0), 1e-9, mats, quad) == 0.0);

  // d/d(delta) of the work equals the stress tensor at z_v = delta
  const double delta = 2e-8;
  const double h = 1e-4 * delta;
  const double fd =
      (work_to_close_gap(geom, delta + h, mats, quad) - work_to_close_gap(geom, delta - h, mats, quad)) /
      (2.0 * h);
  auto at = geom;
  at.z_v = delta;
  const double t = stress_tensor_avg(at, mats, quad).value;
  CHECK(fd == doctest::Approx(t).epsilon(1e-6));
}

TEST_CASE("gap closure derivative equals minus the film pressure for V|m|V") {
  const auto quad = quad12();
  const auto mats = mats300();
  const double z_m = 1.2e-8;
  ProbeGeometry geom;
  geom.left_side = {kVacuum, {}, kGlassLike};
  geom.right_side = {kVacuum, {{kGlassLike, z_m}}, kVacuum};
  const double closure = gap_closure_derivative(geom, ProbeSide::right, 0, mats, quad).value;
  const double p_vv = pressure_vv(kGlassLike, z_m, mats, quad).value;
  CHECK(closure == doctest::Approx(-p_vv).epsilon(1e-10));
}

TEST_CASE("gap closure derivative vanishes for identical media") {
  const auto quad = quad12();
  const auto mats = mats300();
  ProbeGeometry geom;
  geom.left_side = {kGlassLike, {}, kGlassLike};
  geom.right_side = {kGlassLike, {{kGlassLike, 1e-8}}, kGlassLike};
  CHECK(gap_closure_derivative(geom, ProbeSide::right, 0, mats, quad).value == 0.0);
}

TEST_CASE("regularized gap closure matches the delta = 0 form") {
  // the residual scales like delta / z_r, so use a macroscopic layer to show
  // that delta = 1e-12 m is indistinguishable from zero
  const auto quad = quad12();
  const auto mats = mats300();
  ProbeGeometry geom;
  geom.left_side = {kVacuum, {}, MaterialModel::constant(4.0)};
  geom.right_side = {kVacuum, {{kGlassLike, 1e-2}}, MaterialModel::constant(2.5)};
  const double exact = gap_closure_derivative(geom, ProbeSide::right, 0, mats, quad, 0.0).value;
  const double reg = gap_closure_derivative(geom, ProbeSide::right, 0, mats, quad, 1e-12).value;
  CHECK(exact != 0.0);
  CHECK(reg == doctest::Approx(exact).epsilon(1e-9));
}
