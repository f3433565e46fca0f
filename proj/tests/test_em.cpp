#include <doctest.h>

#include <cmath>
#include <random>

#include "vdw/constants.hpp"
#include "vdw/em.hpp"

using namespace vdw;

namespace {

MaterialModel random_dielectric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < 0.4) return MaterialModel::constant(1.0 + 10.0 * unit(rng),
                                                      unit(rng) < 0.3 ? 1.0 + 2.0 * unit(rng) : 1.0);
  return MaterialModel::lorentz(
      unit(rng), {{0.5 + 9.5 * unit(rng), std::pow(10.0, 15.0 + 2.0 * unit(rng)),
                   unit(rng) < 0.5 ? 0.0 : 1e15 * unit(rng)}});
}

}  // namespace

TEST_CASE("kz basics") {
  CHECK(kz(0.0, 7e8, 4.0, 1.0) == 7e8);  // static limit
  // eps = mu = 1, xi/c = 3, krho = 4 -> 5
  CHECK(kz(3.0 * constants::c_light, 4.0, 1.0, 1.0) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("fresnel basics") {
  const auto a = MaterialModel::constant(3.0);
  const auto vac = MaterialModel::vacuum();
  CHECK(fresnel(Polarization::h, 1e15, 1e7, a, a) == 0.0);
  CHECK(fresnel(Polarization::e, 1e15, 1e7, a, a) == 0.0);
  // at xi = 0, kz cancels: (3-1)/(3+1)
  CHECK(fresnel(Polarization::h, 0.0, 1e7, vac, a) == doctest::Approx(0.5).epsilon(1e-15));
  // nonmagnetic media: e-polarization vanishes at xi = 0
  CHECK(fresnel(Polarization::e, 0.0, 1e7, vac, a) == 0.0);
}

TEST_CASE("fresnel antisymmetry and bound") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_dielectric(rng);
    const auto b = random_dielectric(rng);
    const double xi = std::pow(10.0, 13.0 + 4.0 * unit(rng));
    const double krho = std::pow(10.0, 4.0 + 6.0 * unit(rng));
    for (Polarization pol : {Polarization::e, Polarization::h}) {
      const double r = fresnel(pol, xi, krho, a, b);
      CHECK(fresnel(pol, xi, krho, b, a) == -r);
      CHECK(std::abs(r) <= 1.0);
    }
  }
}

TEST_CASE("drude limiting rule at xi = 0") {
  const auto metal = MaterialModel::drude(1e16, 1e14);
  const auto d = MaterialModel::constant(3.0);
  CHECK(fresnel(Polarization::h, 0.0, 1e7, d, metal) == 1.0);
  CHECK(fresnel(Polarization::h, 0.0, 1e7, metal, d) == -1.0);
  CHECK(fresnel(Polarization::e, 0.0, 1e7, d, metal) == 0.0);
  // both drude: finite ratio of divergence scales
  const auto metal2 = MaterialModel::drude(2e16, 1e14);
  const double r = fresnel(Polarization::h, 0.0, 1e7, metal, metal2);
  const double sa = 1e32 / 1e14, sb = 4e32 / 1e14;
  CHECK(r == doctest::Approx((sb - sa) / (sb + sa)).epsilon(1e-14));
  CHECK(fresnel(Polarization::h, 0.0, 1e7, metal, metal) == 0.0);
}

TEST_CASE("composition") {
  CHECK(composition(0.0, 0.7) == 0.7);
  CHECK(composition(0.4, -0.4) == 0.0);
  CHECK_THROWS_AS(composition(1.0, -1.0), DegenerateCompositionError);
}

TEST_CASE("composition identity over randomized materials") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto m = random_dielectric(rng);
    const auto v = random_dielectric(rng);
    const auto l = random_dielectric(rng);
    const double xi = std::pow(10.0, 13.0 + 4.0 * unit(rng));
    const double krho = std::pow(10.0, 4.0 + 6.0 * unit(rng));
    for (Polarization pol : {Polarization::e, Polarization::h}) {
      const double lhs = composition(fresnel(pol, xi, krho, m, v), fresnel(pol, xi, krho, v, l));
      const double rhs = fresnel(pol, xi, krho, m, l);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("generalized reflection base and limits") {
  std::mt19937_64 rng(31);
  const auto vac = MaterialModel::vacuum();
  const auto m = random_dielectric(rng);
  const auto r = random_dielectric(rng);
  const double xi = 2e15;
  const double krho = 3e6;
  for (Polarization pol : {Polarization::e, Polarization::h}) {
    // empty remainder
    ReflectionSide bare{vac, {}, r};
    CHECK(generalized_reflection(pol, xi, krho, bare) == fresnel(pol, xi, krho, vac, r));
    // a 1 m film at optical frequencies decouples the backing
    ReflectionSide thick{vac, {{m, 1.0}}, r};
    CHECK(generalized_reflection(pol, xi, krho, thick) ==
          doctest::Approx(fresnel(pol, xi, krho, vac, m)).epsilon(1e-12));
    // vanishing thickness reduces to the composed coefficient = fresnel(v, R)
    ReflectionSide thin{vac, {{m, 1e-30}}, r};
    CHECK(generalized_reflection(pol, xi, krho, thin) ==
          doctest::Approx(fresnel(pol, xi, krho, vac, r)).epsilon(1e-10));
  }
}

TEST_CASE("generalized reflection magnitude stays below 1") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    ReflectionSide side;
    side.adjacent = MaterialModel::vacuum();
    const int n_layers = 1 + static_cast<int>(3 * unit(rng));
    for (int j = 0; j < n_layers; ++j)
      side.remainder.push_back({random_dielectric(rng), std::pow(10.0, -9.0 + 2.0 * unit(rng))});
    side.terminal = random_dielectric(rng);
    const double xi = std::pow(10.0, 13.0 + 4.0 * unit(rng));
    const double krho = std::pow(10.0, 4.0 + 6.0 * unit(rng));
    for (Polarization pol : {Polarization::e, Polarization::h})
      CHECK(std::abs(generalized_reflection(pol, xi, krho, side)) < 1.0);
  }
}

TEST_CASE("thickness derivative matches finite differences") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    ReflectionSide side;
    side.adjacent = MaterialModel::vacuum();
    const int n_layers = 1 + static_cast<int>(3 * unit(rng));
    for (int j = 0; j < n_layers; ++j)
      side.remainder.push_back({random_dielectric(rng), std::pow(10.0, -9.0 + 1.5 * unit(rng))});
    side.terminal = random_dielectric(rng);
    const std::size_t target = static_cast<std::size_t>(n_layers * unit(rng));
    const double xi = std::pow(10.0, 13.5 + 3.0 * unit(rng));
    const double krho = std::pow(10.0, 5.0 + 4.0 * unit(rng));
    for (Polarization pol : {Polarization::e, Polarization::h}) {
      const auto rd = generalized_reflection_derivative(pol, xi, krho, side, target);
      CHECK(rd.value == generalized_reflection(pol, xi, krho, side));
      const double h = 1e-4 * side.remainder[target].thickness;
      ReflectionSide hi = side, lo = side;
      hi.remainder[target].thickness += h;
      lo.remainder[target].thickness -= h;
      const double fd = (generalized_reflection(pol, xi, krho, hi) -
                         generalized_reflection(pol, xi, krho, lo)) /
                        (2.0 * h);
      const double scale = std::max(std::abs(rd.derivative), std::abs(fd));
      // central differences carry roundoff noise ~ ulp(r)/h
      const double noise = 1e-16 * std::max(1.0, std::abs(rd.value)) / h;
      CHECK(std::abs(rd.derivative - fd) <= 1e-6 * scale + 10.0 * noise);
    }
  }
}

TEST_CASE("four-layer product derivative matches the printed N/D form") {
  // L | v | m(z_m) | R: d(R_vL * R_vR~)/dz_m = -2 k_zm e^{-2 k_zm z_m}
  //   * R_vL R_mR (1 - R_vm^2) / (1 + R_vm R_mR e^{-2 k_zm z_m})^2
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto vac = MaterialModel::vacuum();
  for (int i = 0; i < 30; ++i) {
    const auto L = random_dielectric(rng);
    const auto m = random_dielectric(rng);
    const auto R = random_dielectric(rng);
    const double z_m = std::pow(10.0, -9.0 + 1.5 * unit(rng));
    const double xi = std::pow(10.0, 14.0 + 3.0 * unit(rng));
    const double krho = std::pow(10.0, 5.0 + 4.0 * unit(rng));
    ReflectionSide right{vac, {{m, z_m}}, R};
    for (Polarization pol : {Polarization::e, Polarization::h}) {
      const double r_vl = fresnel(pol, xi, krho, vac, L);
      const double r_vm = fresnel(pol, xi, krho, vac, m);
      const double r_mr = fresnel(pol, xi, krho, m, R);
      const double kzm = kz(xi, krho, m.permittivity(xi), m.permeability(xi));
      const double e = std::exp(-2.0 * kzm * z_m);
      const double printed = -2.0 * kzm * e * r_vl * r_mr * (1.0 - r_vm * r_vm) /
                             ((1.0 + r_vm * r_mr * e) * (1.0 + r_vm * r_mr * e));
      const auto rd = generalized_reflection_derivative(pol, xi, krho, right, 0);
      const double product_derivative = r_vl * rd.derivative;
      if (std::abs(printed) > 1e-200)
        CHECK(product_derivative == doctest::Approx(printed).epsilon(1e-12));
      else
        CHECK(std::abs(product_derivative) <= 1e-200);
    }
  }
}

TEST_CASE("stack side views") {
  const auto a = MaterialModel::constant(2.0);
  const auto b = MaterialModel::constant(3.0);
  const auto c = MaterialModel::constant(4.0);
  Stack stack{a, {{b, 1e-9}, {MaterialModel::vacuum(), 2e-9}, {c, 3e-9}}, a};
  const auto left = left_side_of(stack, 1);
  CHECK(left.adjacent == MaterialModel::vacuum());
  REQUIRE(left.remainder.size() == 1);
  CHECK(left.remainder[0].material == b);
  CHECK(left.terminal == a);
  const auto right = right_side_of(stack, 1);
  REQUIRE(right.remainder.size() == 1);
  CHECK(right.remainder[0].material == c);
  CHECK(right.terminal == a);
  CHECK_THROWS_AS((void)left_side_of(stack, 3), std::out_of_range);
}
