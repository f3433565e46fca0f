#include "vdw/pressure.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "vdw/constants.hpp"

namespace vdw {

namespace {

using constants::c_light;
using constants::k_boltzmann;
using constants::pi;

double krho_from_u(double u, double z, double xi, double eps_mu) {
  const double kzm = u / (2.0 * z);
  const double w2 = eps_mu * (xi / c_light) * (xi / c_light);
  const double k2 = kzm * kzm - w2;
  return k2 > 0.0 ? std::sqrt(k2) : 0.0;
}

PressureResult from_series(SeriesResult&& s, bool record_per_n) {
  PressureResult out;
  out.value = s.value;
  out.n_used = s.n_used;
  out.truncation_error = s.tail_estimate;
  out.quadrature_error = s.quad_error;
  if (record_per_n) out.per_n = std::move(s.terms);
  return out;
}

// Film-layer pressure integrand in the substituted variable u = 2*kzm*z_m:
// p = (k_B T / 8 pi z_m^3) sum' int u^2 sum_p P e^-u / (1 - P e^-u) du,
// where P(pol, xi, krho) is the product of the two reflection coefficients
// seen from inside the film.
template <typename ProductFn>
PressureResult film_pressure(const MaterialModel& film, double z_m, const MatsubaraSpec& mats,
                             const QuadratureSpec& quad, bool record_per_n,
                             const ProductFn& product) {
  if (z_m <= 0.0) throw std::invalid_argument("film thickness must be > 0");
  const double prefactor = k_boltzmann * mats.temperature / (8.0 * pi * z_m * z_m * z_m);
  auto term = [&](int /*n*/, double xi) -> QuadResult {
    double eps_mu = 1.0;
    if (xi > 0.0) eps_mu = film.permittivity(xi) * film.permeability(xi);
    const double u0 = 2.0 * z_m * std::sqrt(eps_mu) * xi / c_light;
    auto integrand = [&](double u) {
      const double krho = krho_from_u(u, z_m, xi, eps_mu);
      const double eu = std::exp(-u);
      double s = 0.0;
      for (Polarization pol : {Polarization::e, Polarization::h}) {
        const double p = product(pol, xi, krho);
        s += p * eu / (1.0 - p * eu);
      }
      return u * u * s;
    };
    QuadResult q = integrate(integrand, u0, u0 + quad.tail_cutoff, quad);
    return {prefactor * q.value, prefactor * q.error};
  };
  return from_series(matsubara_sum(term, mats, record_per_n), record_per_n);
}

}  // namespace

PressureResult pressure_vv(const MaterialModel& film, double z_m, const MatsubaraSpec& mats,
                           const QuadratureSpec& quad, bool record_per_n) {
  const MaterialModel vac = MaterialModel::vacuum();
  return film_pressure(film, z_m, mats, quad, record_per_n,
                       [&](Polarization pol, double xi, double krho) {
                         const double r = fresnel(pol, xi, krho, film, vac);
                         return r * r;
                       });
}

PressureResult pressure_lv(const MaterialModel& left, const MaterialModel& film, double z_m,
                           const MatsubaraSpec& mats, const QuadratureSpec& quad,
                           bool record_per_n) {
  const MaterialModel vac = MaterialModel::vacuum();
  return film_pressure(film, z_m, mats, quad, record_per_n,
                       [&](Polarization pol, double xi, double krho) {
                         return fresnel(pol, xi, krho, film, left) *
                                fresnel(pol, xi, krho, film, vac);
                       });
}

PressureResult pressure_lr(const MaterialModel& left, const MaterialModel& film,
                           const MaterialModel& right, double z_m, const MatsubaraSpec& mats,
                           const QuadratureSpec& quad, bool record_per_n) {
  return film_pressure(film, z_m, mats, quad, record_per_n,
                       [&](Polarization pol, double xi, double krho) {
                         return fresnel(pol, xi, krho, film, left) *
                                fresnel(pol, xi, krho, film, right);
                       });
}

PressureResult pressure_lr_dlp(const MaterialModel& left, const MaterialModel& film,
                               const MaterialModel& right, double z_m,
                               const MatsubaraSpec& mats, const QuadratureSpec& quad,
                               bool record_per_n) {
  if (z_m <= 0.0) throw std::invalid_argument("film thickness must be > 0");
  const double kT = k_boltzmann * mats.temperature;
  auto term = [&](int n, double xi) -> QuadResult {
    if (n == 0) {
      // the q substitution divides by xi; the n = 0 term keeps the k_rho path
      const double prefactor = kT / (8.0 * pi * z_m * z_m * z_m);
      auto integrand = [&](double u) {
        const double krho = u / (2.0 * z_m);
        const double eu = std::exp(-u);
        double s = 0.0;
        for (Polarization pol : {Polarization::e, Polarization::h}) {
          const double p = fresnel(pol, 0.0, krho, film, left) *
                           fresnel(pol, 0.0, krho, film, right);
          s += p * eu / (1.0 - p * eu);
        }
        return u * u * s;
      };
      QuadResult q = integrate(integrand, 0.0, quad.tail_cutoff, quad);
      return {prefactor * q.value, prefactor * q.error};
    }
    const double eps_mu = film.permittivity(xi) * film.permeability(xi);
    const double root = std::sqrt(eps_mu);
    const double a = 2.0 * root * xi * z_m / c_light;  // exponent per unit q
    const double prefactor = kT / (pi * c_light * c_light * c_light) * root * root * root *
                             xi * xi * xi;
    const double q_max = 1.0 + quad.tail_cutoff / a;
    auto integrand = [&](double q) {
      // k_rho = (xi/c) sqrt(eps mu) sqrt(q^2 - 1)
      const double t = q * q - 1.0;
      const double krho = (xi / c_light) * root * std::sqrt(t > 0.0 ? t : 0.0);
      double s = 0.0;
      for (Polarization pol : {Polarization::e, Polarization::h}) {
        const double p = fresnel(pol, xi, krho, film, left) *
                         fresnel(pol, xi, krho, film, right);
        if (p == 0.0) continue;
        s += 1.0 / (std::exp(a * q) / p - 1.0);
      }
      return q * q * s;
    };
    QuadResult qr = integrate(integrand, 1.0, q_max, quad);
    return {prefactor * qr.value, prefactor * qr.error};
  };
  return from_series(matsubara_sum(term, mats, record_per_n), record_per_n);
}

PressureResult pressure_in_layer(const Stack& stack, std::size_t r, const MatsubaraSpec& mats,
                                 const QuadratureSpec& quad, bool record_per_n) {
  if (r >= stack.layers.size()) throw std::out_of_range("layer index outside the stack");
  const ReflectionSide left = left_side_of(stack, r);
  const ReflectionSide right = right_side_of(stack, r);
  const Layer& probe = stack.layers[r];
  return film_pressure(probe.material, probe.thickness, mats, quad, record_per_n,
                       [&](Polarization pol, double xi, double krho) {
                         return generalized_reflection(pol, xi, krho, left) *
                                generalized_reflection(pol, xi, krho, right);
                       });
}

double free_energy_lr(const MaterialModel& left, const MaterialModel& film,
                      const MaterialModel& right, double z_m, const MatsubaraSpec& mats,
                      const QuadratureSpec& quad) {
  if (z_m <= 0.0) throw std::invalid_argument("film thickness must be > 0");
  const double prefactor = -k_boltzmann * mats.temperature / (8.0 * pi * z_m * z_m);
  auto term = [&](int /*n*/, double xi) -> QuadResult {
    double eps_mu = 1.0;
    if (xi > 0.0) eps_mu = film.permittivity(xi) * film.permeability(xi);
    const double u0 = 2.0 * z_m * std::sqrt(eps_mu) * xi / c_light;
    auto integrand = [&](double u) {
      const double krho = krho_from_u(u, z_m, xi, eps_mu);
      const double eu = std::exp(-u);
      double s = 0.0;
      for (Polarization pol : {Polarization::e, Polarization::h}) {
        const double p = fresnel(pol, xi, krho, film, left) *
                         fresnel(pol, xi, krho, film, right);
        s += std::log1p(-p * eu);
      }
      return u * s;
    };
    QuadResult q = integrate(integrand, u0, u0 + quad.tail_cutoff, quad);
    return {prefactor * q.value, std::abs(prefactor) * q.error};
  };
  return matsubara_sum(term, mats).value;
}

}  // namespace vdw
