#include "vdw/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vdw/constants.hpp"

namespace vdw {

double matsubara_frequency(int n, double temperature) {
  if (n < 0) throw std::invalid_argument("matsubara index must be >= 0");
  if (temperature <= 0.0) throw std::invalid_argument("temperature must be > 0");
  if (n == 0) return 0.0;
  return 2.0 * constants::pi * n * constants::k_boltzmann * temperature / constants::hbar;
}

SeriesResult matsubara_sum(const std::function<QuadResult(int, double)>& term_fn,
                           const MatsubaraSpec& mats, bool record_terms) {
  if (mats.temperature <= 0.0) throw std::invalid_argument("temperature must be > 0");
  SeriesResult out;
  double sum = 0.0;
  double comp = 0.0;  // Kahan carry
  double prev_term = 0.0;
  double last_term = 0.0;
  int small_streak = 0;
  for (int n = 0; n < mats.max_terms; ++n) {
    const double xi = matsubara_frequency(n, mats.temperature);
    QuadResult t = term_fn(n, xi);
    const double weighted = (n == 0) ? 0.5 * t.value : t.value;
    const double y = weighted - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    out.quad_error += (n == 0) ? 0.5 * t.error : t.error;
    if (record_terms) out.terms.push_back({n, xi, weighted});
    out.n_used = n + 1;
    prev_term = last_term;
    last_term = weighted;
    if (n + 1 >= mats.min_terms) {
      if (std::abs(weighted) <= mats.rel_tol * std::abs(sum)) {
        if (++small_streak >= 3) break;
      } else {
        small_streak = 0;
      }
    }
  }
  out.value = sum;
  if (small_streak < 3)
    throw SeriesTruncationError("series truncation failure: max_terms reached", sum, out.n_used);
  // geometric tail extrapolation from the last two terms
  const double a = std::abs(last_term);
  const double b = std::abs(prev_term);
  if (a > 0.0 && b > 0.0 && a < b) {
    const double ratio = a / b;
    out.tail_estimate = a * ratio / (1.0 - ratio);
  } else {
    out.tail_estimate = a;
  }
  return out;
}

namespace {

using constants::c_light;
using constants::k_boltzmann;
using constants::pi;

// Transverse wavevector recovered from the substitution variable u = 2*kz*z,
// where kz^2 = krho^2 + eps*mu*xi^2/c^2 in the medium carrying the phase.
double krho_from_u(double u, double z, double xi, double eps_mu) {
  const double kzv = u / (2.0 * z);
  const double w2 = eps_mu * (xi / c_light) * (xi / c_light);
  const double k2 = kzv * kzv - w2;
  return k2 > 0.0 ? std::sqrt(k2) : 0.0;
}

double reflection_product(Polarization pol, double xi, double krho, const ProbeGeometry& geom) {
  return generalized_reflection(pol, xi, krho, geom.left_side) *
         generalized_reflection(pol, xi, krho, geom.right_side);
}

}  // namespace

double kernel_Kn(const ProbeGeometry& geom, int n, double temperature,
                 const QuadratureSpec& quad) {
  if (geom.z_v <= 0.0) throw std::invalid_argument("kernel requires z_v > 0");
  const double xi = matsubara_frequency(n, temperature);
  const double z = geom.z_v;
  const double u0 = 2.0 * z * xi / c_light;  // vacuum probe: eps = mu = 1
  auto integrand = [&](double u) {
    const double krho = krho_from_u(u, z, xi, 1.0);
    const double eu = std::exp(-u);
    double s = 0.0;
    for (Polarization pol : {Polarization::e, Polarization::h}) {
      const double p = reflection_product(pol, xi, krho, geom);
      s += p * eu / (1.0 - p * eu);
    }
    return u * u * s;
  };
  const QuadResult q = integrate(integrand, u0, u0 + quad.tail_cutoff, quad);
  return q.value / (8.0 * pi * z * z * z);
}

SeriesResult stress_tensor_avg(const ProbeGeometry& geom, const MatsubaraSpec& mats,
                               const QuadratureSpec& quad, bool record_terms) {
  if (geom.z_v <= 0.0) throw std::invalid_argument("stress tensor requires z_v > 0");
  const double z = geom.z_v;
  const double prefactor = k_boltzmann * mats.temperature / (8.0 * pi * z * z * z);
  auto term = [&](int /*n*/, double xi) -> QuadResult {
    const double u0 = 2.0 * z * xi / c_light;
    auto integrand = [&](double u) {
      const double krho = krho_from_u(u, z, xi, 1.0);
      const double eu = std::exp(-u);
      double s = 0.0;
      for (Polarization pol : {Polarization::e, Polarization::h}) {
        const double p = reflection_product(pol, xi, krho, geom);
        s += p * eu / (1.0 - p * eu);
      }
      return u * u * s;
    };
    QuadResult q = integrate(integrand, u0, u0 + quad.tail_cutoff, quad);
    return {prefactor * q.value, prefactor * q.error};
  };
  return matsubara_sum(term, mats, record_terms);
}

double work_to_close_gap(const ProbeGeometry& geom, double delta, const MatsubaraSpec& mats,
                         const QuadratureSpec& quad) {
  if (delta <= 0.0) throw std::invalid_argument("work integral requires delta > 0");
  const double prefactor = k_boltzmann * mats.temperature / (8.0 * pi * delta * delta);
  auto term = [&](int /*n*/, double xi) -> QuadResult {
    const double u0 = 2.0 * delta * xi / c_light;
    auto integrand = [&](double u) {
      const double krho = krho_from_u(u, delta, xi, 1.0);
      const double eu = std::exp(-u);
      double s = 0.0;
      for (Polarization pol : {Polarization::e, Polarization::h}) {
        const double p = reflection_product(pol, xi, krho, geom);
        s += std::log1p(-p * eu);
      }
      return u * s;
    };
    QuadResult q = integrate(integrand, u0, u0 + quad.tail_cutoff, quad);
    return {prefactor * q.value, prefactor * q.error};
  };
  return matsubara_sum(term, mats).value;
}

SeriesResult gap_closure_derivative(const ProbeGeometry& geom, ProbeSide side,
                                    std::size_t layer_index, const MatsubaraSpec& mats,
                                    const QuadratureSpec& quad, double delta) {
  const ReflectionSide& target = (side == ProbeSide::left) ? geom.left_side : geom.right_side;
  const ReflectionSide& other = (side == ProbeSide::left) ? geom.right_side : geom.left_side;
  if (layer_index >= target.remainder.size())
    throw std::out_of_range("layer index outside the chosen side");
  const Layer& layer = target.remainder[layer_index];
  const double z_r = layer.thickness;
  const double prefactor = -k_boltzmann * mats.temperature / (2.0 * pi);
  auto term = [&](int /*n*/, double xi) -> QuadResult {
    double eps_mu_r = 1.0;
    if (xi > 0.0)
      eps_mu_r = layer.material.permittivity(xi) * layer.material.permeability(xi);
    const double u0 = 2.0 * z_r * std::sqrt(eps_mu_r) * xi / c_light;
    auto integrand = [&](double u) {
      const double krho = krho_from_u(u, z_r, xi, eps_mu_r);
      double s = 0.0;
      for (Polarization pol : {Polarization::e, Polarization::h}) {
        const auto rd = generalized_reflection_derivative(pol, xi, krho, target, layer_index);
        const double r_other = generalized_reflection(pol, xi, krho, other);
        const double p = rd.value * r_other;
        const double dp = rd.derivative * r_other;
        double damp = 1.0;
        if (delta > 0.0) {
          const double kzv = kz(xi, krho, 1.0, 1.0);
          damp = std::exp(-2.0 * kzv * delta);
        }
        s += dp * damp / (1.0 - p * damp);
      }
      // krho dkrho = u du / (4 z_r^2)
      return u / (4.0 * z_r * z_r) * s;
    };
    QuadResult q = integrate(integrand, u0, u0 + quad.tail_cutoff, quad);
    return {prefactor * q.value, std::abs(prefactor) * q.error};
  };
  return matsubara_sum(term, mats);
}

}  // namespace vdw
