#include "vdw/em.hpp"

#include <cmath>
#include <stdexcept>

#include "vdw/constants.hpp"

namespace vdw {

double kz(double xi, double krho, double eps, double mu) {
  if (xi == 0.0) return krho;  // static limit: k_z = k_rho in every medium
  const double w = xi / constants::c_light;
  return std::sqrt(krho * krho + eps * mu * w * w);
}

namespace {

// h-polarization reflection in the static limit, where kz = krho cancels and
// Drude media diverge. Compares the divergence orders/coefficients so that
// one Drude medium gives +/-1 and two Drude media give a finite ratio.
double static_fresnel_h(const MaterialModel& a, const MaterialModel& b) {
  const bool da = a.diverges_at_zero();
  const bool db = b.diverges_at_zero();
  if (!da && !db) {
    const double ea = a.permittivity(0.0);
    const double eb = b.permittivity(0.0);
    return (eb - ea) / (eb + ea);
  }
  if (da && !db) return -1.0;
  if (!da && db) return 1.0;
  const auto sa = a.static_divergence_scale();
  const auto sb = b.static_divergence_scale();
  if (sa.order != sb.order) return sb.order > sa.order ? 1.0 : -1.0;
  return (sb.coeff - sa.coeff) / (sb.coeff + sa.coeff);
}

}  // namespace

double fresnel(Polarization pol, double xi, double krho, const MaterialModel& a,
               const MaterialModel& b) {
  const double mu_a = a.permeability(xi);
  const double mu_b = b.permeability(xi);
  if (xi == 0.0) {
    if (pol == Polarization::e) return (mu_b - mu_a) / (mu_b + mu_a);
    return static_fresnel_h(a, b);
  }
  const double eps_a = a.permittivity(xi);
  const double eps_b = b.permittivity(xi);
  const double kza = kz(xi, krho, eps_a, mu_a);
  const double kzb = kz(xi, krho, eps_b, mu_b);
  if (pol == Polarization::e)
    return (kza * mu_b - kzb * mu_a) / (kza * mu_b + kzb * mu_a);
  return (kza * eps_b - kzb * eps_a) / (kza * eps_b + kzb * eps_a);
}

double composition(double r_ab, double r_bc) {
  const double denom = 1.0 + r_ab * r_bc;
  if (denom == 0.0) throw DegenerateCompositionError("degenerate composition: product is -1");
  return (r_ab + r_bc) / denom;
}

double generalized_reflection(Polarization pol, double xi, double krho,
                              const ReflectionSide& side) {
  const auto& layers = side.remainder;
  if (layers.empty()) return fresnel(pol, xi, krho, side.adjacent, side.terminal);
  // back-to-front Moebius recursion; every intermediate stays in (-1, 1)
  double r = fresnel(pol, xi, krho, layers.back().material, side.terminal);
  for (std::size_t j = layers.size(); j-- > 0;) {
    const MaterialModel& mat = layers[j].material;
    const double kzj = (xi == 0.0)
                           ? krho
                           : kz(xi, krho, mat.permittivity(xi), mat.permeability(xi));
    const double phase = std::exp(-2.0 * kzj * layers[j].thickness);
    const MaterialModel& prev = (j == 0) ? side.adjacent : layers[j - 1].material;
    const double rf = fresnel(pol, xi, krho, prev, mat);
    const double inner = r * phase;
    r = (rf + inner) / (1.0 + rf * inner);
  }
  return r;
}

ReflectionWithDerivative generalized_reflection_derivative(Polarization pol, double xi,
                                                           double krho,
                                                           const ReflectionSide& side,
                                                           std::size_t layer_index) {
  const auto& layers = side.remainder;
  if (layer_index >= layers.size())
    throw std::out_of_range("layer_index outside the reflection side");
  double r = fresnel(pol, xi, krho, layers.back().material, side.terminal);
  double dr = 0.0;
  for (std::size_t j = layers.size(); j-- > 0;) {
    const MaterialModel& mat = layers[j].material;
    const double kzj = (xi == 0.0)
                           ? krho
                           : kz(xi, krho, mat.permittivity(xi), mat.permeability(xi));
    const double phase = std::exp(-2.0 * kzj * layers[j].thickness);
    const MaterialModel& prev = (j == 0) ? side.adjacent : layers[j - 1].material;
    const double rf = fresnel(pol, xi, krho, prev, mat);
    const double inner = r * phase;
    double dinner = dr * phase;
    if (j == layer_index) dinner += r * (-2.0 * kzj) * phase;
    const double denom = 1.0 + rf * inner;
    r = (rf + inner) / denom;
    dr = dinner * (1.0 - rf * rf) / (denom * denom);
  }
  return {r, dr};
}

ReflectionSide left_side_of(const Stack& stack, std::size_t r) {
  if (r >= stack.layers.size()) throw std::out_of_range("layer index outside the stack");
  ReflectionSide side;
  side.adjacent = stack.layers[r].material;
  for (std::size_t j = r; j-- > 0;) side.remainder.push_back(stack.layers[j]);
  side.terminal = stack.left;
  return side;
}

ReflectionSide right_side_of(const Stack& stack, std::size_t r) {
  if (r >= stack.layers.size()) throw std::out_of_range("layer index outside the stack");
  ReflectionSide side;
  side.adjacent = stack.layers[r].material;
  for (std::size_t j = r + 1; j < stack.layers.size(); ++j) side.remainder.push_back(stack.layers[j]);
  side.terminal = stack.right;
  return side;
}

}  // namespace vdw
