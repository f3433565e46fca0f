#pragma once

#include <cstddef>
#include <vector>

#include "vdw/materials.hpp"

namespace vdw {

enum class Polarization { e, h };  // transverse electric / transverse magnetic

struct Layer {
  MaterialModel material;
  double thickness = 0.0;  // m, > 0
};

/// Two semi-infinite half-spaces plus an ordered list of finite layers.
/// layers[0] touches `left`, layers.back() touches `right`.
struct Stack {
  MaterialModel left;
  std::vector<Layer> layers;
  MaterialModel right;
};

/// Everything to one side of a probe layer, seen from inside the probe.
/// `adjacent` is the medium the wave travels in (the probe layer's own
/// medium), remainder[0] is the first layer the wave hits, `terminal` the
/// semi-infinite backing.
struct ReflectionSide {
  MaterialModel adjacent;
  std::vector<Layer> remainder;
  MaterialModel terminal;
};

/// z-wavevector on the imaginary axis: sqrt(krho^2 + eps*mu*xi^2/c^2).
/// Always real and >= krho for eps*mu >= 1.
double kz(double xi, double krho, double eps, double mu);

/// Single-interface amplitude reflection coefficient for incidence from
/// medium a onto medium b, at imaginary frequency xi and transverse
/// wavevector krho. xi = 0 is evaluated in the static limit (kz = krho in
/// every medium; Drude media take their eps -> infinity limit for the h
/// polarization).
double fresnel(Polarization pol, double xi, double krho, const MaterialModel& a,
               const MaterialModel& b);

/// Moebius composition of reflection coefficients:
/// (r_ab + r_bc) / (1 + r_ab * r_bc). Throws DegenerateCompositionError when
/// the product is -1.
double composition(double r_ab, double r_bc);

/// Generalized reflection coefficient of a multilayer half-stack, built by
/// Moebius recursion from the terminal backing inward. Reduces to
/// fresnel(adjacent, terminal) for an empty remainder.
double generalized_reflection(Polarization pol, double xi, double krho,
                              const ReflectionSide& side);

/// Value and d/d(thickness of remainder[layer_index]) of the generalized
/// reflection coefficient, propagated analytically through the recursion.
struct ReflectionWithDerivative {
  double value;
  double derivative;  // 1/m
};
ReflectionWithDerivative generalized_reflection_derivative(Polarization pol, double xi,
                                                           double krho,
                                                           const ReflectionSide& side,
                                                           std::size_t layer_index);

/// Half-stacks seen from inside layer r (0-based) of a full stack.
ReflectionSide left_side_of(const Stack& stack, std::size_t r);
ReflectionSide right_side_of(const Stack& stack, std::size_t r);

}  // namespace vdw
