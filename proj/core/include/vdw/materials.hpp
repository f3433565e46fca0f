#pragma once

#include <vector>

#include "vdw/errors.hpp"

namespace vdw {

/// One Ninham-Parsegian oscillator: strength / (1 + (xi/w0)^2 + g*xi/w0^2).
struct OscillatorTerm {
  double strength = 0.0;    // dimensionless, >= 0
  double resonance = 0.0;   // rad/s, > 0
  double damping = 0.0;     // rad/s, >= 0

  bool operator==(const OscillatorTerm&) const = default;
};

enum class MaterialKind { vacuum, constant, lorentz, drude };

/// Electromagnetic response evaluated on the positive imaginary frequency
/// axis. eps(i*xi) is real and >= 1 for every model; permeability is a
/// frequency-independent constant.
class MaterialModel {
 public:
  MaterialModel() = default;  // vacuum

  static MaterialModel vacuum();
  static MaterialModel constant(double epsilon, double mu = 1.0);
  static MaterialModel lorentz(double static_offset, std::vector<OscillatorTerm> oscillators,
                               double mu = 1.0);
  static MaterialModel drude(double plasma_frequency, double damping, double mu = 1.0);

  /// eps(i*xi). Throws StaticDivergenceError for a Drude model at xi = 0.
  double permittivity(double xi) const;

  /// mu(i*xi); constant in xi by construction.
  double permeability(double /*xi*/) const { return permeability_; }

  MaterialKind kind() const { return kind_; }
  bool diverges_at_zero() const { return kind_ == MaterialKind::drude; }

  /// Leading coefficient of the static divergence, used by the limiting
  /// reflection rule when both media are Drude. With damping g > 0,
  /// eps ~ (wp^2/g)/xi (order 1); with g = 0, eps ~ wp^2/xi^2 (order 2).
  struct StaticScale {
    int order;     // power of 1/xi
    double coeff;
  };
  StaticScale static_divergence_scale() const;

  bool operator==(const MaterialModel&) const = default;

 private:
  MaterialKind kind_ = MaterialKind::vacuum;
  double static_offset_ = 0.0;
  std::vector<OscillatorTerm> oscillators_;
  double plasma_frequency_ = 0.0;
  double drude_damping_ = 0.0;
  double permeability_ = 1.0;
};

}  // namespace vdw
