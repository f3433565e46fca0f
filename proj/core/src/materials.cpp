#include "vdw/materials.hpp"

#include <cmath>
#include <utility>

namespace vdw {

MaterialModel MaterialModel::vacuum() { return MaterialModel{}; }

MaterialModel MaterialModel::constant(double epsilon, double mu) {
  if (epsilon < 1.0) throw std::invalid_argument("constant material requires epsilon >= 1");
  if (mu <= 0.0) throw std::invalid_argument("permeability must be > 0");
  MaterialModel m;
  m.kind_ = MaterialKind::constant;
  m.static_offset_ = epsilon - 1.0;
  m.permeability_ = mu;
  return m;
}

MaterialModel MaterialModel::lorentz(double static_offset, std::vector<OscillatorTerm> oscillators,
                                     double mu) {
  if (static_offset < 0.0) throw std::invalid_argument("static_offset must be >= 0");
  if (mu <= 0.0) throw std::invalid_argument("permeability must be > 0");
  for (const auto& osc : oscillators) {
    if (osc.strength < 0.0) throw std::invalid_argument("oscillator strength must be >= 0");
    if (osc.resonance <= 0.0) throw std::invalid_argument("oscillator resonance must be > 0");
    if (osc.damping < 0.0) throw std::invalid_argument("oscillator damping must be >= 0");
  }
  MaterialModel m;
  m.kind_ = MaterialKind::lorentz;
  m.static_offset_ = static_offset;
  m.oscillators_ = std::move(oscillators);
  m.permeability_ = mu;
  return m;
}

MaterialModel MaterialModel::drude(double plasma_frequency, double damping, double mu) {
  if (plasma_frequency < 0.0) throw std::invalid_argument("plasma_frequency must be >= 0");
  if (damping < 0.0) throw std::invalid_argument("drude damping must be >= 0");
  if (mu <= 0.0) throw std::invalid_argument("permeability must be > 0");
  MaterialModel m;
  m.kind_ = MaterialKind::drude;
  m.plasma_frequency_ = plasma_frequency;
  m.drude_damping_ = damping;
  m.permeability_ = mu;
  return m;
}

double MaterialModel::permittivity(double xi) const {
  if (xi < 0.0) throw std::invalid_argument("xi must be >= 0");
  switch (kind_) {
    case MaterialKind::vacuum:
      return 1.0;
    case MaterialKind::constant:
      return 1.0 + static_offset_;
    case MaterialKind::lorentz: {
      double eps = 1.0 + static_offset_;
      for (const auto& osc : oscillators_) {
        const double x = xi / osc.resonance;
        eps += osc.strength / (1.0 + x * x + osc.damping * xi / (osc.resonance * osc.resonance));
      }
      return eps;
    }
    case MaterialKind::drude:
      if (xi == 0.0)
        throw StaticDivergenceError(
            "drude permittivity diverges at xi = 0; use the limiting-reflection rule");
      return 1.0 + plasma_frequency_ * plasma_frequency_ / (xi * (xi + drude_damping_));
  }
  return 1.0;
}

MaterialModel::StaticScale MaterialModel::static_divergence_scale() const {
  if (kind_ != MaterialKind::drude) return {0, 0.0};
  if (drude_damping_ > 0.0) return {1, plasma_frequency_ * plasma_frequency_ / drude_damping_};
  return {2, plasma_frequency_ * plasma_frequency_};
}

}  // namespace vdw
