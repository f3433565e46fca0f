#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vdw/kernel.hpp"

namespace vdw {

/// Pressure with convergence diagnostics. Positive values mean the bounding
/// media attract (the film is being thinned).
struct PressureResult {
  double value = 0.0;             // Pa
  int n_used = 0;
  double truncation_error = 0.0;  // Pa, series tail estimate
  double quadrature_error = 0.0;  // Pa, accumulated estimate
  std::optional<std::vector<SeriesTerm>> per_n;
};

/// Pressure in a film of thickness z_m bounded by vacuum on both sides.
PressureResult pressure_vv(const MaterialModel& film, double z_m, const MatsubaraSpec& mats,
                           const QuadratureSpec& quad, bool record_per_n = false);

/// Pressure in a film bounded by medium `left` and vacuum.
PressureResult pressure_lv(const MaterialModel& left, const MaterialModel& film, double z_m,
                           const MatsubaraSpec& mats, const QuadratureSpec& quad,
                           bool record_per_n = false);

/// Pressure in a film bounded by two arbitrary semi-infinite media.
PressureResult pressure_lr(const MaterialModel& left, const MaterialModel& film,
                           const MaterialModel& right, double z_m, const MatsubaraSpec& mats,
                           const QuadratureSpec& quad, bool record_per_n = false);

/// Same quantity via the dimensionless q >= 1 formulation; an independent
/// discretization used to cross-validate pressure_lr. The n = 0 term is
/// computed by the k_rho path (the q substitution degenerates at xi = 0).
PressureResult pressure_lr_dlp(const MaterialModel& left, const MaterialModel& film,
                               const MaterialModel& right, double z_m,
                               const MatsubaraSpec& mats, const QuadratureSpec& quad,
                               bool record_per_n = false);

/// Pressure in layer r (0-based) of an N-layer stack. Reduces to pressure_lr
/// for a single-layer stack.
PressureResult pressure_in_layer(const Stack& stack, std::size_t r, const MatsubaraSpec& mats,
                                 const QuadratureSpec& quad, bool record_per_n = false);

/// Binding free energy per unit area (J/m^2) of the L-film-R configuration,
/// signed so that -d/dz_m of it equals pressure_lr. Used as oracle input.
double free_energy_lr(const MaterialModel& left, const MaterialModel& film,
                      const MaterialModel& right, double z_m, const MatsubaraSpec& mats,
                      const QuadratureSpec& quad);

}  // namespace vdw
