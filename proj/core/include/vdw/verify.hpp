#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdw/pressure.hpp"

namespace vdw {

struct VerificationCase {
  std::string description;
  double expected = 0.0;
  double actual = 0.0;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerificationCase> cases;
  bool overall = false;

  void add(std::string description, double expected, double actual, double tolerance);
  void finalize();  // sets overall = conjunction of case flags
};

/// Central finite difference of free_energy_lr vs pressure_lr on randomized
/// stacks, plus a second-order convergence check.
VerificationReport check_finite_difference(std::uint64_t seed, int count = 20,
                                           double h_rel = 1e-4);

/// Closed-form gap_closure_derivative vs the two-level numerical oracle
/// (finite-difference dT_zz/dz_r integrated over z_v), and the
/// delta-regularized form vs the delta = 0 form.
VerificationReport check_gap_derivative(std::uint64_t seed);

/// pressure_lr vs pressure_lr_dlp over randomized stacks, including mu != 1.
VerificationReport check_dlp_equivalence(std::uint64_t seed, int count = 50);

/// Nonretarded limit: 6 pi z^3 p(z) vs the Hamaker polylog sum for a vacuum
/// gap between identical dielectric half-spaces.
VerificationReport check_hamaker_limit(std::uint64_t seed, double z_small = 5e-10);

/// Ideal-metal Casimir limit pi^2 hbar c / (240 z^4).
VerificationReport check_ideal_metal(double z = 1e-8, double temperature = 300.0);

/// Generalization chain: pressure_vv / pressure_lv / pressure_in_layer all
/// reduce to pressure_lr, plus the reflection composition identity sweep.
VerificationReport check_reduction_chain(std::uint64_t seed, int count = 50);

/// Li_3 via direct series; |x| < 1. Independent oracle for the Hamaker sum.
double polylog3(double x);

/// Hamaker constant A = (3 k_B T / 2) sum'_n Li3(Delta_n^2) for identical
/// half-spaces of the given material across a vacuum gap.
double hamaker_constant(const MaterialModel& half_space, double temperature);

std::string format_report(const VerificationReport& report);

}  // namespace vdw
