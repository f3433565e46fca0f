#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vdw/em.hpp"
#include "vdw/quadrature.hpp"

namespace vdw {

struct MatsubaraSpec {
  double temperature = 300.0;  // K, > 0
  double rel_tol = 1e-9;
  int min_terms = 10;
  int max_terms = 100000;
};

/// xi_n = 2 pi n k_B T / hbar; exactly 0 for n = 0.
double matsubara_frequency(int n, double temperature);

struct SeriesTerm {
  int n;
  double xi;            // rad/s
  double contribution;  // already half-weighted for n = 0
};

struct SeriesResult {
  double value = 0.0;
  int n_used = 0;               // number of terms summed (including n = 0)
  double tail_estimate = 0.0;   // geometric extrapolation of the truncated tail
  double quad_error = 0.0;      // accumulated quadrature error estimates
  std::vector<SeriesTerm> terms;
};

/// Primed Matsubara sum: n = 0 at half weight, compensated summation in
/// ascending n, truncation when three consecutive terms fall below
/// rel_tol * |partial sum| (after min_terms). term_fn(n, xi) returns one
/// unweighted term with its quadrature error estimate.
SeriesResult matsubara_sum(const std::function<QuadResult(int, double)>& term_fn,
                           const MatsubaraSpec& mats, bool record_terms = false);

/// A vacuum probe gap of width z_v with multilayer half-stacks on each side.
struct ProbeGeometry {
  ReflectionSide left_side;
  ReflectionSide right_side;
  double z_v = 0.0;  // m, >= 0
};

/// Per-frequency kernel K_n (1/m^3), such that T_zz^avg = k_B T * sum' K_n.
/// Requires z_v > 0.
double kernel_Kn(const ProbeGeometry& geom, int n, double temperature,
                 const QuadratureSpec& quad);

/// Matsubara-summed stress tensor in the vacuum probe layer (Pa).
SeriesResult stress_tensor_avg(const ProbeGeometry& geom, const MatsubaraSpec& mats,
                               const QuadratureSpec& quad, bool record_terms = false);

/// Work per unit area done in closing the probe gap from infinity down to
/// delta (J/m^2). Diverges like delta^-2 as delta -> 0.
double work_to_close_gap(const ProbeGeometry& geom, double delta, const MatsubaraSpec& mats,
                         const QuadratureSpec& quad);

/// The closed-form quantity int_inf^0 dT_zz^avg/dz_r dz_v (Pa) for layer r
/// (0-based index into the chosen side's remainder), evaluated at probe gap
/// delta (delta = 0 is the physical value; delta > 0 gives the regularized
/// form used to check the limit).
enum class ProbeSide { left, right };
SeriesResult gap_closure_derivative(const ProbeGeometry& geom, ProbeSide side,
                                    std::size_t layer_index, const MatsubaraSpec& mats,
                                    const QuadratureSpec& quad, double delta = 0.0);

}  // namespace vdw
