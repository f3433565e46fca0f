#pragma once

#include <functional>

#include "vdw/errors.hpp"

namespace vdw {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;   // floor, in integrand units
  int max_depth = 60;        // adaptive subdivision limit
  double tail_cutoff = 60.0; // u-span of the substituted semi-infinite integrals
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimate, >= 0
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b], bisecting
/// the worst panel first until the summed error estimate meets the tolerance.
/// Throws QuadratureError if the depth or panel budget runs out first.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec);

}  // namespace vdw
