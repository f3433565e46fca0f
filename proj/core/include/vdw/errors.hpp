#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

/// A material response that diverges in the static limit was evaluated at
/// xi = 0. Callers must use the limiting-reflection rule instead.
class StaticDivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Moebius composition with product r_ab * r_bc = -1.
class DegenerateCompositionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature failed to reach the requested tolerance. Carries the
/// best partial value and its error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double partial, double error)
      : std::runtime_error(what), partial_value(partial), error_estimate(error) {}
  double partial_value;
  double error_estimate;
};

/// Matsubara series hit the term cap before converging.
class SeriesTruncationError : public std::runtime_error {
 public:
  SeriesTruncationError(const std::string& what, double partial, int n_terms)
      : std::runtime_error(what), partial_value(partial), n_terms(n_terms) {}
  double partial_value;
  int n_terms;
};

}  // namespace vdw
