#include "vdw/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace vdw {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kronrod = 0.0;
  double gauss = 0.0;
  // odd Kronrod indices are the Gauss-7 nodes
  for (int i = 0; i < 7; ++i) {
    const double x = half * kKronrodNodes[i];
    const double fsum = f(mid - x) + f(mid + x);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
  }
  const double fc = f(mid);
  kronrod += kKronrodWeights[7] * fc;
  gauss += kGaussWeights[3] * fc;
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

struct Interval {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Interval& other) const { return error < other.error; }
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec) {
  if (a == b) return {0.0, 0.0};
  const PanelResult whole = gk15(f, a, b);
  if (whole.value == 0.0 && whole.error == 0.0) return {0.0, 0.0};

  // worst-first refinement against a global error target; the panel count
  // grows by one per bisection, so the work is bounded by the budget below
  std::priority_queue<Interval> queue;
  queue.push({a, b, whole.value, whole.error, 0});
  double total_value = whole.value;
  double total_error = whole.error;
  double total_mass = std::abs(whole.value);  // L1 proxy, floors the target
  const int max_panels = 200 * spec.max_depth;
  // integrand roundoff puts a floor under the achievable error estimate;
  // when refinement stalls near that floor, return the best estimate as
  // long as it is far tighter than any physically meaningful comparison.
  // the stall window scales with the panel count: after 2N bisections every
  // panel has been split, so a converging integral must have improved
  const double stall_cap = std::max(1e4 * spec.rel_tol, 1e-6);
  double checkpoint_error = total_error;
  long checkpoint_iter = 0;
  long iter = 0;
  while (!queue.empty()) {
    const double tol = std::max({spec.rel_tol * std::abs(total_value), spec.abs_tol,
                                 1e-15 * total_mass});
    if (total_error <= tol) break;
    ++iter;
    if (total_error < 0.8 * checkpoint_error) {
      checkpoint_error = total_error;
      checkpoint_iter = iter;
    } else if (iter - checkpoint_iter > std::max<long>(300, 2 * static_cast<long>(queue.size()))) {
      if (total_error <= stall_cap * std::abs(total_value)) break;
      throw QuadratureError("quadrature failure: error estimate stalled above tolerance",
                            total_value, total_error);
    }
    if (static_cast<int>(queue.size()) > max_panels) {
      if (total_error <= stall_cap * std::abs(total_value)) break;
      throw QuadratureError("quadrature failure: panel budget exhausted without convergence",
                            total_value, total_error);
    }
    const Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.depth >= spec.max_depth)
      throw QuadratureError("quadrature failure: max_depth reached without convergence",
                            total_value, total_error);
    if (mid <= worst.a || mid >= worst.b) continue;  // too narrow to bisect
    total_value -= worst.value;
    total_error -= worst.error;
    total_mass -= std::abs(worst.value);
    const PanelResult lo = gk15(f, worst.a, mid);
    const PanelResult hi = gk15(f, mid, worst.b);
    total_value += lo.value + hi.value;
    total_error += lo.error + hi.error;
    total_mass += std::abs(lo.value) + std::abs(hi.value);
    queue.push({worst.a, mid, lo.value, lo.error, worst.depth + 1});
    queue.push({mid, worst.b, hi.value, hi.error, worst.depth + 1});
  }
  return {total_value, total_error};
}

}  // namespace vdw
