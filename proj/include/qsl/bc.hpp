#pragma once

#include <optional>

#include "qsl/errors.hpp"

namespace qsl {

// One trigonometric inequality cos x >= c - b*x + a*sin x, encoded through its
// deficit f(x) = cos x + b*x - c - a*sin x which must stay >= 0 for x >= 0.
struct TrigTriple {
  double a = 0;
  double b = 0;  // positive
  double c = 0;
  std::optional<double> tangency_point;
  bool certified = false;
  double min_margin = 0;  // min of f over x >= 0; meaningful once certified ran
};

// Builds the triple whose deficit touches zero at x_star:
// b = sin x* + a cos x*, c = cos x* + b x* - a sin x*.
// Throws NonPositiveSlope when the resulting b <= 0, OutOfRange for x_star <= 0.
TrigTriple triple_from_tangency(double x_star, double a);

// Fills min_margin and certified = (min_margin >= -tolerance). Exact: for
// b > 0, f(x + 2pi) = f(x) + 2pi*b, so the global minimum over x >= 0 sits in
// [0, 2pi], where every critical point solves sqrt(1+a^2) sin(x + phi) = b in
// closed form. The minimum over {endpoints, critical points} is evaluated
// directly instead of walking a Lipschitz grid.
TrigTriple certify(TrigTriple triple, double tolerance = 1e-9);

// The maximized dimensionless bound at one angle, with the triple achieving it.
struct BcResult {
  double theta = 0;
  double value = 0;  // lower limit of (mean - e_min) * t, hbar = 1
  TrigTriple witness;
};

// Maximizes g = (c - sqrt(1+a^2) cos theta)/b over certified tangency triples
// with x* in (0, 2pi], a in [-3, 3]; clamped at 0. Deterministic: fixed coarse
// grid, a cached family along the c = 1 boundary of the certified set, and
// shrink-step refinement with certification re-checked at every accepted point.
BcResult bc_bound(double theta);

// Cubic fit of the same curve in u = cos(theta), clamped at 0.
// Throws OutOfRange for u outside [0, 1].
double bc_poly(double cos_theta);

}  // namespace qsl
