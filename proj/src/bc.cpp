#include "qsl/bc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qsl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2 * kPi;
constexpr double kCertTolerance = 1e-9;
constexpr double kAMin = -3.0;
constexpr double kAMax = 3.0;

double deficit(double a, double b, double c, double x) {
  return std::cos(x) + b * x - c - a * std::sin(x);
}

// Global minimum of the deficit over x >= 0, assuming b > 0. The minimum lies
// in [0, 2pi] because each period lifts f by 2pi*b; within one period the
// critical points of f solve sin x + a cos x = b, i.e.
// sqrt(1+a^2) sin(x + phi) = b with phi = atan2(a, 1).
double min_margin_value(double a, double b, double c) {
  double margin = std::min(deficit(a, b, c, 0.0), deficit(a, b, c, kTwoPi));
  const double amplitude = std::hypot(1.0, a);
  const double ratio = b / amplitude;
  if (ratio <= 1.0) {
    const double phi = std::atan2(a, 1.0);
    const double base = std::asin(ratio);
    for (const double branch : {base, kPi - base}) {
      for (int k = -1; k <= 2; ++k) {
        const double x = branch - phi + kTwoPi * k;
        if (x >= 0.0 && x <= kTwoPi) {
          margin = std::min(margin, deficit(a, b, c, x));
        }
      }
    }
  }
  return margin;
}

// A tangency triple prepared for fast bound evaluation.
struct Candidate {
  double x_star = 0;
  double a = 0;
  double b = 0;
  double c = 0;
  double amplitude = 0;  // sqrt(1 + a^2)

  double gain(double u) const { return (c - amplitude * u) / b; }
};

// Certified-candidate factory: box check, positive slope, margin within the
// certification tolerance. Returns nullopt when any gate fails.
std::optional<Candidate> make_candidate(double x_star, double a) {
  if (!(x_star > 0.0 && x_star <= kTwoPi && a >= kAMin && a <= kAMax)) {
    return std::nullopt;
  }
  const double b = std::sin(x_star) + a * std::cos(x_star);
  if (!(b > 0.0)) {
    return std::nullopt;
  }
  const double c = std::cos(x_star) + b * x_star - a * std::sin(x_star);
  if (min_margin_value(a, b, c) < -kCertTolerance) {
    return std::nullopt;
  }
  return Candidate{x_star, a, b, c, std::hypot(1.0, a)};
}

// Solves c(x*, a) = 1 for a; the maximizing triple rides this edge of the
// certified set (c is capped at 1 by f(0) >= 0).
double boundary_a(double x_star) {
  const double numerator = 1.0 - std::cos(x_star) - x_star * std::sin(x_star);
  const double denominator = x_star * std::cos(x_star) - std::sin(x_star);
  return numerator / denominator;
}

std::optional<Candidate> boundary_candidate(double x_star) {
  const double a = boundary_a(x_star);
  if (!std::isfinite(a)) {
    return std::nullopt;
  }
  return make_candidate(x_star, a);
}

// 64 x 64 lexicographically ordered coarse scan points, certified once.
const std::vector<Candidate>& coarse_candidates() {
  static const std::vector<Candidate> grid = [] {
    std::vector<Candidate> points;
    constexpr int n = 64;
    for (int i = 0; i < n; ++i) {
      const double x_star = kTwoPi * (i + 1) / n;
      for (int j = 0; j < n; ++j) {
        const double a = kAMin + (kAMax - kAMin) * j / (n - 1);
        if (auto candidate = make_candidate(x_star, a)) {
          points.push_back(*candidate);
        }
      }
    }
    return points;
  }();
  return grid;
}

// Dense one-parameter family along the c = 1 edge, certified once.
const std::vector<Candidate>& boundary_candidates() {
  static const std::vector<Candidate> curve = [] {
    std::vector<Candidate> points;
    constexpr int n = 1024;
    for (int k = 0; k < n; ++k) {
      if (auto candidate = boundary_candidate(kTwoPi * (k + 1) / n)) {
        points.push_back(*candidate);
      }
    }
    return points;
  }();
  return curve;
}

// First strict maximum of gain(u) over a candidate list (lists are built in
// lexicographic (x*, a) order, so ties resolve lexicographically).
Candidate best_of(const std::vector<Candidate>& candidates, double u) {
  const Candidate* best = &candidates.front();
  double best_gain = best->gain(u);
  for (const Candidate& candidate : candidates) {
    const double gain = candidate.gain(u);
    if (gain > best_gain) {
      best = &candidate;
      best_gain = gain;
    }
  }
  return *best;
}

// Shrink-step line search along the c = 1 curve, moving the tangency point.
Candidate refine_on_boundary(Candidate current, double u) {
  double step = kTwoPi / 1024;
  double current_gain = current.gain(u);
  while (step > 1e-12) {
    bool moved = false;
    for (const double direction : {+1.0, -1.0}) {
      if (auto next = boundary_candidate(current.x_star + direction * step)) {
        if (next->gain(u) > current_gain) {
          current = *next;
          current_gain = next->gain(u);
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      step *= 0.5;
    }
  }
  return current;
}

// 8-direction compass polish in the (x*, a) plane; every accepted move is a
// freshly certified candidate.
Candidate polish(Candidate current, double u, double step, double step_min) {
  static constexpr double kDirections[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                               {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
  double current_gain = current.gain(u);
  while (step > step_min) {
    bool moved = false;
    for (const auto& direction : kDirections) {
      const auto next =
          make_candidate(current.x_star + direction[0] * step, current.a + direction[1] * step);
      if (next && next->gain(u) > current_gain) {
        current = *next;
        current_gain = next->gain(u);
        moved = true;
        break;
      }
    }
    if (!moved) {
      step *= 0.5;
    }
  }
  return current;
}

TrigTriple margolus_levitin_triple() {
  return certify(triple_from_tangency(kPi, -2.0 / kPi));
}

}  // namespace

TrigTriple triple_from_tangency(double x_star, double a) {
  if (!(x_star > 0.0)) {
    throw OutOfRange("tangency point must be positive");
  }
  TrigTriple triple;
  triple.a = a;
  triple.b = std::sin(x_star) + a * std::cos(x_star);
  if (!(triple.b > 0.0)) {
    throw NonPositiveSlope("tangency yields a non-positive slope b");
  }
  triple.c = std::cos(x_star) + triple.b * x_star - a * std::sin(x_star);
  triple.tangency_point = x_star;
  return triple;
}

TrigTriple certify(TrigTriple triple, double tolerance) {
  if (!(triple.b > 0.0)) {
    throw NonPositiveSlope("certification requires a positive slope b");
  }
  if (!(tolerance > 0.0)) {
    throw OutOfRange("certification tolerance must be positive");
  }
  triple.min_margin = min_margin_value(triple.a, triple.b, triple.c);
  triple.certified = triple.min_margin >= -tolerance;
  return triple;
}

BcResult bc_bound(double theta) {
  if (!(theta >= 0.0 && theta <= kPi / 2)) {
    throw OutOfRange("theta must lie in [0, pi/2]");
  }
  // At theta = 0 the supremum over the exact family is 0 (c <= 1 <= amplitude);
  // certification slack could leak a ~1e-9 positive, so report the reference
  // triple, whose raw gain is negative, and let the clamp land on 0 exactly.
  if (theta == 0.0) {
    return BcResult{0.0, 0.0, margolus_levitin_triple()};
  }

  const double u = std::cos(theta);
  const Candidate grid_seed = best_of(coarse_candidates(), u);
  const Candidate edge_seed = best_of(boundary_candidates(), u);

  Candidate best = polish(refine_on_boundary(edge_seed, u), u, 1e-4, 1e-12);

  // Safety net: polish the grid seed coarsely; chase it to full precision only
  // if it discovers a basin the boundary family missed.
  Candidate from_grid = polish(grid_seed, u, 0.15, 1e-7);
  if (from_grid.gain(u) > best.gain(u)) {
    from_grid = polish(from_grid, u, 1e-7, 1e-12);
    if (from_grid.gain(u) > best.gain(u)) {
      best = from_grid;
    }
  }

  BcResult result;
  result.theta = theta;
  result.witness = certify(triple_from_tangency(best.x_star, best.a));
  result.value = std::max(
      0.0, (result.witness.c - std::hypot(1.0, result.witness.a) * u) / result.witness.b);
  return result;
}

double bc_poly(double cos_theta) {
  if (!(cos_theta >= 0.0 && cos_theta <= 1.0)) {
    throw OutOfRange("cos_theta must lie in [0, 1]");
  }
  const double raw =
      1.57 + cos_theta * (-1.847 + cos_theta * (0.372 + cos_theta * -0.0958));
  return std::max(0.0, raw);
}

}  // namespace qsl
