#pragma once

#include <optional>
#include <string>

#include "qsl/core.hpp"

namespace qsl {

// Shared numerator of the mean-energy bound family, in hbar = 1 units:
// K(theta) = (pi/2) * max(0, 1 - sqrt(1 + 4/pi^2) * cos(theta)).
// Negative raw values are clamped: a time bound below zero says nothing.
double mean_energy_numerator(double theta);

// Spread-based angle bound: t >= theta / spread.
// Throws ZeroSpread when spread <= 0 and theta > 0, OutOfRange for bad theta.
double glm_beta_bound(double spread, double theta);

// The four mean-energy-family minimal times. Entries whose denominator is not
// positive are vacuous and reported as 0.
struct MeanEnergyFamily {
  double mean_min_e = 0;     // K / (mean - e_min)
  double max_mean_e = 0;     // K / (e_max - mean)
  double max_min = 0;        // K / half_width
  double delta_e_variant = 0;  // theta / half_width
};

MeanEnergyFamily mean_energy_family(const EnergyStats& stats, double theta);

struct TightestBound {
  std::string label;
  double value = 0;
};

struct BoundReport {
  double theta = 0;
  double glm_beta = 0;
  double mean_min_e = 0;
  double max_mean_e = 0;
  double max_min = 0;
  double delta_e_variant = 0;
  double bc = 0;
  TightestBound tightest;
  std::optional<double> saturation_ratio;  // actual / tightest, when actual given
  bool frozen = false;  // eigenstate: every bound vacuous
};

// Aggregates all six bounds at one angle. bc_value is the dimensionless BC
// limit on (mean - e_min) * t, so its time entry shares the mean_min_e
// denominator. Total over all valid states: an eigenstate yields an all-zero
// report with frozen = true instead of an error.
BoundReport bound_report(const EnergyStats& stats, double theta, double bc_value,
                         std::optional<double> actual_time = std::nullopt);

}  // namespace qsl
