#include "qsl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qsl {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const double kSlopeFactor = std::sqrt(1.0 + 4.0 / (kPi * kPi));

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi / 2)) {
    throw OutOfRange("theta must lie in [0, pi/2]");
  }
}

double safe_ratio(double numerator, double denominator) {
  return denominator > 0 ? numerator / denominator : 0.0;
}
}  // namespace

double mean_energy_numerator(double theta) {
  check_theta(theta);
  return (kPi / 2) * std::max(0.0, 1.0 - kSlopeFactor * std::cos(theta));
}

double glm_beta_bound(double spread, double theta) {
  check_theta(theta);
  if (theta == 0.0) {
    return 0.0;
  }
  if (spread <= 0.0) {
    throw ZeroSpread("energy spread must be positive for a nonzero angle");
  }
  return theta / spread;
}

MeanEnergyFamily mean_energy_family(const EnergyStats& stats, double theta) {
  const double k = mean_energy_numerator(theta);
  MeanEnergyFamily family;
  family.mean_min_e = safe_ratio(k, stats.mean - stats.e_min);
  family.max_mean_e = safe_ratio(k, stats.e_max - stats.mean);
  family.max_min = safe_ratio(k, stats.half_width);
  family.delta_e_variant = safe_ratio(theta, stats.half_width);
  return family;
}

BoundReport bound_report(const EnergyStats& stats, double theta, double bc_value,
                         std::optional<double> actual_time) {
  check_theta(theta);
  BoundReport report;
  report.theta = theta;

  const double scale = std::max({1.0, std::abs(stats.e_min), std::abs(stats.e_max)});
  report.frozen = stats.spread <= 1e-10 * scale;
  if (!report.frozen) {
    report.glm_beta = theta / stats.spread;
  }

  const MeanEnergyFamily family = mean_energy_family(stats, theta);
  report.mean_min_e = family.mean_min_e;
  report.max_mean_e = family.max_mean_e;
  report.max_min = family.max_min;
  report.delta_e_variant = family.delta_e_variant;
  report.bc = safe_ratio(std::max(0.0, bc_value), stats.mean - stats.e_min);

  report.tightest = {"glm_beta", report.glm_beta};
  const std::pair<const char*, double> entries[] = {
      {"mean_min_e", report.mean_min_e}, {"max_mean_e", report.max_mean_e},
      {"max_min", report.max_min},       {"delta_e_variant", report.delta_e_variant},
      {"bc", report.bc}};
  for (const auto& [label, value] : entries) {
    if (value > report.tightest.value) {
      report.tightest = {label, value};
    }
  }

  if (actual_time) {
    report.saturation_ratio = report.tightest.value > 0
                                  ? *actual_time / report.tightest.value
                                  : std::numeric_limits<double>::infinity();
  }
  return report;
}

}  // namespace qsl
