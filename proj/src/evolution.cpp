#include "qsl/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace qsl {

namespace {
constexpr double kTMaxCap = 1e6;
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

OverlapModel::OverlapModel(const QuantumState& state, const HamiltonianSystem& system)
    : energies_(system.eigenvalues), populations_(qsl::populations(state, system)) {
  const double mean = populations_.dot(energies_);
  const double variance = populations_.dot((energies_.array() - mean).square().matrix());
  spread_ = std::sqrt(std::max(0.0, variance));
}

OverlapSample OverlapModel::at(double time) const {
  Complex s(0, 0);
  for (int n = 0; n < energies_.size(); ++n) {
    const double phase = -energies_(n) * time;
    s += populations_(n) * Complex(std::cos(phase), std::sin(phase));
  }
  OverlapSample sample;
  sample.time = time;
  sample.s_real = s.real();
  sample.s_imag = s.imag();
  sample.theta = std::acos(std::clamp(std::abs(s), 0.0, 1.0));
  sample.phase = std::atan2(s.imag(), s.real());
  return sample;
}

QuantumState evolve(const HamiltonianSystem& system, const QuantumState& state, double time) {
  if (state.dimension() != system.dimension()) {
    throw DimensionMismatch("state and hamiltonian dimensions differ");
  }
  Vector coeffs = system.eigenvectors.adjoint() * state.amplitudes();
  for (int n = 0; n < coeffs.size(); ++n) {
    const double phase = -system.eigenvalues(n) * time;
    coeffs(n) *= Complex(std::cos(phase), std::sin(phase));
  }
  // Renormalize away the rounding drift so downstream constructors stay strict.
  return QuantumState::normalized(system.eigenvectors * coeffs);
}

OverlapSample overlap(const HamiltonianSystem& system, const QuantumState& state, double time) {
  return OverlapModel(state, system).at(time);
}

double default_t_max(const HamiltonianSystem& system) {
  const double gap = system.gap();
  if (gap <= 0) {
    return kTMaxCap;
  }
  return std::min(4.0 * kPi * system.dimension() / gap, kTMaxCap);
}

double first_passage(const HamiltonianSystem& system, const QuantumState& state,
                     double target_theta, double t_max) {
  if (!(target_theta >= 0.0 && target_theta <= kPi / 2)) {
    throw OutOfRange("target angle must lie in [0, pi/2]");
  }
  if (target_theta == 0.0) {
    return 0.0;
  }
  const OverlapModel model(state, system);
  const double scale =
      std::max({1.0, std::abs(model.energies()(0)),
                std::abs(model.energies()(model.energies().size() - 1))});
  if (model.spread() <= 1e-10 * scale) {
    throw ZeroSpread("state is an eigenstate; its angle never leaves 0");
  }
  if (t_max <= 0) {
    t_max = default_t_max(system);
  }

  const double span = model.energies()(model.energies().size() - 1) - model.energies()(0);
  const double step = std::min(0.1 / model.spread(), kPi / (10.0 * span));
  const double target_cos = std::cos(target_theta);

  // March forward until |S| drops to (or below) the target cosine.
  double lo = 0.0;
  double hi = 0.0;
  bool bracketed = false;
  for (double t = step; t <= t_max; t += step) {
    const OverlapSample s = model.at(t);
    if (std::hypot(s.s_real, s.s_imag) <= target_cos) {
      hi = t;
      lo = t - step;
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    throw NotReached("angle target not reached within the scan horizon");
  }

  while (hi - lo > 1e-10 * (1.0 + hi)) {
    const double mid = 0.5 * (lo + hi);
    const OverlapSample s = model.at(mid);
    if (std::hypot(s.s_real, s.s_imag) <= target_cos) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qsl
