#pragma once

#include "qsl/core.hpp"

namespace qsl {

// One point of the survival amplitude S(t) = <psi(0)|psi(t)>, recorded as
// S = cos(theta) * e^{i phase}.
struct OverlapSample {
  double time = 0;
  double s_real = 1;
  double s_imag = 0;
  double theta = 0;
  double phase = 0;
};

// Precomputed eigenbasis view of a fixed (state, system) pair, so that S(t)
// costs O(dim) per sample: S(t) = sum_n p_n e^{-i E_n t}.
class OverlapModel {
 public:
  OverlapModel(const QuantumState& state, const HamiltonianSystem& system);

  OverlapSample at(double time) const;

  const RealVector& energies() const { return energies_; }
  const RealVector& populations() const { return populations_; }
  double spread() const { return spread_; }

 private:
  RealVector energies_;
  RealVector populations_;
  double spread_;
};

// psi(t) = V e^{-i E t} V^dagger psi(0); exact within the spectral
// decomposition, unitary by construction.
QuantumState evolve(const HamiltonianSystem& system, const QuantumState& state, double time);

OverlapSample overlap(const HamiltonianSystem& system, const QuantumState& state, double time);

// Scan horizon for passage searches: min(4*pi*dim/gap, 1e6), or the cap when
// the spectrum is fully degenerate.
double default_t_max(const HamiltonianSystem& system);

// Earliest t > 0 with theta(t) = target_theta: dense forward scan (step fine
// enough for the fastest spectral frequency) followed by bisection on
// |S(t)| - cos(target). Pass t_max = 0 to use default_t_max.
// Throws ZeroSpread for an eigenstate with target > 0, NotReached when the
// scan exhausts t_max without a crossing, OutOfRange for a bad target.
double first_passage(const HamiltonianSystem& system, const QuantumState& state,
                     double target_theta, double t_max = 0);

}  // namespace qsl
