#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qsl/errors.hpp"

namespace qsl {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// A pure state: normalized complex amplitude vector of dimension >= 2.
class QuantumState {
 public:
  // Requires |amplitudes| = 1 within 1e-12; throws NotNormalized otherwise.
  explicit QuantumState(Vector amplitudes);

  // Rescales an arbitrary nonzero vector to unit norm.
  static QuantumState normalized(const Vector& amplitudes);

  // Computational basis state |index> in `dimension` levels.
  static QuantumState basis(int dimension, int index);

  const Vector& amplitudes() const { return amps_; }
  int dimension() const { return static_cast<int>(amps_.size()); }

 private:
  Vector amps_;
};

// A Hamiltonian together with its spectral decomposition.
// eigenvalues are sorted ascending; eigenvectors' columns are the matching
// orthonormal eigenstates, so matrix = V diag(eigenvalues) V^dagger.
struct HamiltonianSystem {
  Matrix matrix;
  RealVector eigenvalues;
  Matrix eigenvectors;

  int dimension() const { return static_cast<int>(eigenvalues.size()); }

  // Smallest difference between adjacent distinct eigenvalues; 0 if the
  // spectrum is fully degenerate.
  double gap() const;
};

struct EnergyStats {
  double mean = 0;        // <H>
  double spread = 0;      // sqrt(<H^2> - <H>^2)
  double e_min = 0;
  double e_max = 0;
  double half_width = 0;  // (e_max - e_min) / 2
};

struct Angle {
  double theta = 0;  // radians, in [0, pi/2]
};

// Diagonalizes a Hermitian matrix. Throws NotSquare, or NotHermitian when any
// entry of M - M^dagger exceeds 1e-10 in magnitude.
HamiltonianSystem spectral_decompose(const Matrix& hamiltonian);

// Eigenbasis populations |<E_n|psi>|^2 of a state; sums to 1.
RealVector populations(const QuantumState& state, const HamiltonianSystem& system);

// Energy mean/spread/extremes of a state. The spread is computed from the
// eigenbasis populations with a centered second moment, which stays accurate
// for eigenstates where <H^2> - <H>^2 would cancel catastrophically.
EnergyStats energy_stats(const QuantumState& state, const HamiltonianSystem& system);

// theta = arccos(|<a|b>|), clamped into [0, pi/2].
Angle angle(const QuantumState& a, const QuantumState& b);

}  // namespace qsl
