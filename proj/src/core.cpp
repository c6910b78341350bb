#include "qsl/core.hpp"

#include <algorithm>
#include <cmath>

namespace qsl {

namespace {
constexpr double kNormTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-10;
}  // namespace

QuantumState::QuantumState(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) {
    throw OutOfRange("state dimension must be at least 2");
  }
  if (std::abs(amps_.norm() - 1.0) > kNormTolerance) {
    throw NotNormalized("state amplitudes must have unit norm");
  }
}

QuantumState QuantumState::normalized(const Vector& amplitudes) {
  const double norm = amplitudes.norm();
  if (norm <= 0 || !std::isfinite(norm)) {
    throw NotNormalized("cannot normalize a zero or non-finite vector");
  }
  return QuantumState(amplitudes / norm);
}

QuantumState QuantumState::basis(int dimension, int index) {
  if (dimension < 2 || index < 0 || index >= dimension) {
    throw OutOfRange("basis index must lie in [0, dimension)");
  }
  Vector amps = Vector::Zero(dimension);
  amps(index) = Complex(1.0, 0.0);
  return QuantumState(std::move(amps));
}

double HamiltonianSystem::gap() const {
  const int d = dimension();
  const double scale = std::max({1.0, std::abs(eigenvalues(0)), std::abs(eigenvalues(d - 1))});
  double smallest = 0;
  for (int i = 1; i < d; ++i) {
    const double diff = eigenvalues(i) - eigenvalues(i - 1);
    if (diff > 1e-12 * scale && (smallest == 0 || diff < smallest)) {
      smallest = diff;
    }
  }
  return smallest;
}

HamiltonianSystem spectral_decompose(const Matrix& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw NotSquare("hamiltonian must be a square matrix");
  }
  if (hamiltonian.rows() < 2) {
    throw OutOfRange("hamiltonian dimension must be at least 2");
  }
  const double asymmetry = (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kHermitianTolerance) {
    throw NotHermitian("hamiltonian deviates from Hermitian symmetry");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed to converge");
  }
  HamiltonianSystem system;
  system.matrix = hamiltonian;
  system.eigenvalues = solver.eigenvalues();
  system.eigenvectors = solver.eigenvectors();
  return system;
}

RealVector populations(const QuantumState& state, const HamiltonianSystem& system) {
  if (state.dimension() != system.dimension()) {
    throw DimensionMismatch("state and hamiltonian dimensions differ");
  }
  return (system.eigenvectors.adjoint() * state.amplitudes()).cwiseAbs2();
}

EnergyStats energy_stats(const QuantumState& state, const HamiltonianSystem& system) {
  const RealVector pops = populations(state, system);
  const RealVector& energies = system.eigenvalues;
  EnergyStats stats;
  stats.mean = pops.dot(energies);
  const double variance = pops.dot((energies.array() - stats.mean).square().matrix());
  stats.spread = std::sqrt(std::max(0.0, variance));
  stats.e_min = energies(0);
  stats.e_max = energies(system.dimension() - 1);
  stats.half_width = 0.5 * (stats.e_max - stats.e_min);
  return stats;
}

Angle angle(const QuantumState& a, const QuantumState& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("states must share a dimension");
  }
  const double overlap = std::abs(a.amplitudes().dot(b.amplitudes()));
  return Angle{std::acos(std::clamp(overlap, 0.0, 1.0))};
}

}  // namespace qsl
