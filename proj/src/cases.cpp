#include "qsl/cases.hpp"

#include <cmath>

#include "qsl/bc.hpp"
#include "qsl/evolution.hpp"
#include "qsl/format.hpp"

namespace qsl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix hadamard_gate() {
  Matrix m(2, 2);
  const double is2 = 1.0 / std::sqrt(2.0);
  m << is2, is2, is2, -is2;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// e^{-i H t} through the spectral decomposition; exact and unitary.
Matrix propagator(const Matrix& hamiltonian, double time) {
  const HamiltonianSystem system = spectral_decompose(hamiltonian);
  Vector phases(system.dimension());
  for (int n = 0; n < system.dimension(); ++n) {
    const double phase = -system.eigenvalues(n) * time;
    phases(n) = Complex(std::cos(phase), std::sin(phase));
  }
  return system.eigenvectors * phases.asDiagonal() * system.eigenvectors.adjoint();
}

QuantumState control_superposition() {
  Vector amps = Vector::Zero(4);
  amps(0) = amps(2) = Complex(1.0 / std::sqrt(2.0), 0.0);
  return QuantumState(std::move(amps));
}

CaseReport assemble(std::string name, double theta, double passage_time,
                    const EnergyStats& stats, std::string notes) {
  CaseReport report;
  report.name = std::move(name);
  report.theta = theta;
  report.passage_time = passage_time;
  report.spread_time_product = stats.spread * passage_time;
  report.bound_values = bound_report(stats, theta, bc_bound(theta).value, passage_time);
  report.saturation_ratio = report.bound_values.saturation_ratio.value_or(0.0);
  report.notes = std::move(notes);
  return report;
}

}  // namespace

double hadamard_passage_closed_form(double epsilon, double delta) {
  if (!(delta > 0.0 && epsilon >= 0.0)) {
    throw OutOfRange("hadamard case requires delta > 0 and epsilon >= 0");
  }
  if (delta <= epsilon) {
    throw Unrealizable("equal superposition is unreachable unless delta > epsilon");
  }
  const double omega = std::hypot(epsilon, delta);
  const double rhs = std::sqrt((delta * delta + epsilon * epsilon) /
                               (delta * delta - epsilon * epsilon));
  return std::atan(rhs) / omega;
}

Matrix hadamard_hamiltonian(double epsilon, double delta) {
  const double tau = hadamard_passage_closed_form(epsilon, delta);
  const double omega = std::hypot(epsilon, delta);
  // Pick the coupling phase that cancels the relative phase accumulated by the
  // surviving amplitude, so the passage lands on (|0>+|1>)/sqrt(2) itself.
  const double phi =
      kPi / 2 + std::atan2(epsilon / omega * std::sin(omega * tau), std::cos(omega * tau));
  Matrix h(2, 2);
  h(0, 0) = Complex(-epsilon, 0);
  h(1, 1) = Complex(epsilon, 0);
  h(0, 1) = delta * std::exp(-kI * phi);
  h(1, 0) = delta * std::exp(kI * phi);
  return h;
}

CaseReport hadamard_case(double epsilon, double delta) {
  const double closed_form = hadamard_passage_closed_form(epsilon, delta);
  const HamiltonianSystem system = spectral_decompose(hadamard_hamiltonian(epsilon, delta));
  const QuantumState initial = QuantumState::basis(2, 0);
  const double simulated = first_passage(system, initial, kPi / 4);

  Vector target_amps(2);
  target_amps << Complex(1, 0), Complex(1, 0);
  const QuantumState target = QuantumState::normalized(target_amps);
  const double residual = angle(evolve(system, initial, simulated), target).theta;

  const EnergyStats stats = energy_stats(initial, system);
  const std::string notes =
      "closed_form_passage=" + format_sig12(closed_form) +
      ";target_residual_angle=" + format_sig12(residual) +
      ";endpoint_recomputed_h=" + format_sig12(1.0 / (4.0 * std::sqrt(2.0))) +
      ";endpoint_printed_h=" + format_sig12(1.0 / (2.0 * std::sqrt(2.0))) +
      ";endpoint_note=printed upper endpoint disagrees with its own closed form";
  return assemble("hadamard", kPi / 4, simulated, stats, notes);
}

Matrix cnot_gate() {
  Matrix gate = Matrix::Identity(4, 4);
  gate(2, 2) = gate(3, 3) = 0;
  gate(2, 3) = gate(3, 2) = 1;
  return gate;
}

Matrix cnot_intrinsic_hamiltonian(double epsilon, CnotVariant variant) {
  if (!(epsilon > 0.0)) {
    throw OutOfRange("cnot case requires epsilon > 0");
  }
  const Matrix sz = pauli_z();
  const Matrix id = identity2();
  if (variant == CnotVariant::A) {
    return -epsilon * (kron(sz, id) + kron(id, sz) - kron(sz, sz));
  }
  return epsilon * kron(id - sz, pauli_y());
}

Matrix cnot_unitary(double epsilon, CnotVariant variant, double pulse_delta) {
  const Matrix intrinsic = cnot_intrinsic_hamiltonian(epsilon, variant);
  const double tau = kPi / (4.0 * epsilon);  // h/(8*eps) with hbar = 1
  const Matrix middle = propagator(intrinsic, tau);
  if (variant == CnotVariant::B) {
    return middle;
  }
  if (pulse_delta > 0.0) {
    const double pulse_time = kPi / (4.0 * pulse_delta);
    const Matrix coupling = kron(identity2(), pauli_y());
    const Matrix first = propagator(intrinsic - pulse_delta * coupling, pulse_time);
    const Matrix last = propagator(intrinsic + pulse_delta * coupling, pulse_time);
    return last * middle * first;
  }
  const Matrix conjugate = kron(identity2(), hadamard_gate());
  return conjugate * middle * conjugate;
}

CaseReport cnot_case(double epsilon, CnotVariant variant, double pulse_delta) {
  const Matrix intrinsic = cnot_intrinsic_hamiltonian(epsilon, variant);
  const HamiltonianSystem system = spectral_decompose(intrinsic);
  const double tau = kPi / (4.0 * epsilon);
  const QuantumState bare = control_superposition();

  if (variant == CnotVariant::B) {
    const EnergyStats stats = energy_stats(bare, system);
    const double theta = angle(bare, evolve(system, bare, tau)).theta;
    const QuantumState basis_input = QuantumState::basis(4, 2);
    const EnergyStats basis_stats = energy_stats(basis_input, system);
    const double basis_theta = angle(basis_input, evolve(system, basis_input, tau)).theta;
    const std::string notes =
        "superposition_spread=" + format_sig12(stats.spread) +
        ";superposition_theta=" + format_sig12(theta) +
        ";basis_input_spread=" + format_sig12(basis_stats.spread) +
        ";basis_input_theta=" + format_sig12(basis_theta) +
        ";basis_input_product_h=" + format_sig12(basis_stats.spread * tau / (2 * kPi)) +
        ";pairing_note=quarter-period product pairs with the basis input, not the "
        "superposition input's angle";
    return assemble("cnot_b", theta, tau, stats, notes);
  }

  // Variant A: Hadamard-conjugate qubit 2 around the intrinsic quarter period.
  Matrix first_step;
  if (pulse_delta > 0.0) {
    first_step = propagator(intrinsic - pulse_delta * kron(identity2(), pauli_y()),
                            kPi / (4.0 * pulse_delta));
  } else {
    first_step = kron(identity2(), hadamard_gate());
  }
  const QuantumState intermediate = QuantumState::normalized(first_step * bare.amplitudes());
  const EnergyStats stats = energy_stats(intermediate, system);
  const double theta = angle(intermediate, evolve(system, intermediate, tau)).theta;

  const EnergyStats bare_stats = energy_stats(bare, system);
  const double gate_error = phase_distance(cnot_unitary(epsilon, variant, pulse_delta), cnot_gate());
  const std::string notes =
      "initial_state=(|0>+|1>)|0>/sqrt2;initial_spread=" + format_sig12(bare_stats.spread) +
      ";gate_phase_distance=" + format_sig12(gate_error) +
      ";pulse_delta=" + format_sig12(pulse_delta);
  return assemble("cnot_a", theta, tau, stats, notes);
}

GroverBudget grover_case(long long n, double spread) {
  if (n < 2) {
    throw OutOfRange("database dimension must be at least 2");
  }
  if (!(spread > 0.0)) {
    throw ZeroSpread("grover budget requires a positive energy spread");
  }
  const double root = std::sqrt(static_cast<double>(n));
  GroverBudget budget;
  budget.n = n;
  budget.iteration_angle = 2.0 * std::asin(1.0 / root);
  budget.iteration_count = (kPi / 4.0) * root;
  budget.per_iteration_min_time = 2.0 / (spread * root);
  budget.total_min_time = budget.iteration_count * budget.per_iteration_min_time;
  budget.iterations_to_target = (kPi / 2 - std::asin(1.0 / root)) / budget.iteration_angle;
  budget.exact_per_iteration_min_time = budget.iteration_angle / spread;
  budget.exact_total_min_time =
      budget.iterations_to_target * budget.exact_per_iteration_min_time;
  return budget;
}

double phase_distance(const Matrix& u, const Matrix& target) {
  if (u.rows() != target.rows() || u.cols() != target.cols()) {
    throw DimensionMismatch("matrices must share a shape");
  }
  const Complex trace = (target.adjoint() * u).trace();
  const Complex alignment =
      std::abs(trace) > 0 ? trace / std::abs(trace) : Complex(1.0, 0.0);
  return (u / alignment - target).cwiseAbs().maxCoeff();
}

}  // namespace qsl
