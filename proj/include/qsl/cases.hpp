#pragma once

#include <string>

#include "qsl/bounds.hpp"
#include "qsl/core.hpp"

namespace qsl {

// Outcome of one worked gate/search scenario, checked against exact evolution.
struct CaseReport {
  std::string name;
  double theta = 0;
  double passage_time = 0;
  double spread_time_product = 0;  // spread * passage_time, hbar = 1
  BoundReport bound_values;
  double saturation_ratio = 0;
  std::string notes;
};

// Single-qubit Hamiltonian -eps*sz + d1*sx + d2*sy with the (d1, d2) phase
// chosen so the evolved state lands on (|0>+|1>)/sqrt(2) up to global phase at
// the passage time. Requires delta > epsilon >= 0.
Matrix hadamard_hamiltonian(double epsilon, double delta);

// Closed-form first time with survival amplitude 1/sqrt(2):
// t = atan(sqrt((delta^2+epsilon^2)/(delta^2-epsilon^2))) / sqrt(epsilon^2+delta^2).
double hadamard_passage_closed_form(double epsilon, double delta);

// Gate timing for reaching the equal superposition from |0>. Throws
// Unrealizable when delta <= epsilon (the superposition is never reached).
CaseReport hadamard_case(double epsilon, double delta);

enum class CnotVariant { A, B };

Matrix cnot_gate();

// Variant A: -eps*(sz(x)I + I(x)sz - sz(x)sz). Variant B: eps*(I - sz)(x)sy.
Matrix cnot_intrinsic_hamiltonian(double epsilon, CnotVariant variant);

// The full realized two-qubit gate. Variant A composes target-qubit
// Walsh-Hadamards around the intrinsic evolution for h/(8*eps); with
// pulse_delta > 0 the Hadamards become finite sigma_y pulses of duration
// pi/(4*pulse_delta) with the intrinsic coupling left on. Variant B is the
// bare intrinsic evolution for h/(8*eps).
Matrix cnot_unitary(double epsilon, CnotVariant variant, double pulse_delta = 0);

CaseReport cnot_case(double epsilon, CnotVariant variant, double pulse_delta = 0);

// Time budget of the amplitude-amplification search in its exact
// two-dimensional invariant plane.
struct GroverBudget {
  long long n = 0;
  double iteration_angle = 0;        // 2*asin(1/sqrt(n))
  double iteration_count = 0;        // (pi/4)*sqrt(n)
  double per_iteration_min_time = 0; // 2/(spread*sqrt(n))
  double total_min_time = 0;         // iteration_count * per_iteration_min_time
  // Same budget without the small-angle approximation.
  double iterations_to_target = 0;   // (pi/2 - asin(1/sqrt(n))) / iteration_angle
  double exact_per_iteration_min_time = 0;  // iteration_angle / spread
  double exact_total_min_time = 0;
};

GroverBudget grover_case(long long n, double spread);

// Largest entrywise deviation between u and target after aligning the global
// phase (phase taken from trace(target^dagger u)).
double phase_distance(const Matrix& u, const Matrix& target);

}  // namespace qsl
