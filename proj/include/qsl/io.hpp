#pragma once

#include <string>

#include "qsl/bounds.hpp"
#include "qsl/cases.hpp"
#include "qsl/core.hpp"
#include "qsl/harness.hpp"

namespace qsl {

struct LoadedSystem {
  HamiltonianSystem system;
  QuantumState state;
};

// Reads a system file: a JSON object with "hamiltonian" as a row-major nested
// array of [re, im] pairs and "state" as an array of [re, im] pairs. Any
// parse, shape, or physics defect (non-Hermitian, unnormalizable state) is
// reported as IoError — the file, not the call, is at fault.
LoadedSystem load_system_file(const std::string& path);

// Flat "key = value" records, numbers rendered with format_sig12. time_scale
// multiplies time-valued entries (1 for hbar units, 1/(2*pi) for h units).
std::string serialize_bound_report(const BoundReport& report, double time_scale = 1.0);
std::string serialize_case_report(const CaseReport& report, double time_scale = 1.0);
std::string serialize_grover_budget(const GroverBudget& budget, double time_scale = 1.0);

// Deterministic report body: everything except the elapsed wall time.
std::string serialize_verification_report(const VerificationReport& report);

}  // namespace qsl
