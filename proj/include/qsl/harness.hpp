#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qsl/core.hpp"

namespace qsl {

struct RunConfig {
  std::uint64_t seed = 42;
  long long trials = 100;
  int dim_max = 8;
  long long samples = 64;
  double t_max_override = 0;  // 0: per-system default_t_max policy
  double tolerance = 1e-9;    // violation slack: t >= bound - tolerance*(1+t)
};

struct Violation {
  std::uint64_t seed = 0;  // the offending trial's derived generator seed
  int dimension = 0;
  double time = 0;
  double theta = 0;
  std::string bound_label;
  double deficit = 0;  // bound - time
};

struct VerificationReport {
  long long trials = 0;
  std::vector<int> dimensions_tested;
  long long samples_per_trial = 0;
  std::vector<Violation> violations;
  double worst_saturation = 0;  // min over samples of time/tightest; inf if none
  double elapsed = 0;           // seconds; excluded from serialized output
};

// Cross-platform deterministic standard normal: Box-Muller over mt19937_64
// (std::normal_distribution is implementation-defined, which would break the
// byte-identical-report requirement across toolchains).
double normal_sample(std::mt19937_64& engine);

// GUE-style Hermitian draw: independent N(0,1) real/imaginary parts,
// symmetrized as (A + A^dagger)/2.
Matrix random_hermitian(std::mt19937_64& engine, int dimension);

QuantumState random_state(std::mt19937_64& engine, int dimension);

// Per-trial generator seed derived from (run seed, trial index).
std::uint64_t derive_seed(std::uint64_t seed, long long trial_index);

// Worker cap: QSL_THREADS when set to a positive integer, else the hardware
// concurrency (at least 1).
int worker_count();

// Runs body(i) for i in [0, count) across workers in contiguous blocks.
// Rethrows the first worker exception after joining.
void parallel_for(long long count, const std::function<void(long long)>& body);

// Draws `trials` random (system, state) pairs, samples each trajectory on a
// uniform time grid, and checks every sampled time against the full bound
// report. Deterministic for a fixed seed regardless of parallelism: trials
// derive independent generators and results reduce in trial order.
VerificationReport verify_random(const RunConfig& config);

// Bound-comparison curve over a uniform cos(theta) grid in [0, 1]; returns the
// number of data rows written. Throws IoError when the file cannot be opened.
long long emit_curves(long long points, const std::string& output_path);

}  // namespace qsl
