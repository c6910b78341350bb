#include "qsl/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "qsl/bc.hpp"
#include "qsl/bounds.hpp"
#include "qsl/evolution.hpp"
#include "qsl/format.hpp"

namespace qsl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double uniform_open(std::mt19937_64& engine) {
  // 53-bit mantissa draw in [0, 1).
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct TrialOutcome {
  int dimension = 0;
  double min_ratio = std::numeric_limits<double>::infinity();
  std::vector<Violation> violations;
};

TrialOutcome run_trial(const RunConfig& config, long long index) {
  const std::uint64_t trial_seed = derive_seed(config.seed, index);
  std::mt19937_64 engine(trial_seed);
  const int dimension = 2 + static_cast<int>(engine() % static_cast<std::uint64_t>(
                                                 std::max(1, config.dim_max - 1)));
  const HamiltonianSystem system = spectral_decompose(random_hermitian(engine, dimension));
  const QuantumState state = random_state(engine, dimension);

  TrialOutcome outcome;
  outcome.dimension = dimension;
  const EnergyStats stats = energy_stats(state, system);
  const OverlapModel model(state, system);
  const double t_max =
      config.t_max_override > 0 ? config.t_max_override : default_t_max(system);

  for (long long k = 1; k <= config.samples; ++k) {
    const double t = t_max * static_cast<double>(k) / static_cast<double>(config.samples);
    const double theta = model.at(t).theta;
    const BoundReport report = bound_report(stats, theta, bc_bound(theta).value, t);
    const std::pair<const char*, double> entries[] = {
        {"glm_beta", report.glm_beta},
        {"mean_min_e", report.mean_min_e},
        {"max_mean_e", report.max_mean_e},
        {"max_min", report.max_min},
        {"delta_e_variant", report.delta_e_variant},
        {"bc", report.bc}};
    for (const auto& [label, bound] : entries) {
      if (t < bound - config.tolerance * (1.0 + t)) {
        outcome.violations.push_back(
            Violation{trial_seed, dimension, t, theta, label, bound - t});
      }
    }
    if (report.tightest.value > 0) {
      outcome.min_ratio = std::min(outcome.min_ratio, t / report.tightest.value);
    }
  }
  return outcome;
}

}  // namespace

double normal_sample(std::mt19937_64& engine) {
  // Box-Muller; u1 shifted into (0, 1] so the log stays finite.
  const double u1 = 1.0 - uniform_open(engine);
  const double u2 = uniform_open(engine);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Matrix random_hermitian(std::mt19937_64& engine, int dimension) {
  Matrix a(dimension, dimension);
  for (int i = 0; i < dimension; ++i) {
    for (int j = 0; j < dimension; ++j) {
      const double re = normal_sample(engine);
      const double im = normal_sample(engine);
      a(i, j) = Complex(re, im);
    }
  }
  return 0.5 * (a + a.adjoint()).eval();
}

QuantumState random_state(std::mt19937_64& engine, int dimension) {
  Vector amps(dimension);
  for (int i = 0; i < dimension; ++i) {
    const double re = normal_sample(engine);
    const double im = normal_sample(engine);
    amps(i) = Complex(re, im);
  }
  return QuantumState::normalized(amps);
}

std::uint64_t derive_seed(std::uint64_t seed, long long trial_index) {
  return mix64(seed ^ mix64(static_cast<std::uint64_t>(trial_index) + 1));
}

int worker_count() {
  if (const char* env = std::getenv("QSL_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return static_cast<int>(parsed);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(long long count, const std::function<void(long long)>& body) {
  const int workers = static_cast<int>(std::min<long long>(worker_count(), count));
  if (workers <= 1) {
    for (long long i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  const long long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long long begin = w * chunk;
    const long long end = std::min(count, begin + chunk);
    pool.emplace_back([&, begin, end] {
      try {
        for (long long i = begin; i < end; ++i) {
          body(i);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> guard(failure_lock);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& thread : pool) {
    thread.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

VerificationReport verify_random(const RunConfig& config) {
  if (config.trials < 0 || config.dim_max < 2 || config.samples < 1 ||
      !(config.tolerance > 0)) {
    throw OutOfRange("verification config requires trials >= 0, dim_max >= 2, "
                     "samples >= 1, tolerance > 0");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials,
               [&](long long i) { outcomes[static_cast<std::size_t>(i)] = run_trial(config, i); });

  VerificationReport report;
  report.trials = config.trials;
  report.samples_per_trial = config.samples;
  report.worst_saturation = std::numeric_limits<double>::infinity();
  std::set<int> dims;
  for (const TrialOutcome& outcome : outcomes) {
    dims.insert(outcome.dimension);
    report.worst_saturation = std::min(report.worst_saturation, outcome.min_ratio);
    report.violations.insert(report.violations.end(), outcome.violations.begin(),
                             outcome.violations.end());
  }
  report.dimensions_tested.assign(dims.begin(), dims.end());
  report.elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

long long emit_curves(long long points, const std::string& output_path) {
  if (points < 2) {
    throw OutOfRange("curve needs at least 2 points");
  }
  std::ofstream out(output_path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) {
    throw IoError("cannot open curve output file: " + output_path);
  }
  out << "cos_theta,theta,glm_beta_dimensionless,mean_e_dimensionless,bc_dimensionless,"
         "bc_poly\n";
  for (long long i = 0; i < points; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(points - 1);
    const double theta = std::acos(u);
    out << format_sig12(u) << ',' << format_sig12(theta) << ','
        << format_sig12(theta) << ',' << format_sig12(mean_energy_numerator(theta)) << ','
        << format_sig12(bc_bound(theta).value) << ',' << format_sig12(bc_poly(u)) << '\n';
  }
  if (!out) {
    throw IoError("failed while writing curve output file: " + output_path);
  }
  return points;
}

}  // namespace qsl
