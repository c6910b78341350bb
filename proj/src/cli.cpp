#include "qsl/cli.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "qsl/bc.hpp"
#include "qsl/bounds.hpp"
#include "qsl/cases.hpp"
#include "qsl/evolution.hpp"
#include "qsl/format.hpp"
#include "qsl/harness.hpp"
#include "qsl/io.hpp"

namespace qsl {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double unit_scale(const std::string& units) {
  return units == "h" ? 1.0 / (2.0 * kPi) : 1.0;
}

std::string ratio_cell(double time, double bound) {
  return format_sig12(bound > 0 ? time / bound : std::numeric_limits<double>::infinity());
}

struct BoundsArgs {
  double theta = 0;
  std::string system_path;
  double mean = 0, spread = 0, emin = 0, emax = 0;
  bool has_mean = false, has_spread = false, has_emin = false, has_emax = false;
  std::string units = "hbar";
};

struct EvolveArgs {
  std::string system_path;
  double t_max = 0;
  long long samples = 100;
  std::string out_path;
  std::string units = "hbar";
};

int run_bounds(const BoundsArgs& args, std::ostream& out) {
  EnergyStats stats;
  if (!args.system_path.empty()) {
    const LoadedSystem loaded = load_system_file(args.system_path);
    stats = energy_stats(loaded.state, loaded.system);
  } else {
    if (!(args.has_mean && args.has_spread && args.has_emin && args.has_emax)) {
      throw OutOfRange(
          "bounds needs either --system or all of --mean --spread --emin --emax");
    }
    if (args.spread < 0 || args.emax < args.emin || args.mean < args.emin ||
        args.mean > args.emax) {
      throw OutOfRange("inconsistent energy statistics");
    }
    stats = EnergyStats{args.mean, args.spread, args.emin, args.emax,
                        0.5 * (args.emax - args.emin)};
  }
  const BoundReport report = bound_report(stats, args.theta, bc_bound(args.theta).value);
  out << serialize_bound_report(report, unit_scale(args.units));
  return 0;
}

int run_evolve(const EvolveArgs& args, std::ostream& out) {
  const LoadedSystem loaded = load_system_file(args.system_path);
  const EnergyStats stats = energy_stats(loaded.state, loaded.system);
  const OverlapModel model(loaded.state, loaded.system);
  const double t_max = args.t_max > 0 ? args.t_max : default_t_max(loaded.system);
  if (args.samples < 1) {
    throw OutOfRange("evolve needs at least 1 sample");
  }

  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open trajectory output file: " + args.out_path);
  }
  const double scale = unit_scale(args.units);
  file << "time,s_real,s_imag,theta,ratio_glm_beta,ratio_mean_min_e,ratio_max_mean_e,"
          "ratio_max_min,ratio_delta_e_variant,ratio_bc\n";
  for (long long k = 1; k <= args.samples; ++k) {
    const double t = t_max * static_cast<double>(k) / static_cast<double>(args.samples);
    const OverlapSample sample = model.at(t);
    const BoundReport report =
        bound_report(stats, sample.theta, bc_bound(sample.theta).value, t);
    file << format_sig12(t * scale) << ',' << format_sig12(sample.s_real) << ','
         << format_sig12(sample.s_imag) << ',' << format_sig12(sample.theta) << ','
         << ratio_cell(t, report.glm_beta) << ',' << ratio_cell(t, report.mean_min_e) << ','
         << ratio_cell(t, report.max_mean_e) << ',' << ratio_cell(t, report.max_min) << ','
         << ratio_cell(t, report.delta_e_variant) << ',' << ratio_cell(t, report.bc) << '\n';
  }
  if (!file) {
    throw IoError("failed while writing trajectory output file: " + args.out_path);
  }
  out << "rows = " << args.samples << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"quantum speed limit toolkit: minimal evolution times to a target angle"};
  app.require_subcommand(1);

  BoundsArgs bounds_args;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "evaluate every bound at one angle");
  bounds_cmd->add_option("--theta", bounds_args.theta, "target angle, radians")->required();
  CLI::Option* system_opt =
      bounds_cmd->add_option("--system", bounds_args.system_path, "system file (JSON)");
  CLI::Option* mean_opt = bounds_cmd->add_option("--mean", bounds_args.mean, "energy mean");
  CLI::Option* spread_opt =
      bounds_cmd->add_option("--spread", bounds_args.spread, "energy spread");
  CLI::Option* emin_opt = bounds_cmd->add_option("--emin", bounds_args.emin, "lowest level");
  CLI::Option* emax_opt = bounds_cmd->add_option("--emax", bounds_args.emax, "highest level");
  for (CLI::Option* opt : {mean_opt, spread_opt, emin_opt, emax_opt}) {
    system_opt->excludes(opt);
  }
  bounds_cmd->add_option("--units", bounds_args.units, "time display units")
      ->check(CLI::IsMember({"h", "hbar"}));

  long long curve_points = 101;
  std::string curve_out;
  CLI::App* curve_cmd = app.add_subcommand("curve", "bound-comparison curve CSV");
  curve_cmd->add_option("--points", curve_points, "cos(theta) grid size");
  curve_cmd->add_option("--out", curve_out, "output CSV path")->required();

  EvolveArgs evolve_args;
  CLI::App* evolve_cmd =
      app.add_subcommand("evolve", "trajectory trace with per-bound saturation ratios");
  evolve_cmd->add_option("--system", evolve_args.system_path, "system file (JSON)")
      ->required();
  evolve_cmd->add_option("--t-max", evolve_args.t_max, "trace horizon (0: automatic)");
  evolve_cmd->add_option("--samples", evolve_args.samples, "row count");
  evolve_cmd->add_option("--out", evolve_args.out_path, "output CSV path")->required();
  evolve_cmd->add_option("--units", evolve_args.units, "time display units")
      ->check(CLI::IsMember({"h", "hbar"}));

  CLI::App* case_cmd = app.add_subcommand("case", "worked gate and search scenarios");
  case_cmd->require_subcommand(1);
  double case_epsilon = 0, case_delta = 0, case_spread = 1, pulse_delta = 0;
  long long grover_n = 0;
  std::string cnot_variant, case_units = "hbar";
  CLI::App* hadamard_cmd = case_cmd->add_subcommand("hadamard", "equal-superposition timing");
  hadamard_cmd->add_option("--epsilon", case_epsilon, "detuning")->required();
  hadamard_cmd->add_option("--delta", case_delta, "coupling")->required();
  CLI::App* cnot_cmd = case_cmd->add_subcommand("cnot", "two-qubit gate timing");
  cnot_cmd->add_option("--epsilon", case_epsilon, "coupling strength")->required();
  cnot_cmd->add_option("--variant", cnot_variant, "realization variant")
      ->required()
      ->check(CLI::IsMember({"A", "B"}));
  cnot_cmd->add_option("--pulse-delta", pulse_delta,
                       "finite conjugation-pulse strength (variant A)");
  CLI::App* grover_cmd = case_cmd->add_subcommand("grover", "search iteration budget");
  grover_cmd->add_option("--n", grover_n, "database dimension")->required();
  grover_cmd->add_option("--spread", case_spread, "energy spread")->required();
  for (CLI::App* sub : {hadamard_cmd, cnot_cmd, grover_cmd}) {
    sub->add_option("--units", case_units, "time display units")
        ->check(CLI::IsMember({"h", "hbar"}));
  }

  RunConfig config;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "randomized bound-violation search");
  verify_cmd->add_option("--trials", config.trials, "number of random systems");
  verify_cmd->add_option("--dim-max", config.dim_max, "largest dimension");
  verify_cmd->add_option("--samples", config.samples, "time samples per system");
  verify_cmd->add_option("--seed", config.seed, "generator seed");
  verify_cmd->add_option("--t-max", config.t_max_override, "sample horizon (0: automatic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds_cmd->parsed()) {
      bounds_args.has_mean = mean_opt->count() > 0;
      bounds_args.has_spread = spread_opt->count() > 0;
      bounds_args.has_emin = emin_opt->count() > 0;
      bounds_args.has_emax = emax_opt->count() > 0;
      return run_bounds(bounds_args, out);
    }
    if (curve_cmd->parsed()) {
      const std::size_t rows = emit_curves(curve_points, curve_out);
      out << "rows = " << rows << '\n';
      return 0;
    }
    if (evolve_cmd->parsed()) {
      return run_evolve(evolve_args, out);
    }
    if (case_cmd->parsed()) {
      const double scale = unit_scale(case_units);
      if (hadamard_cmd->parsed()) {
        out << serialize_case_report(hadamard_case(case_epsilon, case_delta), scale);
      } else if (cnot_cmd->parsed()) {
        const CnotVariant variant =
            cnot_variant == "A" ? CnotVariant::A : CnotVariant::B;
        if (variant == CnotVariant::B && pulse_delta > 0) {
          throw OutOfRange("--pulse-delta applies to variant A only");
        }
        out << serialize_case_report(cnot_case(case_epsilon, variant, pulse_delta), scale);
      } else {
        out << serialize_grover_budget(grover_case(grover_n, case_spread), scale);
      }
      return 0;
    }
    // verify
    const VerificationReport report = verify_random(config);
    out << serialize_verification_report(report);
    err << "elapsed = " << format_sig12(report.elapsed) << " s\n";
    return report.violations.empty() ? 0 : 1;
  } catch (const IoError& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace qsl
