#include "qsl/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsl/format.hpp"

namespace qsl {

namespace {

using nlohmann::json;

Complex parse_complex_pair(const json& node, const char* what) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    throw IoError(std::string("system file: ") + what + " entries must be [re, im] pairs");
  }
  return Complex(node[0].get<double>(), node[1].get<double>());
}

Matrix parse_hamiltonian(const json& node) {
  if (!node.is_array() || node.empty()) {
    throw IoError("system file: \"hamiltonian\" must be a non-empty nested array");
  }
  const auto rows = static_cast<int>(node.size());
  Matrix matrix(rows, rows);
  for (int i = 0; i < rows; ++i) {
    const json& row = node[i];
    if (!row.is_array() || static_cast<int>(row.size()) != rows) {
      throw IoError("system file: \"hamiltonian\" rows must all have the matrix dimension");
    }
    for (int j = 0; j < rows; ++j) {
      matrix(i, j) = parse_complex_pair(row[j], "hamiltonian");
    }
  }
  return matrix;
}

Vector parse_state(const json& node) {
  if (!node.is_array() || node.empty()) {
    throw IoError("system file: \"state\" must be a non-empty array");
  }
  Vector amplitudes(static_cast<int>(node.size()));
  for (int i = 0; i < amplitudes.size(); ++i) {
    amplitudes(i) = parse_complex_pair(node[i], "state");
  }
  return amplitudes;
}

std::string ratio_or_na(const std::optional<double>& value) {
  return value ? format_sig12(*value) : std::string("n/a");
}

void append_bound_fields(std::ostream& out, const BoundReport& report, double time_scale) {
  out << "glm_beta = " << format_sig12(report.glm_beta * time_scale) << '\n'
      << "mean_min_e = " << format_sig12(report.mean_min_e * time_scale) << '\n'
      << "max_mean_e = " << format_sig12(report.max_mean_e * time_scale) << '\n'
      << "max_min = " << format_sig12(report.max_min * time_scale) << '\n'
      << "delta_e_variant = " << format_sig12(report.delta_e_variant * time_scale) << '\n'
      << "bc = " << format_sig12(report.bc * time_scale) << '\n'
      << "tightest_label = " << report.tightest.label << '\n'
      << "tightest_value = " << format_sig12(report.tightest.value * time_scale) << '\n'
      << "frozen = " << (report.frozen ? "true" : "false") << '\n';
}

}  // namespace

LoadedSystem load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open system file: " + path);
  }
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw IoError("system file is not valid JSON: " + std::string(e.what()));
  }
  if (!root.is_object() || !root.contains("hamiltonian") || !root.contains("state")) {
    throw IoError("system file must contain \"hamiltonian\" and \"state\"");
  }
  try {
    LoadedSystem loaded{spectral_decompose(parse_hamiltonian(root["hamiltonian"])),
                        QuantumState(parse_state(root["state"]))};
    if (loaded.state.dimension() != loaded.system.dimension()) {
      throw IoError("system file: state and hamiltonian dimensions differ");
    }
    return loaded;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    // Shape/physics defects in an otherwise well-formed file are file errors.
    throw IoError("system file rejected: " + std::string(e.what()));
  }
}

std::string serialize_bound_report(const BoundReport& report, double time_scale) {
  std::ostringstream out;
  out << "theta = " << format_sig12(report.theta) << '\n';
  append_bound_fields(out, report, time_scale);
  out << "saturation_ratio = " << ratio_or_na(report.saturation_ratio) << '\n';
  return out.str();
}

std::string serialize_case_report(const CaseReport& report, double time_scale) {
  std::ostringstream out;
  out << "name = " << report.name << '\n'
      << "theta = " << format_sig12(report.theta) << '\n'
      << "passage_time = " << format_sig12(report.passage_time * time_scale) << '\n'
      << "spread_time_product = " << format_sig12(report.spread_time_product * time_scale)
      << '\n';
  append_bound_fields(out, report.bound_values, time_scale);
  out << "saturation_ratio = " << format_sig12(report.saturation_ratio) << '\n'
      << "notes = " << report.notes << '\n';
  return out.str();
}

std::string serialize_grover_budget(const GroverBudget& budget, double time_scale) {
  std::ostringstream out;
  out << "n = " << budget.n << '\n'
      << "iteration_angle = " << format_sig12(budget.iteration_angle) << '\n'
      << "iteration_count = " << format_sig12(budget.iteration_count) << '\n'
      << "per_iteration_min_time = "
      << format_sig12(budget.per_iteration_min_time * time_scale) << '\n'
      << "total_min_time = " << format_sig12(budget.total_min_time * time_scale) << '\n'
      << "iterations_to_target = " << format_sig12(budget.iterations_to_target) << '\n'
      << "exact_per_iteration_min_time = "
      << format_sig12(budget.exact_per_iteration_min_time * time_scale) << '\n'
      << "exact_total_min_time = " << format_sig12(budget.exact_total_min_time * time_scale)
      << '\n';
  return out.str();
}

std::string serialize_verification_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "trials = " << report.trials << '\n';
  out << "dimensions_tested = ";
  for (std::size_t i = 0; i < report.dimensions_tested.size(); ++i) {
    out << (i ? "," : "") << report.dimensions_tested[i];
  }
  out << '\n';
  out << "samples_per_trial = " << report.samples_per_trial << '\n';
  out << "violations = " << report.violations.size() << '\n';
  for (const Violation& v : report.violations) {
    out << "violation = seed=" << v.seed << ",dimension=" << v.dimension
        << ",time=" << format_sig12(v.time) << ",theta=" << format_sig12(v.theta)
        << ",bound=" << v.bound_label << ",deficit=" << format_sig12(v.deficit) << '\n';
  }
  out << "worst_saturation = " << format_sig12(report.worst_saturation) << '\n';
  return out.str();
}

}  // namespace qsl
