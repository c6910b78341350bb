#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsl/bc.hpp"
#include "qsl/bounds.hpp"
#include "qsl/cases.hpp"
#include "qsl/core.hpp"
#include "qsl/evolution.hpp"
#include "qsl/harness.hpp"
#include "qsl/io.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_qsl, m) {
  m.doc() = "quantum speed limit toolkit: minimal evolution times to a target angle";

  py::class_<qsl::QuantumState>(m, "QuantumState")
      .def(py::init<qsl::Vector>(), py::arg("amplitudes"))
      .def_static("normalized", &qsl::QuantumState::normalized, py::arg("amplitudes"))
      .def_static("basis", &qsl::QuantumState::basis, py::arg("dimension"), py::arg("index"))
      .def_property_readonly("amplitudes", &qsl::QuantumState::amplitudes)
      .def_property_readonly("dimension", &qsl::QuantumState::dimension);

  py::class_<qsl::HamiltonianSystem>(m, "HamiltonianSystem")
      .def_readonly("matrix", &qsl::HamiltonianSystem::matrix)
      .def_readonly("eigenvalues", &qsl::HamiltonianSystem::eigenvalues)
      .def_readonly("eigenvectors", &qsl::HamiltonianSystem::eigenvectors)
      .def_property_readonly("dimension", &qsl::HamiltonianSystem::dimension)
      .def("gap", &qsl::HamiltonianSystem::gap);

  py::class_<qsl::EnergyStats>(m, "EnergyStats")
      .def(py::init([](double mean, double spread, double e_min, double e_max) {
             return qsl::EnergyStats{mean, spread, e_min, e_max, 0.5 * (e_max - e_min)};
           }),
           py::arg("mean"), py::arg("spread"), py::arg("e_min"), py::arg("e_max"))
      .def_readonly("mean", &qsl::EnergyStats::mean)
      .def_readonly("spread", &qsl::EnergyStats::spread)
      .def_readonly("e_min", &qsl::EnergyStats::e_min)
      .def_readonly("e_max", &qsl::EnergyStats::e_max)
      .def_readonly("half_width", &qsl::EnergyStats::half_width);

  py::class_<qsl::Angle>(m, "Angle").def_readonly("theta", &qsl::Angle::theta);

  py::class_<qsl::OverlapSample>(m, "OverlapSample")
      .def_readonly("time", &qsl::OverlapSample::time)
      .def_readonly("s_real", &qsl::OverlapSample::s_real)
      .def_readonly("s_imag", &qsl::OverlapSample::s_imag)
      .def_readonly("theta", &qsl::OverlapSample::theta)
      .def_readonly("phase", &qsl::OverlapSample::phase);

  py::class_<qsl::MeanEnergyFamily>(m, "MeanEnergyFamily")
      .def_readonly("mean_min_e", &qsl::MeanEnergyFamily::mean_min_e)
      .def_readonly("max_mean_e", &qsl::MeanEnergyFamily::max_mean_e)
      .def_readonly("max_min", &qsl::MeanEnergyFamily::max_min)
      .def_readonly("delta_e_variant", &qsl::MeanEnergyFamily::delta_e_variant);

  py::class_<qsl::TightestBound>(m, "TightestBound")
      .def_readonly("label", &qsl::TightestBound::label)
      .def_readonly("value", &qsl::TightestBound::value);

  py::class_<qsl::BoundReport>(m, "BoundReport")
      .def_readonly("theta", &qsl::BoundReport::theta)
      .def_readonly("glm_beta", &qsl::BoundReport::glm_beta)
      .def_readonly("mean_min_e", &qsl::BoundReport::mean_min_e)
      .def_readonly("max_mean_e", &qsl::BoundReport::max_mean_e)
      .def_readonly("max_min", &qsl::BoundReport::max_min)
      .def_readonly("delta_e_variant", &qsl::BoundReport::delta_e_variant)
      .def_readonly("bc", &qsl::BoundReport::bc)
      .def_readonly("tightest", &qsl::BoundReport::tightest)
      .def_readonly("saturation_ratio", &qsl::BoundReport::saturation_ratio)
      .def_readonly("frozen", &qsl::BoundReport::frozen);

  py::class_<qsl::TrigTriple>(m, "TrigTriple")
      .def_readonly("a", &qsl::TrigTriple::a)
      .def_readonly("b", &qsl::TrigTriple::b)
      .def_readonly("c", &qsl::TrigTriple::c)
      .def_readonly("tangency_point", &qsl::TrigTriple::tangency_point)
      .def_readonly("certified", &qsl::TrigTriple::certified)
      .def_readonly("min_margin", &qsl::TrigTriple::min_margin);

  py::class_<qsl::BcResult>(m, "BcResult")
      .def_readonly("theta", &qsl::BcResult::theta)
      .def_readonly("value", &qsl::BcResult::value)
      .def_readonly("witness", &qsl::BcResult::witness);

  py::class_<qsl::CaseReport>(m, "CaseReport")
      .def_readonly("name", &qsl::CaseReport::name)
      .def_readonly("theta", &qsl::CaseReport::theta)
      .def_readonly("passage_time", &qsl::CaseReport::passage_time)
      .def_readonly("spread_time_product", &qsl::CaseReport::spread_time_product)
      .def_readonly("bound_values", &qsl::CaseReport::bound_values)
      .def_readonly("saturation_ratio", &qsl::CaseReport::saturation_ratio)
      .def_readonly("notes", &qsl::CaseReport::notes);

  py::class_<qsl::GroverBudget>(m, "GroverBudget")
      .def_readonly("n", &qsl::GroverBudget::n)
      .def_readonly("iteration_angle", &qsl::GroverBudget::iteration_angle)
      .def_readonly("iteration_count", &qsl::GroverBudget::iteration_count)
      .def_readonly("per_iteration_min_time", &qsl::GroverBudget::per_iteration_min_time)
      .def_readonly("total_min_time", &qsl::GroverBudget::total_min_time)
      .def_readonly("iterations_to_target", &qsl::GroverBudget::iterations_to_target)
      .def_readonly("exact_per_iteration_min_time",
                    &qsl::GroverBudget::exact_per_iteration_min_time)
      .def_readonly("exact_total_min_time", &qsl::GroverBudget::exact_total_min_time);

  py::enum_<qsl::CnotVariant>(m, "CnotVariant")
      .value("A", qsl::CnotVariant::A)
      .value("B", qsl::CnotVariant::B);

  py::class_<qsl::RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("seed", &qsl::RunConfig::seed)
      .def_readwrite("trials", &qsl::RunConfig::trials)
      .def_readwrite("dim_max", &qsl::RunConfig::dim_max)
      .def_readwrite("samples", &qsl::RunConfig::samples)
      .def_readwrite("t_max_override", &qsl::RunConfig::t_max_override)
      .def_readwrite("tolerance", &qsl::RunConfig::tolerance);

  py::class_<qsl::Violation>(m, "Violation")
      .def_readonly("seed", &qsl::Violation::seed)
      .def_readonly("dimension", &qsl::Violation::dimension)
      .def_readonly("time", &qsl::Violation::time)
      .def_readonly("theta", &qsl::Violation::theta)
      .def_readonly("bound_label", &qsl::Violation::bound_label)
      .def_readonly("deficit", &qsl::Violation::deficit);

  py::class_<qsl::VerificationReport>(m, "VerificationReport")
      .def_readonly("trials", &qsl::VerificationReport::trials)
      .def_readonly("dimensions_tested", &qsl::VerificationReport::dimensions_tested)
      .def_readonly("samples_per_trial", &qsl::VerificationReport::samples_per_trial)
      .def_readonly("violations", &qsl::VerificationReport::violations)
      .def_readonly("worst_saturation", &qsl::VerificationReport::worst_saturation)
      .def_readonly("elapsed", &qsl::VerificationReport::elapsed);

  m.def("spectral_decompose", &qsl::spectral_decompose, py::arg("hamiltonian"));
  m.def("populations", &qsl::populations, py::arg("state"), py::arg("system"));
  m.def("energy_stats", &qsl::energy_stats, py::arg("state"), py::arg("system"));
  m.def("angle", &qsl::angle, py::arg("a"), py::arg("b"));
  m.def("evolve", &qsl::evolve, py::arg("system"), py::arg("state"), py::arg("time"));
  m.def("overlap", &qsl::overlap, py::arg("system"), py::arg("state"), py::arg("time"));
  m.def("default_t_max", &qsl::default_t_max, py::arg("system"));
  m.def("first_passage", &qsl::first_passage, py::arg("system"), py::arg("state"),
        py::arg("target_theta"), py::arg("t_max") = 0.0);
  m.def("mean_energy_numerator", &qsl::mean_energy_numerator, py::arg("theta"));
  m.def("glm_beta_bound", &qsl::glm_beta_bound, py::arg("spread"), py::arg("theta"));
  m.def("mean_energy_family", &qsl::mean_energy_family, py::arg("stats"), py::arg("theta"));
  m.def("bound_report", &qsl::bound_report, py::arg("stats"), py::arg("theta"),
        py::arg("bc_value"), py::arg("actual_time") = std::nullopt);
  m.def("triple_from_tangency", &qsl::triple_from_tangency, py::arg("x_star"), py::arg("a"));
  m.def("certify", &qsl::certify, py::arg("triple"), py::arg("tolerance") = 1e-9);
  m.def("bc_bound", &qsl::bc_bound, py::arg("theta"));
  m.def("bc_poly", &qsl::bc_poly, py::arg("cos_theta"));
  m.def("hadamard_case", &qsl::hadamard_case, py::arg("epsilon"), py::arg("delta"));
  m.def("cnot_case", &qsl::cnot_case, py::arg("epsilon"), py::arg("variant"),
        py::arg("pulse_delta") = 0.0);
  m.def("grover_case", &qsl::grover_case, py::arg("n"), py::arg("spread"));
  m.def("cnot_unitary", &qsl::cnot_unitary, py::arg("epsilon"), py::arg("variant"),
        py::arg("pulse_delta") = 0.0);
  m.def("cnot_gate", &qsl::cnot_gate);
  m.def("phase_distance", &qsl::phase_distance, py::arg("u"), py::arg("target"));
  m.def("verify_random", &qsl::verify_random, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("emit_curves", &qsl::emit_curves, py::arg("points"), py::arg("output_path"),
        py::call_guard<py::gil_scoped_release>());
  m.def("load_system_file", &qsl::load_system_file, py::arg("path"));
  m.def("serialize_bound_report", &qsl::serialize_bound_report, py::arg("report"),
        py::arg("time_scale") = 1.0);
  m.def("serialize_case_report", &qsl::serialize_case_report, py::arg("report"),
        py::arg("time_scale") = 1.0);
  m.def("serialize_grover_budget", &qsl::serialize_grover_budget, py::arg("budget"),
        py::arg("time_scale") = 1.0);
  m.def("serialize_verification_report", &qsl::serialize_verification_report,
        py::arg("report"));

  py::class_<qsl::LoadedSystem>(m, "LoadedSystem")
      .def_readonly("system", &qsl::LoadedSystem::system)
      .def_readonly("state", &qsl::LoadedSystem::state);
}
