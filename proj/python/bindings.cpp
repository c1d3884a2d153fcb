// Copyright 2026 The Alternator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alternator/compiler.hpp"
#include "alternator/decompose.hpp"
#include "alternator/error.hpp"
#include "alternator/phase_align.hpp"

namespace py = pybind11;
using namespace alternator;

namespace {

py::array_t<Complex> to_numpy(const StateVector& state) {
  const auto amps = state.amplitudes();
  py::array_t<Complex> out(static_cast<py::ssize_t>(amps.size()));
  std::copy(amps.begin(), amps.end(), out.mutable_data());
  return out;
}

py::dict alignment_dict(const AlignmentResult& r) {
  py::dict d;
  d["time"] = r.time;
  d["residuals"] = r.residuals;
  d["solver"] = std::string(to_string(r.solver));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pulse-level compiler and simulator for a globally driven spin chain";

  static py::exception<Error> error_type(m, "AlternatorError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<FrequencySet>(m, "FrequencySet")
      .def(py::init<>())
      .def(py::init([](double a, double b, double ab, double ba) {
             FrequencySet f = FrequencySet::from_array({a, b, ab, ba});
             f.validate();
             return f;
           }),
           py::arg("omega_a"), py::arg("omega_b"), py::arg("gamma_ab"), py::arg("gamma_ba"))
      .def_readonly("omega_a", &FrequencySet::omega_a)
      .def_readonly("omega_b", &FrequencySet::omega_b)
      .def_readonly("gamma_ab", &FrequencySet::gamma_ab)
      .def_readonly("gamma_ba", &FrequencySet::gamma_ba)
      .def("as_tuple", &FrequencySet::as_array);

  m.def(
      "find_time",
      [](const std::array<double, 4>& phases, double eps, const std::string& solver,
         const FrequencySet& freqs) {
        return alignment_dict(
            find_time(solver_from_string(solver), freqs, make_target(phases, eps)));
      },
      py::arg("phases"), py::arg("eps"), py::arg("solver") = "lattice",
      py::arg("freqs") = FrequencySet{});

  m.def(
      "residuals",
      [](const std::array<double, 4>& phases, double t, const FrequencySet& freqs) {
        return residuals(freqs, t, make_target(phases, 0.1));
      },
      py::arg("phases"), py::arg("t"), py::arg("freqs") = FrequencySet{});

  m.def(
      "simulate",
      [](const std::string& schedule, int n_qubits, const std::string& init,
         const FrequencySet& freqs) {
        StateVector s = init == "zero" ? init_basis_index(n_qubits, 0) : init_uniform(n_qubits);
        return to_numpy(apply_schedule(std::move(s), make_chain(n_qubits, freqs),
                                       parse_schedule(schedule)));
      },
      py::arg("schedule"), py::arg("n_qubits"), py::arg("init") = "uniform",
      py::arg("freqs") = FrequencySet{});

  m.def(
      "schedule_unitary",
      [](const std::string& schedule, int n_qubits, const FrequencySet& freqs) {
        return schedule_unitary(make_chain(n_qubits, freqs), parse_schedule(schedule));
      },
      py::arg("schedule"), py::arg("n_qubits"), py::arg("freqs") = FrequencySet{});

  m.def("unitary_distance", &unitary_distance, py::arg("u"), py::arg("v"));

  m.def(
      "canonical_decompose",
      [](const Matrix4& u) {
        const CanonicalDecomposition d = canonical_decompose(u);
        py::dict out;
        out["a1"] = d.a1;
        out["a2"] = d.a2;
        out["b1"] = d.b1;
        out["b2"] = d.b2;
        out["coefficients"] = std::array<double, 3>{d.cx, d.cy, d.cz};
        out["global_phase"] = d.global_phase;
        return out;
      },
      py::arg("u"));

  m.def(
      "compile_circuit",
      [](const std::string& text, double eps, int n_qubits, bool run_verify,
         const std::string& solver, const std::string& strategy, const FrequencySet& freqs) {
        BroadcastCircuit circuit = parse_circuit(text);
        if (n_qubits != 0) circuit.n_qubits = n_qubits;
        if (circuit.n_qubits == 0) throw Error(ErrorCode::kInput, "qubit count missing");
        const ChainConfig config = make_chain(circuit.n_qubits, freqs);
        CompileOptions options;
        options.synthesis.solver = solver_from_string(solver);
        options.synthesis.strategy = strategy_from_string(strategy);
        CompilationReport report = compile(circuit, config, eps, options);
        if (run_verify) verify(report, circuit, config);
        py::dict out;
        out["schedule"] = emit_schedule(report.schedule);
        out["report"] = format_report(report);
        out["aligned_pulses"] = report.aligned_pulses;
        out["predicted_error"] = report.predicted_error;
        out["fidelity"] = report.measured_fidelity ? py::cast(*report.measured_fidelity)
                                                   : py::none();
        return out;
      },
      py::arg("text"), py::arg("eps"), py::arg("n_qubits") = 0, py::arg("verify") = false,
      py::arg("solver") = "lattice", py::arg("strategy") = "combined",
      py::arg("freqs") = FrequencySet{});

  m.def(
      "compile_iqp",
      [](const std::vector<double>& times, int n_qubits) {
        return emit_schedule(compile_iqp(times, make_chain(n_qubits)));
      },
      py::arg("times"), py::arg("n_qubits"));

  m.def(
      "cluster_state", [](int n_qubits) { return to_numpy(cluster_state(n_qubits)); },
      py::arg("n_qubits"));
}
