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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alternator/gate_synthesis.hpp"

namespace alternator {

enum class InitialState { kUniform, kZero };

struct MeasureBoundary {
  friend bool operator==(const MeasureBoundary&, const MeasureBoundary&) = default;
};

struct PrepareBoundary {
  int bit = 0;
  friend bool operator==(const PrepareBoundary&, const PrepareBoundary&) = default;
};

using CircuitElement = std::variant<LayerGate, MeasureBoundary, PrepareBoundary>;

struct BroadcastCircuit {
  int n_qubits = 0;  // 0 when the file declares no size
  InitialState initial_state = InitialState::kUniform;
  std::vector<CircuitElement> elements;

  bool has_boundary_actions() const;
  std::size_t layer_count() const;
};

/// One entry of the runtime plan: a pulse segment or a boundary action
/// that interrupts the pulse stream.
using ExecutionStep = std::variant<PulseSchedule, MeasureBoundary, PrepareBoundary>;

struct CompileOptions {
  SynthesisOptions synthesis;
  /// Lower Hadamard layers to X/Y/Z pulses instead of native HAD pulses.
  bool synthesize_hadamard = false;
};

/// Smallest per-pulse budget the solvers are asked to meet.
inline constexpr double kPerPulseFloor = 1e-4;

struct CompilationReport {
  PulseSchedule schedule;
  std::vector<ExecutionStep> plan;
  std::size_t pulse_count = 0;
  int aligned_pulses = 0;
  double total_evolution_time = 0.0;
  std::vector<AlignmentResult> alignments;
  double per_pulse_epsilon = 0.0;
  double predicted_error = 0.0;
  std::optional<double> measured_fidelity;
  double eps_total = 0.0;
};

/// Lowers every layer in order. The budget is split evenly over all aligned
/// pulses of the circuit. Solver failures are rethrown as `LayerError` with
/// the failing element index; a per-pulse budget below `kPerPulseFloor`
/// throws `Error(kBudgetTooTight)`.
CompilationReport compile(const BroadcastCircuit& circuit,
                          const ChainConfig& config, double eps_total,
                          const CompileOptions& options = {});

/// [Z:t1, HAD, Z:t2, HAD, ...]; exact, no alignment.
PulseSchedule compile_iqp(const std::vector<double>& times,
                          const ChainConfig& config);

enum class VerifyMode { kAuto, kUnitary, kState };

const char* to_string(VerifyMode mode);
VerifyMode verify_mode_from_string(const std::string& name);

/// Unitary mode: 1 - unitary_distance(schedule, ideal) for n <= 10 and no
/// boundary actions. State mode: fidelity of the final states, with boundary
/// actions sharing seeds between the two runs. Auto picks unitary mode when
/// it applies. The result is also stored in the report.
double verify(CompilationReport& report, const BroadcastCircuit& circuit,
              const ChainConfig& config, VerifyMode mode = VerifyMode::kAuto,
              std::uint64_t seed = 0);

StateVector initial_state(const BroadcastCircuit& circuit);

/// Runs the execution plan. Boundary action k uses seed + k.
StateVector run_plan(const std::vector<ExecutionStep>& plan,
                     const ChainConfig& config, StateVector state,
                     std::uint64_t seed);

/// Ideal evolution of the circuit with exact gate kernels.
StateVector run_ideal(const BroadcastCircuit& circuit,
                      const ChainConfig& config, StateVector state,
                      std::uint64_t seed);

DenseMatrix ideal_unitary(const BroadcastCircuit& circuit,
                          const ChainConfig& config);

/// Line-oriented circuit format; throws `ParseError` with line and column.
BroadcastCircuit parse_circuit(const std::string& text);

/// Flat key=value text block.
std::string format_report(const CompilationReport& report);

/// H on every site, then CZ on every AB pair and every BA pair.
BroadcastCircuit cluster_circuit(int n_qubits);

/// The 1-D cluster state built directly from |0...0>.
StateVector cluster_state(int n_qubits);

}  // namespace alternator
