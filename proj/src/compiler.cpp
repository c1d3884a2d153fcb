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

#include "alternator/compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "alternator/decompose.hpp"
#include "alternator/error.hpp"
#include "text_util.hpp"

namespace alternator {

namespace {

using text_util::Token;

constexpr int kMaxVerifyStateQubits = 20;

bool is_boundary_action(const CircuitElement& e) {
  return !std::holds_alternative<LayerGate>(e);
}

int resolve_qubits(const BroadcastCircuit& circuit, const ChainConfig& config) {
  if (circuit.n_qubits != 0 && circuit.n_qubits != config.n_qubits) {
    throw Error(ErrorCode::kInput,
                "circuit declares " + std::to_string(circuit.n_qubits) +
                    " qubits but the chain has " +
                    std::to_string(config.n_qubits));
  }
  return config.n_qubits;
}

bool is_solver_code(ErrorCode code) {
  return code == ErrorCode::kNoSolutionInRange ||
         code == ErrorCode::kSolverFailure;
}

StateVector apply_boundary(StateVector state, const CircuitElement& e,
                           std::uint64_t seed) {
  if (std::holds_alternative<MeasureBoundary>(e)) {
    return measure_boundary(std::move(state), seed).state;
  }
  return prepare_boundary(std::move(state), std::get<PrepareBoundary>(e).bit,
                          seed);
}

// ---------------------------------------------------------------------------
// Circuit reader.

class CircuitReader {
 public:
  explicit CircuitReader(const std::string& text) : lines_(text_util::split_lines(text)) {}

  BroadcastCircuit read() {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      line_ = static_cast<int>(i) + 1;
      tokens_ = text_util::tokenize(lines_[i]);
      if (tokens_.empty()) continue;
      statement();
    }
    return std::move(circuit_);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(line_, at.column, message);
  }

  void expect_count(std::size_t count) const {
    if (tokens_.size() > count) fail(tokens_[count], "unexpected token '" + tokens_[count].text + "'");
    if (tokens_.size() < count) {
      throw ParseError(line_, static_cast<int>(lines_[line_ - 1].size()) + 1,
                       "expected " + std::to_string(count - 1) +
                           " argument(s) after '" + tokens_[0].text + "'");
    }
  }

  double real(std::size_t k) const {
    const double v = text_util::parse_real(tokens_[k], line_);
    if (!std::isfinite(v)) fail(tokens_[k], "non-finite number");
    return v;
  }

  Parity parity(std::size_t k) const {
    if (tokens_[k].text == "ab") return Parity::kAB;
    if (tokens_[k].text == "ba") return Parity::kBA;
    fail(tokens_[k], "expected 'ab' or 'ba'");
  }

  void statement() {
    const std::string& word = tokens_[0].text;
    if (word == "qubits") {
      expect_count(2);
      if (seen_qubits_) fail(tokens_[0], "duplicate 'qubits' line");
      const long long n = text_util::parse_integer(tokens_[1], line_);
      if (n < 2 || n % 2 != 0 || n > 62) {
        fail(tokens_[1], "qubit count must be even and between 2 and 62");
      }
      circuit_.n_qubits = static_cast<int>(n);
      seen_qubits_ = true;
    } else if (word == "init") {
      expect_count(2);
      if (tokens_[1].text == "uniform") {
        circuit_.initial_state = InitialState::kUniform;
      } else if (tokens_[1].text == "zero") {
        circuit_.initial_state = InitialState::kZero;
      } else {
        fail(tokens_[1], "expected 'uniform' or 'zero'");
      }
    } else if (word == "measure") {
      expect_count(1);
      circuit_.elements.emplace_back(MeasureBoundary{});
    } else if (word == "prepare") {
      expect_count(2);
      const long long bit = text_util::parse_integer(tokens_[1], line_);
      if (bit != 0 && bit != 1) fail(tokens_[1], "bit must be 0 or 1");
      circuit_.elements.emplace_back(PrepareBoundary{static_cast<int>(bit)});
    } else if (word == "layer") {
      if (tokens_.size() < 2) fail(tokens_[0], "missing layer kind");
      circuit_.elements.emplace_back(layer());
    } else {
      fail(tokens_[0], "unknown keyword '" + word + "'");
    }
  }

  LayerGate layer() {
    const std::string& kind = tokens_[1].text;
    if (kind == "had_all") {
      expect_count(2);
      return HadamardLayer{};
    }
    if (kind == "zdiag" || kind == "ydiag") {
      expect_count(6);
      const DiagonalLayerSpec spec =
          make_diagonal_spec(parity(2), real(3), real(4), real(5), 0.1);
      if (kind == "zdiag") return ZDiagonalLayer{spec};
      return YDiagonalLayer{spec};
    }
    if (kind == "cz") {
      expect_count(3);
      return make_two_qubit_layer(parity(2), gates::cz());
    }
    if (kind == "sq") {
      expect_count(11);
      Sublattice sub = Sublattice::kEven;
      if (tokens_[2].text == "odd") {
        sub = Sublattice::kOdd;
      } else if (tokens_[2].text != "even") {
        fail(tokens_[2], "expected 'even' or 'odd'");
      }
      Matrix2 m;
      for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = Complex(real(3 + 2 * k), real(4 + 2 * k));
      if (!is_unitary(m, 1e-8)) fail(tokens_[1], "non-unitary matrix");
      return make_single_qubit_layer(sub, m);
    }
    if (kind == "tq") {
      expect_count(35);
      Matrix4 m;
      for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = Complex(real(3 + 2 * k), real(4 + 2 * k));
      if (!is_unitary(m, 1e-8)) fail(tokens_[1], "non-unitary matrix");
      return make_two_qubit_layer(parity(2), m);
    }
    fail(tokens_[1], "unknown layer kind '" + kind + "'");
  }

  std::vector<std::string> lines_;
  std::vector<Token> tokens_;
  int line_ = 0;
  bool seen_qubits_ = false;
  BroadcastCircuit circuit_;
};

}  // namespace

bool BroadcastCircuit::has_boundary_actions() const {
  return std::any_of(elements.begin(), elements.end(), is_boundary_action);
}

std::size_t BroadcastCircuit::layer_count() const {
  return static_cast<std::size_t>(std::count_if(
      elements.begin(), elements.end(),
      [](const CircuitElement& e) { return !is_boundary_action(e); }));
}

CompilationReport compile(const BroadcastCircuit& circuit,
                          const ChainConfig& config, double eps_total,
                          const CompileOptions& options) {
  config.validate();
  resolve_qubits(circuit, config);
  if (!(eps_total > 0.0 && eps_total < 1.0)) {
    throw Error(ErrorCode::kInput, "eps_total must lie in (0, 1)");
  }

  // Pass 1: plan every layer and count the alignments it needs.
  std::vector<std::optional<LayerProgram>> programs(circuit.elements.size());
  int aligned = 0;
  for (std::size_t i = 0; i < circuit.elements.size(); ++i) {
    const auto* layer = std::get_if<LayerGate>(&circuit.elements[i]);
    if (layer == nullptr) continue;
    if (std::holds_alternative<HadamardLayer>(*layer) && !options.synthesize_hadamard) {
      continue;
    }
    try {
      programs[i] = plan_layer(config, *layer);
    } catch (const Error& e) {
      throw LayerError(e.code(), static_cast<int>(i), e.what());
    }
    aligned += programs[i]->aligned_count(options.synthesis.strategy);
  }

  CompilationReport report;
  report.eps_total = eps_total;
  report.per_pulse_epsilon = aligned > 0 ? eps_total / aligned : eps_total;
  if (report.per_pulse_epsilon < kPerPulseFloor) {
    throw Error(ErrorCode::kBudgetTooTight,
                "per-pulse budget " + format_double(report.per_pulse_epsilon) +
                    " is below the floor " + format_double(kPerPulseFloor));
  }

  // Pass 2: realize with the uniform per-pulse budget.
  PulseSchedule segment;
  for (std::size_t i = 0; i < circuit.elements.size(); ++i) {
    const CircuitElement& element = circuit.elements[i];
    if (is_boundary_action(element)) {
      if (!segment.empty()) report.plan.emplace_back(std::move(segment));
      segment = PulseSchedule{};
      if (const auto* m = std::get_if<MeasureBoundary>(&element)) {
        report.plan.emplace_back(*m);
      } else {
        report.plan.emplace_back(std::get<PrepareBoundary>(element));
      }
      continue;
    }
    if (!programs[i]) {
      segment.pulses.push_back(Pulse::hadamard());
      continue;
    }
    SynthesisResult r;
    try {
      r = realize(config, *programs[i], report.per_pulse_epsilon, options.synthesis);
    } catch (const Error& e) {
      if (!is_solver_code(e.code())) throw;
      throw LayerError(e.code(), static_cast<int>(i), e.what());
    }
    segment.append(r.schedule);
    report.alignments.insert(report.alignments.end(), r.alignments.begin(),
                             r.alignments.end());
  }
  if (!segment.empty()) report.plan.emplace_back(std::move(segment));

  for (const auto& step : report.plan) {
    if (const auto* s = std::get_if<PulseSchedule>(&step)) report.schedule.append(*s);
  }
  report.pulse_count = report.schedule.size();
  for (const Pulse& p : report.schedule.pulses) report.total_evolution_time += p.duration;
  report.aligned_pulses = static_cast<int>(report.alignments.size());
  report.predicted_error = report.aligned_pulses * report.per_pulse_epsilon;
  return report;
}

PulseSchedule compile_iqp(const std::vector<double>& times,
                          const ChainConfig& config) {
  config.validate();
  PulseSchedule schedule;
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw Error(ErrorCode::kInput, "IQP times must be finite and non-negative");
    }
    schedule.pulses.push_back(Pulse::z(t));
    schedule.pulses.push_back(Pulse::hadamard());
  }
  return schedule;
}

const char* to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kAuto: return "auto";
    case VerifyMode::kUnitary: return "unitary";
    case VerifyMode::kState: return "state";
  }
  return "?";
}

VerifyMode verify_mode_from_string(const std::string& name) {
  if (name == "auto") return VerifyMode::kAuto;
  if (name == "unitary") return VerifyMode::kUnitary;
  if (name == "state") return VerifyMode::kState;
  throw Error(ErrorCode::kInput, "unknown verify mode '" + name + "'");
}

StateVector initial_state(const BroadcastCircuit& circuit) {
  return circuit.initial_state == InitialState::kUniform
             ? init_uniform(circuit.n_qubits)
             : init_basis_index(circuit.n_qubits, 0);
}

StateVector run_plan(const std::vector<ExecutionStep>& plan,
                     const ChainConfig& config, StateVector state,
                     std::uint64_t seed) {
  std::uint64_t action = 0;
  for (const auto& step : plan) {
    if (const auto* s = std::get_if<PulseSchedule>(&step)) {
      state = apply_schedule(std::move(state), config, *s);
    } else if (std::holds_alternative<MeasureBoundary>(step)) {
      state = measure_boundary(std::move(state), seed + action++).state;
    } else {
      state = prepare_boundary(std::move(state), std::get<PrepareBoundary>(step).bit,
                               seed + action++);
    }
  }
  return state;
}

StateVector run_ideal(const BroadcastCircuit& circuit,
                      const ChainConfig& config, StateVector state,
                      std::uint64_t seed) {
  std::uint64_t action = 0;
  for (const auto& element : circuit.elements) {
    if (const auto* layer = std::get_if<LayerGate>(&element)) {
      apply_ideal_layer(state, config, *layer);
    } else {
      state = apply_boundary(std::move(state), element, seed + action++);
    }
  }
  return state;
}

DenseMatrix ideal_unitary(const BroadcastCircuit& circuit,
                          const ChainConfig& config) {
  const int n = resolve_qubits(circuit, config);
  if (n > kMaxDenseQubits) {
    throw Error(ErrorCode::kSizeCap, "dense unitaries are limited to " +
                                         std::to_string(kMaxDenseQubits) + " qubits");
  }
  if (circuit.has_boundary_actions()) {
    throw Error(ErrorCode::kInput, "a circuit with boundary actions has no unitary");
  }
  return columns_of(n, [&](StateVector s) { return run_ideal(circuit, config, std::move(s), 0); });
}

double verify(CompilationReport& report, const BroadcastCircuit& circuit,
              const ChainConfig& config, VerifyMode mode, std::uint64_t seed) {
  const int n = resolve_qubits(circuit, config);
  if (mode == VerifyMode::kAuto) {
    mode = n <= kMaxDenseQubits && !circuit.has_boundary_actions()
               ? VerifyMode::kUnitary
               : VerifyMode::kState;
  }
  double fidelity = 0.0;
  if (mode == VerifyMode::kUnitary) {
    fidelity = 1.0 - unitary_distance(schedule_unitary(config, report.schedule),
                                      ideal_unitary(circuit, config));
  } else {
    if (n > kMaxVerifyStateQubits) {
      throw Error(ErrorCode::kSizeCap, "state verification is limited to " +
                                           std::to_string(kMaxVerifyStateQubits) +
                                           " qubits");
    }
    BroadcastCircuit sized = circuit;
    sized.n_qubits = n;
    const StateVector start = initial_state(sized);
    fidelity = state_fidelity(run_plan(report.plan, config, start, seed),
                              run_ideal(sized, config, start, seed));
  }
  report.measured_fidelity = fidelity;
  return fidelity;
}

BroadcastCircuit parse_circuit(const std::string& text) {
  return CircuitReader(text).read();
}

std::string format_report(const CompilationReport& report) {
  std::ostringstream out;
  out << "pulse_count=" << report.pulse_count << '\n';
  out << "aligned_pulses=" << report.aligned_pulses << '\n';
  out << "total_evolution_time=" << format_double(report.total_evolution_time) << '\n';
  out << "eps_total=" << format_double(report.eps_total) << '\n';
  out << "per_pulse_epsilon=" << format_double(report.per_pulse_epsilon) << '\n';
  out << "predicted_error=" << format_double(report.predicted_error) << '\n';
  if (report.measured_fidelity) {
    out << "measured_fidelity=" << format_double(*report.measured_fidelity) << '\n';
  }
  out << "plan=";
  for (std::size_t i = 0; i < report.plan.size(); ++i) {
    if (i > 0) out << ',';
    const auto& step = report.plan[i];
    if (const auto* s = std::get_if<PulseSchedule>(&step)) {
      out << "segment:" << s->size();
    } else if (std::holds_alternative<MeasureBoundary>(step)) {
      out << "measure";
    } else {
      out << "prepare:" << std::get<PrepareBoundary>(step).bit;
    }
  }
  out << '\n';
  for (std::size_t i = 0; i < report.alignments.size(); ++i) {
    const auto& r = report.alignments[i].residuals;
    out << "residual." << i << '=' << format_double(r[0]) << ',' << format_double(r[1])
        << ',' << format_double(r[2]) << ',' << format_double(r[3]) << '\n';
  }
  return out.str();
}

BroadcastCircuit cluster_circuit(int n_qubits) {
  BroadcastCircuit c;
  c.n_qubits = n_qubits;
  c.initial_state = InitialState::kZero;
  c.elements.emplace_back(HadamardLayer{});
  c.elements.emplace_back(make_two_qubit_layer(Parity::kAB, gates::cz()));
  c.elements.emplace_back(make_two_qubit_layer(Parity::kBA, gates::cz()));
  return c;
}

StateVector cluster_state(int n_qubits) {
  // <z|C> = 2^{-n/2} (-1)^{Σ_q z_q z_{q+1}}.
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::vector<Complex> amps(dim);
  const double norm = std::pow(2.0, -0.5 * n_qubits);
  for (std::uint64_t z = 0; z < dim; ++z) {
    const int bonds = std::popcount(z & (z >> 1));
    amps[z] = bonds % 2 == 0 ? norm : -norm;
  }
  return StateVector(n_qubits, std::move(amps));
}

}  // namespace alternator
