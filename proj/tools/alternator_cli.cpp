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

// Command-line front end: alignment, compilation, simulation, verification
// and epsilon sweeps over the chain model.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alternator/compiler.hpp"
#include "alternator/error.hpp"
#include "alternator/sweep.hpp"

namespace {

using namespace alternator;

enum ExitCode { kOk = 0, kUsage = 1, kSolver = 2, kBudget = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInput, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kInput, "write failed for '" + path + "'");
}

// Four decimals separated by whitespace or commas; '#' starts a comment.
FrequencySet read_frequencies(const std::string& path) {
  std::string text = read_file(path);
  std::string cleaned;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (!comment) cleaned += ch == ',' ? ' ' : ch;
  }
  std::istringstream in(cleaned);
  std::array<double, 4> values{};
  for (double& v : values) {
    if (!(in >> v)) throw Error(ErrorCode::kInput, "config needs four frequencies");
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::kInput, "config has trailing text '" + extra + "'");
  FrequencySet freqs = FrequencySet::from_array(values);
  freqs.validate();
  return freqs;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoSolutionInRange:
    case ErrorCode::kSolverFailure:
      return kSolver;
    case ErrorCode::kBudgetTooTight:
      return kBudget;
    default:
      return kUsage;
  }
}

struct Globals {
  std::string config_path;
  std::uint64_t seed = 0;

  FrequencySet frequencies() const {
    return config_path.empty() ? FrequencySet{} : read_frequencies(config_path);
  }
};

struct AlignArgs {
  std::vector<double> target;
  double eps = 0.0;
  std::string solver = "lattice";
  double t_max = 1e6;
  double dt = 1e-3;
};

int run_align(const Globals& g, const AlignArgs& a) {
  const FrequencySet freqs = g.frequencies();
  const PhaseTarget target =
      make_target({a.target[0], a.target[1], a.target[2], a.target[3]}, a.eps);
  const AlignmentResult r = solver_from_string(a.solver) == SolverKind::kGrid
                                ? find_time_grid(freqs, target, a.t_max, a.dt)
                                : find_time_lattice(freqs, target);
  std::cout << format_alignment(r) << '\n';
  return kOk;
}

struct CompileArgs {
  std::string circuit;
  double eps = 0.0;
  std::string out;
  bool verify = false;
  int qubits_override = 0;
  std::string solver = "lattice";
  std::string strategy = "combined";
  std::string mode = "auto";
  bool synthesize_hadamard = false;
};

BroadcastCircuit load_circuit(const std::string& path, int qubits_override) {
  BroadcastCircuit circuit = parse_circuit(read_file(path));
  if (qubits_override != 0) circuit.n_qubits = qubits_override;
  if (circuit.n_qubits == 0) {
    throw Error(ErrorCode::kInput,
                "circuit declares no qubit count; use --qubits-override");
  }
  return circuit;
}

int run_compile(const Globals& g, const CompileArgs& a) {
  const BroadcastCircuit circuit = load_circuit(a.circuit, a.qubits_override);
  const ChainConfig config = make_chain(circuit.n_qubits, g.frequencies());
  CompileOptions options;
  options.synthesis.solver = solver_from_string(a.solver);
  options.synthesis.strategy = strategy_from_string(a.strategy);
  options.synthesize_hadamard = a.synthesize_hadamard;
  CompilationReport report = compile(circuit, config, a.eps, options);
  if (!a.out.empty()) write_file(a.out, emit_schedule(report.schedule));
  if (a.verify) verify(report, circuit, config, verify_mode_from_string(a.mode), g.seed);
  std::cout << format_report(report);
  return kOk;
}

struct SimulateArgs {
  std::string schedule;
  int qubits = 0;
  std::string init = "uniform";
  bool probs = false;
  bool dump_state = false;
};

int run_simulate(const Globals& g, const SimulateArgs& a) {
  const PulseSchedule schedule = parse_schedule(read_file(a.schedule));
  const ChainConfig config = make_chain(a.qubits, g.frequencies());
  StateVector state = a.init == "zero" ? init_basis_index(a.qubits, 0)
                                       : init_uniform(a.qubits);
  state = apply_schedule(std::move(state), config, schedule);
  if (a.probs) {
    for (double p : probabilities(state)) std::cout << format_double(p) << '\n';
  } else {
    for (const Complex& z : state.amplitudes()) {
      std::cout << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
    }
  }
  return kOk;
}

struct VerifyArgs {
  std::string circuit;
  std::string schedule;
  std::string mode = "auto";
  int qubits_override = 0;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  const BroadcastCircuit circuit = load_circuit(a.circuit, a.qubits_override);
  if (circuit.has_boundary_actions()) {
    throw Error(ErrorCode::kInput,
                "schedule files carry no boundary actions; use compile --verify");
  }
  const ChainConfig config = make_chain(circuit.n_qubits, g.frequencies());
  CompilationReport report;
  report.schedule = parse_schedule(read_file(a.schedule));
  report.plan.emplace_back(report.schedule);
  report.pulse_count = report.schedule.size();
  const double fidelity =
      verify(report, circuit, config, verify_mode_from_string(a.mode), g.seed);
  std::cout << "fidelity=" << format_double(fidelity) << '\n';
  return kOk;
}

struct SweepArgs {
  std::vector<double> eps_list;
  std::string targets = "random:20:0";
  std::string solver = "lattice";
  std::string csv;
  double t_max = 1e6;
  double dt = 0.0;
  bool timing = false;
};

int run_sweep_cmd(const Globals& g, const SweepArgs& a) {
  SweepOptions options;
  options.eps_list = a.eps_list;
  options.targets = parse_target_spec(a.targets);
  options.solver = solver_from_string(a.solver);
  options.t_max = a.t_max;
  if (a.dt > 0.0) options.dt = a.dt;
  options.timing = a.timing;
  const auto rows = run_sweep(g.frequencies(), options);
  const std::string csv = sweep_csv(rows);
  if (a.csv.empty()) {
    std::cout << csv;
  } else {
    write_file(a.csv, csv);
  }
  std::cout << format_summary(summarize(rows));
  return kOk;
}

struct DemoArgs {
  int qubits = 6;
  double eps = 0.05;
  std::string out;
};

int run_demo_cluster(const Globals& g, const DemoArgs& a) {
  const BroadcastCircuit circuit = cluster_circuit(a.qubits);
  const ChainConfig config = make_chain(a.qubits, g.frequencies());
  CompilationReport report = compile(circuit, config, a.eps);
  if (!a.out.empty()) write_file(a.out, emit_schedule(report.schedule));
  const StateVector compiled =
      run_plan(report.plan, config, initial_state(circuit), g.seed);
  report.measured_fidelity = state_fidelity(compiled, cluster_state(a.qubits));
  std::cout << format_report(report);
  std::cout << "cluster_fidelity=" << format_double(*report.measured_fidelity) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-level compiler for a globally driven spin chain", "alternator"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "File with four coupling frequencies");
  app.add_option("--seed", g.seed, "Seed for boundary measurements");

  AlignArgs align;
  auto* align_cmd = app.add_subcommand("align", "Find an evolution time matching four phases");
  align_cmd->add_option("--target", align.target, "Four phases, comma separated")
      ->required()
      ->delimiter(',')
      ->expected(4);
  align_cmd->add_option("--eps", align.eps, "Accuracy; residuals stay below eps/4")->required();
  align_cmd->add_option("--solver", align.solver)->check(CLI::IsMember({"grid", "lattice"}));
  align_cmd->add_option("--t-max", align.t_max, "Grid search horizon");
  align_cmd->add_option("--dt", align.dt, "Grid step");

  CompileArgs comp;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a circuit file to pulses");
  compile_cmd->add_option("circuit", comp.circuit)->required();
  compile_cmd->add_option("--eps", comp.eps, "Total error budget in (0, 1)")->required();
  compile_cmd->add_option("--out", comp.out, "Schedule output file");
  compile_cmd->add_flag("--verify", comp.verify, "Verify against the ideal circuit");
  compile_cmd->add_option("--qubits-override", comp.qubits_override);
  compile_cmd->add_option("--solver", comp.solver)->check(CLI::IsMember({"grid", "lattice"}));
  compile_cmd->add_option("--strategy", comp.strategy)
      ->check(CLI::IsMember({"combined", "three-factor"}));
  compile_cmd->add_option("--mode", comp.mode)->check(CLI::IsMember({"auto", "unitary", "state"}));
  compile_cmd->add_flag("--synthesize-hadamard", comp.synthesize_hadamard);

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a schedule on the statevector simulator");
  simulate_cmd->add_option("schedule", sim.schedule)->required();
  simulate_cmd->add_option("--qubits", sim.qubits)->required();
  simulate_cmd->add_option("--init", sim.init)->check(CLI::IsMember({"uniform", "zero"}));
  auto* probs = simulate_cmd->add_flag("--probs", sim.probs, "Print probabilities");
  auto* dump = simulate_cmd->add_flag("--dump-state", sim.dump_state, "Print amplitudes");
  probs->excludes(dump);

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a schedule against a circuit");
  verify_cmd->add_option("circuit", ver.circuit)->required();
  verify_cmd->add_option("schedule", ver.schedule)->required();
  verify_cmd->add_option("--mode", ver.mode)->check(CLI::IsMember({"auto", "unitary", "state"}));
  verify_cmd->add_option("--qubits-override", ver.qubits_override);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Alignment time against accuracy");
  sweep_cmd->add_option("--eps-list", sweep.eps_list)->required()->delimiter(',');
  sweep_cmd->add_option("--targets", sweep.targets, "random:<count>:<seed>");
  sweep_cmd->add_option("--solver", sweep.solver)->check(CLI::IsMember({"grid", "lattice"}));
  sweep_cmd->add_option("--csv", sweep.csv, "CSV output file");
  sweep_cmd->add_option("--t-max", sweep.t_max);
  sweep_cmd->add_option("--dt", sweep.dt);
  sweep_cmd->add_flag("--timing", sweep.timing, "Record wall-clock seconds");

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("demo", "Worked examples");
  demo_cmd->require_subcommand(1);
  auto* cluster_cmd = demo_cmd->add_subcommand("cluster", "Compile and check a 1-D cluster state");
  cluster_cmd->add_option("--qubits", demo.qubits);
  cluster_cmd->add_option("--eps", demo.eps);
  cluster_cmd->add_option("--out", demo.out, "Schedule output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*align_cmd) return run_align(g, align);
    if (*compile_cmd) return run_compile(g, comp);
    if (*simulate_cmd) return run_simulate(g, sim);
    if (*verify_cmd) return run_verify(g, ver);
    if (*sweep_cmd) return run_sweep_cmd(g, sweep);
    if (*cluster_cmd) return run_demo_cluster(g, demo);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
