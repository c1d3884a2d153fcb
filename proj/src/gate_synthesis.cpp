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

#include "alternator/gate_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "alternator/decompose.hpp"
#include "alternator/error.hpp"

namespace alternator {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroPhase = 1e-12;

bool is_zero_mod(double value, double period) {
  return std::abs(std::remainder(value, period)) < kZeroPhase;
}

bool is_identity(const ProgramOp& op) {
  if (const auto* x = std::get_if<XRotation>(&op)) {
    // exp(-iπX) = -I per site, and n is even.
    return is_zero_mod(x->tau, kPi);
  }
  const auto& r = std::get<BasisRotation>(op);
  return std::all_of(r.phases.begin(), r.phases.end(),
                     [](double phi) { return is_zero_mod(phi, kTwoPi); });
}

BasisRotation rotation(Basis basis, double a, double b, double ab, double ba) {
  return {basis, {a, b, ab, ba}};
}

std::size_t pair_slot(Parity parity) { return parity == Parity::kAB ? 2 : 3; }

// exp(-iπ/4 (XX + YY)) on every BA pair: the Y-basis pair term, then the
// Z-basis pair term inside a π/2 Y rotation of every site.
void push_partial_swap(LayerProgram& program, double sign) {
  const double q = sign * kPi / 4.0;
  program.push(rotation(Basis::kY, -kPi / 4.0, -kPi / 4.0, 0.0, q));
  program.push(rotation(Basis::kZ, 0.0, 0.0, 0.0, q));
  program.push(rotation(Basis::kY, kPi / 4.0, kPi / 4.0, 0.0, 0.0));
}

void check_unitary(const DenseMatrix& m, double tol) {
  if (!is_unitary(m, tol)) {
    throw Error(ErrorCode::kInput, "layer matrix is not unitary");
  }
}

PulseSchedule wrap_y(const PulseSchedule& inner) {
  PulseSchedule out;
  out.pulses.push_back(Pulse::x(5.0 * kPi / 4.0));
  out.append(inner);
  out.pulses.push_back(Pulse::x(3.0 * kPi / 4.0));
  return out;
}

}  // namespace

const char* to_string(Parity parity) {
  return parity == Parity::kAB ? "ab" : "ba";
}

const char* to_string(Sublattice sublattice) {
  return sublattice == Sublattice::kEven ? "even" : "odd";
}

const char* to_string(DiagonalStrategy strategy) {
  return strategy == DiagonalStrategy::kCombined ? "combined" : "three-factor";
}

DiagonalStrategy strategy_from_string(const std::string& name) {
  if (name == "combined") return DiagonalStrategy::kCombined;
  if (name == "three-factor") return DiagonalStrategy::kThreeFactor;
  throw Error(ErrorCode::kInput, "unknown strategy '" + name + "'");
}

std::array<double, 4> DiagonalLayerSpec::term_phases() const {
  std::array<double, 4> phases{phi_a, phi_b, 0.0, 0.0};
  phases[pair_slot(parity)] = phi_pair;
  return phases;
}

DiagonalLayerSpec make_diagonal_spec(Parity parity, double phi_a, double phi_b,
                                     double phi_pair, double epsilon) {
  auto fold = [](double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r >= kTwoPi ? 0.0 : r;
  };
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInput, "layer epsilon must be positive");
  }
  return {parity, fold(phi_a), fold(phi_b), fold(phi_pair), epsilon};
}

SingleQubitLayer make_single_qubit_layer(Sublattice sublattice,
                                         const Matrix2& gate, double tol) {
  check_unitary(gate, tol);
  return {sublattice, to_special_unitary(gate)};
}

TwoQubitLayer make_two_qubit_layer(Parity parity, const Matrix4& gate,
                                   double tol) {
  check_unitary(gate, tol);
  return {parity, to_special_unitary(gate)};
}

void LayerProgram::push(const ProgramOp& op) {
  if (is_identity(op)) return;
  if (!ops_.empty()) {
    ProgramOp& last = ops_.back();
    auto* lr = std::get_if<BasisRotation>(&last);
    const auto* r = std::get_if<BasisRotation>(&op);
    if (lr != nullptr && r != nullptr && lr->basis == r->basis) {
      for (std::size_t k = 0; k < 4; ++k) lr->phases[k] += r->phases[k];
      if (is_identity(last)) ops_.pop_back();
      return;
    }
    auto* lx = std::get_if<XRotation>(&last);
    const auto* x = std::get_if<XRotation>(&op);
    if (lx != nullptr && x != nullptr) {
      lx->tau += x->tau;
      if (is_identity(last)) ops_.pop_back();
      return;
    }
  }
  ops_.push_back(op);
}

void LayerProgram::append(const LayerProgram& other) {
  for (const auto& op : other.ops_) push(op);
}

int LayerProgram::aligned_count(DiagonalStrategy strategy) const {
  int count = 0;
  for (const auto& op : ops_) {
    const auto* r = std::get_if<BasisRotation>(&op);
    if (r == nullptr) continue;
    if (strategy == DiagonalStrategy::kCombined) {
      ++count;
    } else {
      for (double phi : r->phases) count += is_zero_mod(phi, kTwoPi) ? 0 : 1;
    }
  }
  return count;
}

LayerProgram LayerProgram::to_y_basis() const {
  LayerProgram out;
  for (const auto& op : ops_) {
    if (const auto* r = std::get_if<BasisRotation>(&op)) {
      BasisRotation c = *r;
      if (r->basis == Basis::kZ) {
        c.basis = Basis::kY;
      } else {
        c.basis = Basis::kZ;
        c.phases[0] = -c.phases[0];
        c.phases[1] = -c.phases[1];
      }
      out.push(c);
    } else {
      out.push(op);
    }
  }
  return out;
}

LayerProgram plan_z_diagonal(const DiagonalLayerSpec& spec) {
  LayerProgram program;
  program.push(BasisRotation{Basis::kZ, spec.term_phases()});
  return program;
}

LayerProgram plan_y_diagonal(const DiagonalLayerSpec& spec) {
  LayerProgram program;
  program.push(BasisRotation{Basis::kY, spec.term_phases()});
  return program;
}

LayerProgram plan_local_pair(const Matrix2& even, const Matrix2& odd) {
  const EulerAngles e = euler_zyz(to_special_unitary(even));
  const EulerAngles o = euler_zyz(to_special_unitary(odd));
  LayerProgram program;
  program.push(rotation(Basis::kZ, e.gamma / 2.0, o.gamma / 2.0, 0.0, 0.0));
  program.push(rotation(Basis::kY, e.beta / 2.0, o.beta / 2.0, 0.0, 0.0));
  program.push(rotation(Basis::kZ, e.alpha / 2.0, o.alpha / 2.0, 0.0, 0.0));
  return program;
}

LayerProgram plan_single_qubit(const Matrix2& gate, Sublattice sublattice) {
  const Matrix2 id = Matrix2::Identity();
  return sublattice == Sublattice::kEven ? plan_local_pair(gate, id)
                                         : plan_local_pair(id, gate);
}

LayerProgram plan_hadamard() {
  const Matrix2 h = to_special_unitary(gates::hadamard());
  return plan_local_pair(h, h);
}

LayerProgram plan_boundary_z(const ChainConfig& config, double a, double b) {
  LayerProgram program;
  if (config.n_ba_pairs() == 0) {
    program.push(rotation(Basis::kZ, a, b, 0.0, 0.0));
    return program;
  }
  // The partial swap T moves Z from each even bulk site to its odd BA
  // partner while site 0 stays put, and a π Y rotation of the odd sites
  // flips their sign. Combining
  //   R_B(b) = exp(-ib Σ_odd Z),
  //   T R_A(y) T† = exp(-iy (Z_0 + Σ_{odd bulk} Z)),
  //   Q T R_A(x) T† Q† = exp(-ix (Z_0 - Σ_{odd bulk} Z))
  // with x + y = a and x - y = b leaves only the two end sites.
  const double x = 0.5 * (a + b);
  const double y = 0.5 * (a - b);
  program.push(rotation(Basis::kZ, 0.0, b, 0.0, 0.0));
  if (!is_zero_mod(y, kTwoPi)) {
    push_partial_swap(program, -1.0);
    program.push(rotation(Basis::kZ, y, 0.0, 0.0, 0.0));
    push_partial_swap(program, 1.0);
  }
  if (!is_zero_mod(x, kTwoPi)) {
    program.push(rotation(Basis::kY, 0.0, -kPi / 2.0, 0.0, 0.0));
    push_partial_swap(program, -1.0);
    program.push(rotation(Basis::kZ, x, 0.0, 0.0, 0.0));
    push_partial_swap(program, 1.0);
    program.push(rotation(Basis::kY, 0.0, kPi / 2.0, 0.0, 0.0));
  }
  return program;
}

LayerProgram plan_boundary_y(const ChainConfig& config, double a, double b) {
  return plan_boundary_z(config, a, b).to_y_basis();
}

LayerProgram plan_boundary_rotation(const ChainConfig& config,
                                    const Matrix2& first_site,
                                    const Matrix2& last_site) {
  const EulerAngles f = euler_zyz(to_special_unitary(first_site));
  const EulerAngles l = euler_zyz(to_special_unitary(last_site));
  LayerProgram program;
  program.append(plan_boundary_z(config, f.gamma / 2.0, l.gamma / 2.0));
  program.append(plan_boundary_y(config, f.beta / 2.0, l.beta / 2.0));
  program.append(plan_boundary_z(config, f.alpha / 2.0, l.alpha / 2.0));
  return program;
}

LayerProgram plan_two_qubit(const ChainConfig& config, const Matrix4& gate,
                            Parity parity) {
  check_unitary(gate, 1e-8);
  LayerProgram program;
  if (parity == Parity::kBA && config.n_ba_pairs() == 0) return program;
  const Matrix4 u = to_special_unitary(gate);
  const std::size_t slot = pair_slot(parity);

  const Matrix4 off = u - Matrix4(u.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() < 1e-12) {
    // arg u_ab = g - (φ1 s_a + φ2 s_b + φp s_a s_b), s = ±1 for bit 0/1.
    std::array<double, 4> th{};
    for (int k = 0; k < 4; ++k) th[k] = std::arg(u(k, k));
    const double phi_first = -(th[0] + th[1] - th[2] - th[3]) / 4.0;
    const double phi_second = -(th[0] - th[1] + th[2] - th[3]) / 4.0;
    const double phi_pair = -(th[0] - th[1] - th[2] + th[3]) / 4.0;
    BasisRotation r{Basis::kZ, {}};
    r.phases[0] = parity == Parity::kAB ? phi_first : phi_second;
    r.phases[1] = parity == Parity::kAB ? phi_second : phi_first;
    r.phases[slot] = phi_pair;
    program.push(r);
    if (parity == Parity::kBA) {
      program.append(plan_boundary_z(config, -r.phases[0], -r.phases[1]));
    }
    return program;
  }

  const CanonicalDecomposition d = canonical_decompose(u);
  const bool ab = parity == Parity::kAB;
  const Matrix2& b_even = ab ? d.b1 : d.b2;
  const Matrix2& b_odd = ab ? d.b2 : d.b1;
  const Matrix2& a_even = ab ? d.a1 : d.a2;
  const Matrix2& a_odd = ab ? d.a2 : d.a1;

  program.append(plan_local_pair(b_even, b_odd));
  // The XX core is a ZZ rotation inside Ry(π/2) on every site.
  BasisRotation inverse_turn = rotation(Basis::kY, -kPi / 4.0, -kPi / 4.0, 0.0, 0.0);
  BasisRotation xx_core = rotation(Basis::kZ, 0.0, 0.0, 0.0, 0.0);
  xx_core.phases[slot] = d.cx;
  BasisRotation turn_and_yy = rotation(Basis::kY, kPi / 4.0, kPi / 4.0, 0.0, 0.0);
  turn_and_yy.phases[slot] = d.cy;
  BasisRotation zz_core = rotation(Basis::kZ, 0.0, 0.0, 0.0, 0.0);
  zz_core.phases[slot] = d.cz;
  program.push(inverse_turn);
  program.push(xx_core);
  program.push(turn_and_yy);
  program.push(zz_core);
  program.append(plan_local_pair(a_even, a_odd));

  if (parity == Parity::kBA) {
    // The local factors also reached the unpaired end sites.
    const Matrix2 first_residue = a_even * b_even;
    const Matrix2 last_residue = a_odd * b_odd;
    program.append(plan_boundary_rotation(config, first_residue.adjoint(),
                                          last_residue.adjoint()));
  }
  return program;
}

LayerProgram plan_layer(const ChainConfig& config, const LayerGate& layer) {
  return std::visit(
      [&](const auto& l) -> LayerProgram {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SingleQubitLayer>) {
          return plan_single_qubit(l.gate, l.sublattice);
        } else if constexpr (std::is_same_v<T, TwoQubitLayer>) {
          return plan_two_qubit(config, l.gate, l.parity);
        } else if constexpr (std::is_same_v<T, HadamardLayer>) {
          return plan_hadamard();
        } else if constexpr (std::is_same_v<T, ZDiagonalLayer>) {
          return plan_z_diagonal(l.spec);
        } else {
          return plan_y_diagonal(l.spec);
        }
      },
      layer);
}

double alignment_epsilon(const ChainConfig& config, double per_pulse_epsilon) {
  // A Z pulse with residuals r_k is off by at most Σ_k m_k |r_k| in operator
  // distance, m_k being the number of sites or pairs in term k.
  const auto weights = term_weights(config);
  const int total = std::accumulate(weights.begin(), weights.end(), 0);
  return std::min(4.0 * per_pulse_epsilon / total, 3.0);
}

SynthesisResult realize(const ChainConfig& config, const LayerProgram& program,
                        double per_pulse_epsilon,
                        const SynthesisOptions& options) {
  config.validate();
  if (!(per_pulse_epsilon > 0.0)) {
    throw Error(ErrorCode::kInput, "per-pulse epsilon must be positive");
  }
  const double eps = alignment_epsilon(config, per_pulse_epsilon);
  SynthesisResult result;
  result.per_pulse_epsilon = per_pulse_epsilon;

  auto align = [&](const std::array<double, 4>& phases, PulseSchedule& out) {
    const AlignmentResult a =
        find_time(options.solver, config.couplings, make_target(phases, eps));
    out.pulses.push_back(Pulse::z(a.time));
    result.alignments.push_back(a);
  };

  for (const auto& op : program.ops()) {
    if (const auto* x = std::get_if<XRotation>(&op)) {
      double tau = std::fmod(x->tau, kPi);
      if (tau < 0.0) tau += kPi;
      result.schedule.pulses.push_back(Pulse::x(tau));
      continue;
    }
    const auto& r = std::get<BasisRotation>(op);
    PulseSchedule inner;
    if (options.strategy == DiagonalStrategy::kCombined) {
      align(r.phases, inner);
    } else {
      for (std::size_t k = 0; k < 4; ++k) {
        if (is_zero_mod(r.phases[k], kTwoPi)) continue;
        std::array<double, 4> single{};
        single[k] = r.phases[k];
        align(single, inner);
      }
    }
    result.schedule.append(r.basis == Basis::kY ? wrap_y(inner) : inner);
  }
  result.aligned_pulses = static_cast<int>(result.alignments.size());
  result.predicted_error = result.aligned_pulses * per_pulse_epsilon;
  return result;
}

SynthesisResult synth_z_diag_layer(const ChainConfig& config,
                                   const DiagonalLayerSpec& spec,
                                   const SynthesisOptions& options) {
  return realize(config, plan_z_diagonal(spec), spec.epsilon, options);
}

SynthesisResult synth_y_diag_layer(const ChainConfig& config,
                                   const DiagonalLayerSpec& spec,
                                   const SynthesisOptions& options) {
  SynthesisResult result = synth_z_diag_layer(config, spec, options);
  result.schedule = wrap_y(result.schedule);
  return result;
}

SynthesisResult synth_single_qubit_layer(const ChainConfig& config,
                                         const Matrix2& gate,
                                         Sublattice sublattice, double epsilon,
                                         const SynthesisOptions& options) {
  check_unitary(gate, 1e-8);
  return realize(config, plan_single_qubit(gate, sublattice), epsilon, options);
}

SynthesisResult synth_two_qubit_layer(const ChainConfig& config,
                                      const Matrix4& gate, Parity parity,
                                      double epsilon_total,
                                      const SynthesisOptions& options) {
  const LayerProgram program = plan_two_qubit(config, gate, parity);
  const int count = program.aligned_count(options.strategy);
  return realize(config, program, epsilon_total / std::max(count, 1), options);
}

void apply_program(StateVector& state, const ChainConfig& config,
                   const LayerProgram& program) {
  const int n = state.n_qubits();
  for (const auto& op : program.ops()) {
    if (const auto* x = std::get_if<XRotation>(&op)) {
      state = apply_x_evolution(std::move(state), x->tau);
      continue;
    }
    const auto& r = std::get<BasisRotation>(op);
    if (r.basis == Basis::kZ) {
      apply_z_rotation_layer(state, config, r.phases);
    } else {
      const Matrix2 to_y = gates::rx(-kPi / 2.0);
      const Matrix2 from_y = to_y.adjoint();
      for (int q = 0; q < n; ++q) apply_single_qubit(state, q, from_y);
      apply_z_rotation_layer(state, config, r.phases);
      for (int q = 0; q < n; ++q) apply_single_qubit(state, q, to_y);
    }
  }
}

void apply_ideal_layer(StateVector& state, const ChainConfig& config,
                       const LayerGate& layer) {
  const int n = state.n_qubits();
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, SingleQubitLayer>) {
          const int start = l.sublattice == Sublattice::kEven ? 0 : 1;
          for (int q = start; q < n; q += 2) apply_single_qubit(state, q, l.gate);
        } else if constexpr (std::is_same_v<T, TwoQubitLayer>) {
          const int start = l.parity == Parity::kAB ? 0 : 1;
          for (int q = start; q + 1 < n; q += 2) {
            apply_two_qubit(state, q, q + 1, l.gate);
          }
        } else if constexpr (std::is_same_v<T, HadamardLayer>) {
          for (int q = 0; q < n; ++q) apply_single_qubit(state, q, gates::hadamard());
        } else if constexpr (std::is_same_v<T, ZDiagonalLayer>) {
          apply_z_rotation_layer(state, config, l.spec.term_phases());
        } else {
          // Rx(-π/2) takes Z to Y.
          const Matrix2 to_y = gates::rx(-kPi / 2.0);
          const Matrix2 from_y = to_y.adjoint();
          for (int q = 0; q < n; ++q) apply_single_qubit(state, q, from_y);
          apply_z_rotation_layer(state, config, l.spec.term_phases());
          for (int q = 0; q < n; ++q) apply_single_qubit(state, q, to_y);
        }
      },
      layer);
}

}  // namespace alternator
