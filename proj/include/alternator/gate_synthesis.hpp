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

#include <array>
#include <variant>
#include <vector>

#include "alternator/chain_model.hpp"
#include "alternator/evolution.hpp"
#include "alternator/phase_align.hpp"

namespace alternator {

enum class Parity { kAB, kBA };
enum class Sublattice { kEven, kOdd };

const char* to_string(Parity parity);
const char* to_string(Sublattice sublattice);

/// Phases of exp(-i (phi_a H_A + phi_b H_B + phi_pair H_pair)), where H_pair
/// is H_AB or H_BA depending on `parity`.
struct DiagonalLayerSpec {
  Parity parity = Parity::kAB;
  double phi_a = 0.0;
  double phi_b = 0.0;
  double phi_pair = 0.0;
  double epsilon = 0.1;

  /// Phases placed on (A, B, AB, BA).
  std::array<double, 4> term_phases() const;
};

/// Folds the three phases into [0, 2π).
DiagonalLayerSpec make_diagonal_spec(Parity parity, double phi_a, double phi_b,
                                     double phi_pair, double epsilon);

struct SingleQubitLayer {
  Sublattice sublattice = Sublattice::kEven;
  Matrix2 gate = Matrix2::Identity();
};

struct TwoQubitLayer {
  Parity parity = Parity::kAB;
  Matrix4 gate = Matrix4::Identity();
};

struct HadamardLayer {};

struct ZDiagonalLayer {
  DiagonalLayerSpec spec;
};

struct YDiagonalLayer {
  DiagonalLayerSpec spec;
};

using LayerGate = std::variant<SingleQubitLayer, TwoQubitLayer, HadamardLayer,
                               ZDiagonalLayer, YDiagonalLayer>;

/// Checked constructors: the matrix must be unitary to `tol` and is stored
/// rescaled to determinant 1.
SingleQubitLayer make_single_qubit_layer(Sublattice sublattice,
                                         const Matrix2& gate,
                                         double tol = 1e-8);
TwoQubitLayer make_two_qubit_layer(Parity parity, const Matrix4& gate,
                                   double tol = 1e-8);

// ---------------------------------------------------------------------------
// Exact intermediate form. A program is a product of diagonal rotations in
// the Z or Y basis and uniform X pulses, listed in application order.

enum class Basis { kZ, kY };

/// exp(-i Σ_k phases[k] H_k) with every Z in H_k replaced by the basis Pauli.
struct BasisRotation {
  Basis basis = Basis::kZ;
  std::array<double, 4> phases{};
};

struct XRotation {
  double tau = 0.0;
};

using ProgramOp = std::variant<BasisRotation, XRotation>;

enum class DiagonalStrategy { kCombined, kThreeFactor };

const char* to_string(DiagonalStrategy strategy);
DiagonalStrategy strategy_from_string(const std::string& name);

class LayerProgram {
 public:
  /// Appends an op, merging it with the previous one when both share a basis
  /// and dropping rotations that are the identity.
  void push(const ProgramOp& op);
  void append(const LayerProgram& other);

  const std::vector<ProgramOp>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }

  /// Number of phase alignments the program needs under `strategy`.
  int aligned_count(DiagonalStrategy strategy) const;

  /// Same program conjugated by exp(-i 3π/4 Σ X): Z rotations become Y
  /// rotations and Y rotations become Z rotations with single-site phases
  /// negated.
  LayerProgram to_y_basis() const;

 private:
  std::vector<ProgramOp> ops_;
};

LayerProgram plan_z_diagonal(const DiagonalLayerSpec& spec);
LayerProgram plan_y_diagonal(const DiagonalLayerSpec& spec);

/// Euler ZYZ lowering; `even` acts on sublattice A, `odd` on sublattice B.
LayerProgram plan_local_pair(const Matrix2& even, const Matrix2& odd);
LayerProgram plan_single_qubit(const Matrix2& gate, Sublattice sublattice);

/// exp(-i (a Z_0 + b Z_{n-1})) from pulses that leave the bulk untouched.
LayerProgram plan_boundary_z(const ChainConfig& config, double a, double b);
/// exp(-i (a Y_0 + b Y_{n-1})).
LayerProgram plan_boundary_y(const ChainConfig& config, double a, double b);
/// Applies `first_site` to qubit 0 and `last_site` to qubit n-1 (SU(2)).
LayerProgram plan_boundary_rotation(const ChainConfig& config,
                                    const Matrix2& first_site,
                                    const Matrix2& last_site);

/// The gate on every pair of the given parity. For BA parity the end qubits
/// are left untouched, which needs an exact boundary correction.
LayerProgram plan_two_qubit(const ChainConfig& config, const Matrix4& gate,
                            Parity parity);

/// Hadamard on every site from X/Y/Z rotations.
LayerProgram plan_hadamard();

/// Program for any layer other than a native Hadamard layer.
LayerProgram plan_layer(const ChainConfig& config, const LayerGate& layer);

struct SynthesisOptions {
  SolverKind solver = SolverKind::kLattice;
  DiagonalStrategy strategy = DiagonalStrategy::kCombined;
};

struct SynthesisResult {
  PulseSchedule schedule;
  std::vector<AlignmentResult> alignments;
  int aligned_pulses = 0;
  double per_pulse_epsilon = 0.0;
  double predicted_error = 0.0;
};

/// Alignment tolerance that keeps one Z pulse within `per_pulse_epsilon` of
/// its ideal rotation in operator distance.
double alignment_epsilon(const ChainConfig& config, double per_pulse_epsilon);

SynthesisResult realize(const ChainConfig& config, const LayerProgram& program,
                        double per_pulse_epsilon,
                        const SynthesisOptions& options = {});

SynthesisResult synth_z_diag_layer(const ChainConfig& config,
                                   const DiagonalLayerSpec& spec,
                                   const SynthesisOptions& options = {});

/// Always wraps the Z-diagonal pulses between X(5π/4) and X(3π/4).
SynthesisResult synth_y_diag_layer(const ChainConfig& config,
                                   const DiagonalLayerSpec& spec,
                                   const SynthesisOptions& options = {});

SynthesisResult synth_single_qubit_layer(const ChainConfig& config,
                                         const Matrix2& gate,
                                         Sublattice sublattice, double epsilon,
                                         const SynthesisOptions& options = {});

/// `epsilon_total` is split evenly over the aligned pulses.
SynthesisResult synth_two_qubit_layer(const ChainConfig& config,
                                      const Matrix4& gate, Parity parity,
                                      double epsilon_total,
                                      const SynthesisOptions& options = {});

/// Exact action of a program, with no alignment error.
void apply_program(StateVector& state, const ChainConfig& config,
                   const LayerProgram& program);

/// Exact action of a layer, built from gate kernels only.
void apply_ideal_layer(StateVector& state, const ChainConfig& config,
                       const LayerGate& layer);

}  // namespace alternator
