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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

// The qubit chain and the records shared by every other module.
//
// Conventions used throughout the library:
//   * qubit 0 is the boundary qubit; even qubits form sublattice A, odd
//     qubits sublattice B;
//   * the chain is open: pair sums stop at the last existing pair, so an
//     n-qubit chain has n/2 AB pairs (2j, 2j+1) and n/2 - 1 BA pairs
//     (2j+1, 2j+2);
//   * a bit value 0 is the Z = +1 eigenstate (spin s = +1), bit 1 is s = -1.

namespace alternator {

/// The four angular frequencies (radians per unit time) in the fixed order
/// (omega_a, omega_b, gamma_ab, gamma_ba) used by every 4-vector below.
struct FrequencySet {
  double omega_a = 1.0;
  double omega_b = 1.4142135623730951;  // sqrt(2)
  double gamma_ab = 1.7320508075688772; // sqrt(3)
  double gamma_ba = 2.23606797749979;   // sqrt(5)

  std::array<double, 4> as_array() const {
    return {omega_a, omega_b, gamma_ab, gamma_ba};
  }
  double max() const;

  /// Throws `Error(kInput)` unless all four are finite, positive and
  /// pairwise distinct.
  void validate() const;

  static FrequencySet from_array(const std::array<double, 4>& values);
};

bool operator==(const FrequencySet& a, const FrequencySet& b);

struct ChainConfig {
  int n_qubits = 2;
  FrequencySet couplings;

  /// Throws `Error(kInput)` for odd or too-small chains and bad couplings.
  void validate() const;

  int n_ab_pairs() const { return n_qubits / 2; }
  int n_ba_pairs() const { return n_qubits / 2 - 1; }
};

/// Builds and validates a config.
ChainConfig make_chain(int n_qubits, FrequencySet couplings = {});

/// The unweighted generators H_A = sum Z_2j, H_B = sum Z_2j+1,
/// H_AB = sum Z_2j Z_2j+1, H_BA = sum Z_2j+1 Z_2j+2.
enum class Term { kA = 0, kB = 1, kAB = 2, kBA = 3 };

inline constexpr std::array<Term, 4> kAllTerms = {Term::kA, Term::kB,
                                                  Term::kAB, Term::kBA};

const char* to_string(Term term);

/// Eigenvalues of the four generators on the basis state whose bit j is the
/// value of qubit j. Integers in [-n/2, n/2].
std::array<int, 4> term_energies(const ChainConfig& config,
                                 std::uint64_t basis_index);

/// Largest |eigenvalue| of each generator on this chain: the factor by which
/// a phase error on that frequency can grow in the worst basis state.
std::array<int, 4> term_weights(const ChainConfig& config);

/// Eigenvalue of the unweighted generator `term` on the given bit assignment
/// (`bits[j]` is qubit j, each 0 or 1).
double term_energy(const ChainConfig& config, Term term,
                   std::span<const std::uint8_t> bits);

/// Eigenvalue of H_Z on the given bit assignment.
double diagonal_energy(const ChainConfig& config,
                       std::span<const std::uint8_t> bits);

enum class Generator { kZEvolution, kXEvolution, kHadamardLayer };

struct Pulse {
  Generator generator = Generator::kZEvolution;
  double duration = 0.0;  // always 0 for kHadamardLayer

  static Pulse z(double t) { return {Generator::kZEvolution, t}; }
  static Pulse x(double tau) { return {Generator::kXEvolution, tau}; }
  static Pulse hadamard() { return {Generator::kHadamardLayer, 0.0}; }

  friend bool operator==(const Pulse&, const Pulse&) = default;
};

/// Pulses in application order: `pulses.front()` acts first.
struct PulseSchedule {
  std::vector<Pulse> pulses;

  bool empty() const { return pulses.empty(); }
  std::size_t size() const { return pulses.size(); }
  void append(const PulseSchedule& other);

  /// Throws `Error(kInput)` on a negative or non-finite duration.
  void validate() const;

  friend bool operator==(const PulseSchedule&, const PulseSchedule&) = default;
};

/// Target phases in frequency order, each in [0, 2π), with tolerance
/// epsilon in (0, π). Solvers require every wrapped residual < epsilon / 4.
struct PhaseTarget {
  std::array<double, 4> phases{};
  double epsilon = 0.1;

  void validate() const;
  double tolerance() const { return epsilon / 4.0; }
};

/// Folds each phase into [0, 2π).
PhaseTarget make_target(const std::array<double, 4>& phases, double epsilon);

/// Line-oriented schedule text: `Z <duration>`, `X <duration>`, `HAD`, `#`
/// comments. Durations are written in shortest round-trip form.
std::string emit_schedule(const PulseSchedule& schedule);

/// Throws `ParseError` with the 1-based line of the first bad line.
PulseSchedule parse_schedule(const std::string& text);

std::string format_double(double value);

}  // namespace alternator
