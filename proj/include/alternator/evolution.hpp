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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "alternator/chain_model.hpp"

namespace alternator {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using DenseMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxStateQubits = 24;
inline constexpr int kMaxDenseQubits = 10;

/// 2^n amplitudes; qubit j is bit j of the basis index, so qubit 0 (the
/// boundary qubit) is the least significant bit.
class StateVector {
 public:
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// |I> = 2^{-n/2} sum_j |j>. n even, 2 <= n <= 24.
StateVector init_uniform(int n_qubits);

/// Computational basis state with `bits[j]` the value of qubit j.
StateVector init_basis(int n_qubits, std::span<const std::uint8_t> bits);
StateVector init_basis_index(int n_qubits, std::uint64_t index);

/// Multiplies the amplitude of z by exp(-i t E(z)); each coupling phase c·t
/// is reduced mod 2π in double-double before being combined with the
/// integer term eigenvalues, so large t keeps full accuracy.
StateVector apply_z_evolution(StateVector state, const ChainConfig& config,
                              double t);

/// exp(-i tau sum_j X_j) = prod_j (cos tau I - i sin tau X_j).
StateVector apply_x_evolution(StateVector state, double tau);

StateVector apply_hadamard_layer(StateVector state);

/// Applies the pulses in list order.
StateVector apply_schedule(StateVector state, const ChainConfig& config,
                           const PulseSchedule& schedule);

/// The dense product of the schedule's pulse matrices, built from Kronecker
/// products rather than the statevector kernels. n <= 10.
DenseMatrix schedule_unitary(const ChainConfig& config,
                             const PulseSchedule& schedule);

struct MeasurementOutcome {
  int bit = 0;
  StateVector state;
};

/// Projective Z measurement of qubit 0 with a seeded draw.
MeasurementOutcome measure_boundary(StateVector state, std::uint64_t seed);

/// Measures qubit 0 and flips it with X when the outcome differs from `bit`.
StateVector prepare_boundary(StateVector state, int bit, std::uint64_t seed);

/// |<a|b>|^2.
double state_fidelity(const StateVector& a, const StateVector& b);

/// min over θ of ||U − e^{iθ} V||_op. For unitary U, V this is 2 sin(L/4)
/// where L is the shortest arc of the unit circle holding every eigenvalue of
/// U^† V.
double unitary_distance(const DenseMatrix& u, const DenseMatrix& v);

/// Probability of each basis state.
std::vector<double> probabilities(const StateVector& state);

// Exact gate kernels, used to build reference results for compiled circuits.

/// `gate` acting on one qubit.
void apply_single_qubit(StateVector& state, int qubit, const Matrix2& gate);

/// `gate` on (first, second) with `first` as the more significant bit of the
/// 4x4 index: gate(2 a + b, 2 a' + b') for first = a, second = b.
void apply_two_qubit(StateVector& state, int first, int second,
                     const Matrix4& gate);

/// exp(-i sum_k phases[k] H_k) in the Z basis, phases in (A, B, AB, BA) order.
void apply_z_rotation_layer(StateVector& state, const ChainConfig& config,
                            const std::array<double, 4>& phases);

/// Returns the dense unitary whose column j is `apply(init_basis_index(j))`.
template <typename F>
DenseMatrix columns_of(int n_qubits, F&& apply) {
  const auto dim = std::size_t{1} << n_qubits;
  DenseMatrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const StateVector out = apply(init_basis_index(n_qubits, j));
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = out[i];
  }
  return u;
}

namespace gates {

Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 hadamard();
/// exp(-i θ/2 Z), exp(-i θ/2 Y), exp(-i θ/2 X).
Matrix2 rz(double theta);
Matrix2 ry(double theta);
Matrix2 rx(double theta);
/// diag(1, 1, 1, -1).
Matrix4 cz();

}  // namespace gates

}  // namespace alternator
