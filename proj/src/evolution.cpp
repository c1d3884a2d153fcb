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

#include "alternator/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "alternator/double_double.hpp"
#include "alternator/error.hpp"

namespace alternator {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_state_size(int n_qubits) {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw Error(ErrorCode::kInput,
                "state size must be an even qubit count >= 2");
  }
  if (n_qubits > kMaxStateQubits) {
    throw Error(ErrorCode::kSizeCap, "statevectors are limited to " +
                                         std::to_string(kMaxStateQubits) +
                                         " qubits");
  }
}

void check_matches(const StateVector& state, const ChainConfig& config) {
  config.validate();
  if (state.n_qubits() != config.n_qubits) {
    throw Error(ErrorCode::kInput, "state has " +
                                       std::to_string(state.n_qubits()) +
                                       " qubits, chain has " +
                                       std::to_string(config.n_qubits));
  }
}

std::array<double, 4> reduced_phases(const ChainConfig& config, double t) {
  const auto c = config.couplings.as_array();
  std::array<double, 4> theta{};
  for (int k = 0; k < 4; ++k) theta[k] = dd::phase_mod_two_pi(c[k], t);
  return theta;
}

void scale_by_term_phases(StateVector& state, const ChainConfig& config,
                          const std::array<double, 4>& theta) {
  for (std::size_t z = 0; z < state.dimension(); ++z) {
    const auto e = term_energies(config, z);
    double phase = 0.0;
    for (int k = 0; k < 4; ++k) phase += e[k] * theta[k];
    state[z] *= std::polar(1.0, -phase);
  }
}

double canonical_uniform(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

DenseMatrix kron_power(const Matrix2& m, int n) {
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    DenseMatrix next(out.rows() * 2, out.cols() * 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        next.block(i * out.rows(), j * out.cols(), out.rows(), out.cols()) =
            m(i, j) * out;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_state_size(n_qubits);
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw Error(ErrorCode::kInput, "amplitude count must be 2^n");
  }
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return s;
}

StateVector init_uniform(int n_qubits) {
  check_state_size(n_qubits);
  const auto dim = std::size_t{1} << n_qubits;
  const double amp = std::pow(2.0, -0.5 * n_qubits);
  return StateVector(n_qubits, std::vector<Complex>(dim, Complex(amp, 0.0)));
}

StateVector init_basis_index(int n_qubits, std::uint64_t index) {
  check_state_size(n_qubits);
  const auto dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw Error(ErrorCode::kInput, "basis index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector init_basis(int n_qubits, std::span<const std::uint8_t> bits) {
  if (bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw Error(ErrorCode::kInput, "bit assignment length must equal n");
  }
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] > 1) throw Error(ErrorCode::kInput, "bits must be 0 or 1");
    index |= static_cast<std::uint64_t>(bits[q]) << q;
  }
  return init_basis_index(n_qubits, index);
}

StateVector apply_z_evolution(StateVector state, const ChainConfig& config,
                              double t) {
  check_matches(state, config);
  if (!std::isfinite(t) || t < 0.0) {
    throw Error(ErrorCode::kInput, "Z duration must be finite, >= 0");
  }
  if (t == 0.0) return state;
  scale_by_term_phases(state, config, reduced_phases(config, t));
  return state;
}

StateVector apply_x_evolution(StateVector state, double tau) {
  if (!std::isfinite(tau)) throw Error(ErrorCode::kInput, "X duration must be finite");
  if (tau == 0.0) return state;
  const double c = std::cos(tau);
  const Complex mis = -kI * std::sin(tau);
  const std::size_t dim = state.dimension();
  for (int q = 0; q < state.n_qubits(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const Complex a = state[i];
      const Complex b = state[i | bit];
      state[i] = c * a + mis * b;
      state[i | bit] = c * b + mis * a;
    }
  }
  return state;
}

StateVector apply_hadamard_layer(StateVector state) {
  const double h = std::numbers::sqrt2 / 2.0;
  const std::size_t dim = state.dimension();
  for (int q = 0; q < state.n_qubits(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const Complex a = state[i];
      const Complex b = state[i | bit];
      state[i] = h * (a + b);
      state[i | bit] = h * (a - b);
    }
  }
  return state;
}

StateVector apply_schedule(StateVector state, const ChainConfig& config,
                           const PulseSchedule& schedule) {
  check_matches(state, config);
  schedule.validate();
  for (const Pulse& p : schedule.pulses) {
    switch (p.generator) {
      case Generator::kZEvolution:
        state = apply_z_evolution(std::move(state), config, p.duration);
        break;
      case Generator::kXEvolution:
        state = apply_x_evolution(std::move(state), p.duration);
        break;
      case Generator::kHadamardLayer:
        state = apply_hadamard_layer(std::move(state));
        break;
    }
  }
  return state;
}

DenseMatrix schedule_unitary(const ChainConfig& config,
                             const PulseSchedule& schedule) {
  config.validate();
  schedule.validate();
  const int n = config.n_qubits;
  if (n > kMaxDenseQubits) {
    throw Error(ErrorCode::kSizeCap, "dense unitaries are limited to " +
                                         std::to_string(kMaxDenseQubits) +
                                         " qubits");
  }
  const auto dim = std::size_t{1} << n;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const Pulse& p : schedule.pulses) {
    switch (p.generator) {
      case Generator::kZEvolution: {
        const auto theta = reduced_phases(config, p.duration);
        Eigen::VectorXcd diag(dim);
        for (std::size_t z = 0; z < dim; ++z) {
          const auto e = term_energies(config, z);
          double phase = 0.0;
          for (int k = 0; k < 4; ++k) phase += e[k] * theta[k];
          diag(z) = std::polar(1.0, -phase);
        }
        u = diag.asDiagonal() * u;
        break;
      }
      case Generator::kXEvolution:
        u = kron_power(gates::rx(2.0 * p.duration), n) * u;
        break;
      case Generator::kHadamardLayer:
        u = kron_power(gates::hadamard(), n) * u;
        break;
    }
  }
  return u;
}

MeasurementOutcome measure_boundary(StateVector state, std::uint64_t seed) {
  double p1 = 0.0;
  for (std::size_t i = 1; i < state.dimension(); i += 2) p1 += std::norm(state[i]);
  const double total = state.norm_squared();
  const int bit = canonical_uniform(seed) * total < p1 ? 1 : 0;
  const double kept = bit ? p1 : total - p1;
  const double scale = 1.0 / std::sqrt(kept);
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (static_cast<int>(i & 1u) == bit) {
      state[i] *= scale;
    } else {
      state[i] = 0.0;
    }
  }
  return {bit, std::move(state)};
}

StateVector prepare_boundary(StateVector state, int bit, std::uint64_t seed) {
  if (bit != 0 && bit != 1) throw Error(ErrorCode::kInput, "bit must be 0 or 1");
  MeasurementOutcome m = measure_boundary(std::move(state), seed);
  if (m.bit != bit) apply_single_qubit(m.state, 0, gates::pauli_x());
  return std::move(m.state);
}

double state_fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kInput, "state dimensions differ");
  }
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::min(1.0, std::norm(overlap));
}

double unitary_distance(const DenseMatrix& u, const DenseMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw Error(ErrorCode::kInput, "unitary dimensions differ");
  }
  const DenseMatrix w = u.adjoint() * v;
  Eigen::ComplexEigenSolver<DenseMatrix> solver(w, false);
  std::vector<double> phases;
  phases.reserve(w.rows());
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    phases.push_back(std::arg(solver.eigenvalues()(i)));
  }
  std::sort(phases.begin(), phases.end());
  double largest_gap = 2.0 * std::numbers::pi - (phases.back() - phases.front());
  for (std::size_t i = 1; i < phases.size(); ++i) {
    largest_gap = std::max(largest_gap, phases[i] - phases[i - 1]);
  }
  const double arc = std::max(0.0, 2.0 * std::numbers::pi - largest_gap);
  return 2.0 * std::sin(arc / 4.0);
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.dimension());
  for (std::size_t i = 0; i < state.dimension(); ++i) p[i] = std::norm(state[i]);
  return p;
}

void apply_single_qubit(StateVector& state, int qubit, const Matrix2& gate) {
  if (qubit < 0 || qubit >= state.n_qubits()) {
    throw Error(ErrorCode::kInput, "qubit index out of range");
  }
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (i & bit) continue;
    const Complex a = state[i];
    const Complex b = state[i | bit];
    state[i] = gate(0, 0) * a + gate(0, 1) * b;
    state[i | bit] = gate(1, 0) * a + gate(1, 1) * b;
  }
}

void apply_two_qubit(StateVector& state, int first, int second,
                     const Matrix4& gate) {
  if (first < 0 || second < 0 || first >= state.n_qubits() ||
      second >= state.n_qubits() || first == second) {
    throw Error(ErrorCode::kInput, "invalid qubit pair");
  }
  const std::size_t bf = std::size_t{1} << first;
  const std::size_t bs = std::size_t{1} << second;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if ((i & bf) || (i & bs)) continue;
    const std::size_t idx[4] = {i, i | bs, i | bf, i | bf | bs};
    Complex in[4];
    for (int r = 0; r < 4; ++r) in[r] = state[idx[r]];
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += gate(r, c) * in[c];
      state[idx[r]] = acc;
    }
  }
}

void apply_z_rotation_layer(StateVector& state, const ChainConfig& config,
                            const std::array<double, 4>& phases) {
  check_matches(state, config);
  std::array<double, 4> theta{};
  for (int k = 0; k < 4; ++k) {
    theta[k] = std::remainder(phases[k], 2.0 * std::numbers::pi);
  }
  scale_by_term_phases(state, config, theta);
}

namespace gates {

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2 hadamard() {
  Matrix2 m;
  m << 1, 1, 1, -1;
  return m / std::numbers::sqrt2;
}

Matrix2 rz(double theta) {
  Matrix2 m;
  m << std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2);
  return m;
}

Matrix2 ry(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Matrix2 m;
  m << c, -s, s, c;
  return m;
}

Matrix2 rx(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Matrix2 m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

Matrix4 cz() {
  Matrix4 m = Matrix4::Identity();
  m(3, 3) = -1;
  return m;
}

}  // namespace gates

}  // namespace alternator
