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

// Independent dense reference implementations. Nothing here reuses the
// statevector kernels: Hamiltonians are Kronecker products of Pauli
// matrices and evolutions come from a general matrix exponential.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "alternator/chain_model.hpp"
#include "alternator/evolution.hpp"

namespace oracle {

using alternator::Complex;
using alternator::DenseMatrix;

inline Eigen::Matrix2cd pauli(char p) {
  const Complex i{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m.setIdentity(); break;
  }
  return m;
}

/// Tensor product with qubit 0 as the rightmost (least significant) factor.
inline DenseMatrix pauli_string(int n, const std::map<int, char>& ops) {
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    const auto it = ops.find(q);
    const Eigen::Matrix2cd p = pauli(it == ops.end() ? 'I' : it->second);
    DenseMatrix next = Eigen::kroneckerProduct(out, p).eval();
    out = next;
  }
  return out;
}

/// Σ_k coeffs[k] H_k in the given basis.
inline DenseMatrix term_sum(int n, const std::array<double, 4>& coeffs,
                            char basis = 'Z') {
  const auto dim = std::int64_t{1} << n;
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  for (int q = 0; q < n; ++q) {
    h += coeffs[q % 2] * pauli_string(n, {{q, basis}});
  }
  for (int q = 0; q + 1 < n; ++q) {
    h += coeffs[2 + q % 2] * pauli_string(n, {{q, basis}, {q + 1, basis}});
  }
  return h;
}

/// The chain Hamiltonian with every Z replaced by `basis`.
inline DenseMatrix chain_hamiltonian(const alternator::ChainConfig& config,
                                     char basis = 'Z') {
  return term_sum(config.n_qubits, config.couplings.as_array(), basis);
}

/// A single-site gate on qubit q.
inline DenseMatrix embed_site(int n, int q, const Eigen::Matrix2cd& g) {
  const DenseMatrix high = DenseMatrix::Identity(std::int64_t{1} << (n - q - 1),
                                                 std::int64_t{1} << (n - q - 1));
  const DenseMatrix low = DenseMatrix::Identity(std::int64_t{1} << q, std::int64_t{1} << q);
  const DenseMatrix hg = Eigen::kroneckerProduct(high, g).eval();
  return Eigen::kroneckerProduct(hg, low).eval();
}

/// A 4x4 gate on (q, q+1) whose row index is 2·bit_q + bit_{q+1}.
inline DenseMatrix embed_pair(int n, int q, const Eigen::Matrix4cd& g) {
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  const Eigen::Matrix4cd flipped = swap * g * swap;
  const DenseMatrix high = DenseMatrix::Identity(std::int64_t{1} << (n - q - 2),
                                                 std::int64_t{1} << (n - q - 2));
  const DenseMatrix low = DenseMatrix::Identity(std::int64_t{1} << q, std::int64_t{1} << q);
  const DenseMatrix hg = Eigen::kroneckerProduct(high, flipped).eval();
  return Eigen::kroneckerProduct(hg, low).eval();
}

inline DenseMatrix transverse_field(int n) {
  const auto dim = std::int64_t{1} << n;
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  for (int q = 0; q < n; ++q) h += pauli_string(n, {{q, 'X'}});
  return h;
}

inline DenseMatrix expm_i(const DenseMatrix& h, double t) {
  const DenseMatrix a = (Complex(0.0, -t) * h).eval();
  return a.exp();
}

inline double spectral_norm(const DenseMatrix& m) {
  Eigen::JacobiSVD<DenseMatrix> svd(m);
  return svd.singularValues()(0);
}

/// min over θ of ||U - e^{iθ} V||: coarse scan, then golden-section search.
inline double brute_distance(const DenseMatrix& u, const DenseMatrix& v) {
  auto f = [&](double th) {
    return spectral_norm(u - std::polar(1.0, th) * v);
  };
  const int steps = 720;
  double best = 1e300;
  double best_th = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double th = 2.0 * std::numbers::pi * k / steps;
    const double val = f(th);
    if (val < best) {
      best = val;
      best_th = th;
    }
  }
  double lo = best_th - 2.0 * std::numbers::pi / steps;
  double hi = best_th + 2.0 * std::numbers::pi / steps;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    const double a = hi - g * (hi - lo);
    const double b = lo + g * (hi - lo);
    if (f(a) < f(b)) {
      hi = b;
    } else {
      lo = a;
    }
  }
  return std::min(best, f(0.5 * (lo + hi)));
}

inline alternator::StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = Complex(g(rng), g(rng));
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return alternator::StateVector(n, std::move(amps));
}

inline Eigen::VectorXcd as_vector(const alternator::StateVector& s) {
  const auto amps = s.amplitudes();
  return Eigen::Map<const Eigen::VectorXcd>(amps.data(),
                                            static_cast<Eigen::Index>(amps.size()));
}

/// Haar-random unitary from the QR decomposition of a Gaussian matrix.
template <int N>
Eigen::Matrix<Complex, N, N> random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Matrix<Complex, N, N> a;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::Matrix<Complex, N, N>> qr(a);
  Eigen::Matrix<Complex, N, N> q = qr.householderQ();
  const Eigen::Matrix<Complex, N, N> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int k = 0; k < N; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline alternator::PulseSchedule random_schedule(int length, std::mt19937_64& rng,
                                                 bool with_hadamard = true) {
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::uniform_int_distribution<int> kind(0, with_hadamard ? 2 : 1);
  alternator::PulseSchedule s;
  for (int k = 0; k < length; ++k) {
    switch (kind(rng)) {
      case 0: s.pulses.push_back(alternator::Pulse::z(u(rng))); break;
      case 1: s.pulses.push_back(alternator::Pulse::x(u(rng))); break;
      default: s.pulses.push_back(alternator::Pulse::hadamard()); break;
    }
  }
  return s;
}

/// Dense product of a schedule from the oracle Hamiltonians.
inline DenseMatrix dense_schedule(const alternator::ChainConfig& config,
                                  const alternator::PulseSchedule& s) {
  const int n = config.n_qubits;
  const auto dim = std::int64_t{1} << n;
  const DenseMatrix hz = chain_hamiltonian(config);
  const DenseMatrix hx = transverse_field(n);
  DenseMatrix had = DenseMatrix::Identity(1, 1);
  const Eigen::Matrix2cd h1 = (pauli('X') + pauli('Z')) / std::numbers::sqrt2;
  for (int q = 0; q < n; ++q) {
    DenseMatrix next = Eigen::kroneckerProduct(had, h1).eval();
    had = next;
  }
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const auto& p : s.pulses) {
    switch (p.generator) {
      case alternator::Generator::kZEvolution: u = expm_i(hz, p.duration) * u; break;
      case alternator::Generator::kXEvolution: u = expm_i(hx, p.duration) * u; break;
      case alternator::Generator::kHadamardLayer: u = had * u; break;
    }
  }
  return u;
}

}  // namespace oracle
