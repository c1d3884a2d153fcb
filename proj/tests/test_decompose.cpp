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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "alternator/decompose.hpp"
#include "alternator/error.hpp"
#include "oracle.hpp"

using namespace alternator;

namespace {

constexpr double kPi = std::numbers::pi;

// Local invariants of a two-qubit gate (Makhlin). Two gates are equal up to
// single-qubit factors and phase exactly when both invariants agree.
std::pair<Complex, Complex> makhlin(const Matrix4& u) {
  const Complex i{0.0, 1.0};
  Matrix4 q;
  q << 1, 0, 0, i,  //
      0, i, 1, 0,   //
      0, i, -1, 0,  //
      1, 0, 0, -i;
  q /= std::sqrt(2.0);
  const Matrix4 ub = q.adjoint() * u * q;
  const Matrix4 m = ub.transpose() * ub;
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - (m * m).trace()) / (4.0 * det);
  return {g1, g2};
}

}  // namespace

TEST_CASE("Euler angles reconstruct random SU(2)") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix2 u = to_special_unitary(Matrix2(oracle::random_unitary<2>(rng)));
    const EulerAngles e = euler_zyz(u);
    CHECK(e.beta >= 0.0);
    CHECK(e.beta <= kPi + 1e-12);
    CHECK((from_euler(e) - u).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("Euler angles of degenerate and named gates") {
  const Matrix2 h = to_special_unitary(gates::hadamard());
  CHECK((h - Complex(0, -1) * gates::hadamard()).norm() < 1e-12);
  const EulerAngles e = euler_zyz(h);
  CHECK(std::abs(e.alpha) < 1e-12);
  CHECK(std::abs(e.beta - kPi / 2) < 1e-12);
  CHECK(std::abs(e.gamma - kPi) < 1e-12);

  const EulerAngles z = euler_zyz(gates::rz(0.8));
  CHECK(z.beta == 0.0);
  CHECK((from_euler(z) - gates::rz(0.8)).norm() < 1e-12);

  const EulerAngles id = euler_zyz(Matrix2::Identity());
  CHECK((from_euler(id) - Matrix2::Identity()).norm() < 1e-12);
  CHECK((from_euler(euler_zyz(-Matrix2::Identity())) + Matrix2::Identity()).norm() < 1e-12);

  CHECK_THROWS_AS(euler_zyz(gates::hadamard()), Error);  // det -1
  CHECK_THROWS_AS(euler_zyz(Matrix2::Identity() * 2.0), Error);
}

TEST_CASE("canonical decomposition round-trips random SU(4)") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 u = to_special_unitary(Matrix4(oracle::random_unitary<4>(rng)));
    const auto d = canonical_decompose(u);
    CHECK((d.reconstruct() - u).cwiseAbs().maxCoeff() < 1e-8);
    for (const Matrix2* f : {&d.a1, &d.a2, &d.b1, &d.b2}) {
      CHECK(is_unitary(*f, 1e-10));
      CHECK(std::abs(f->determinant() - 1.0) < 1e-10);
    }
    CHECK(std::abs(std::abs(d.global_phase) - 1.0) < 1e-12);
  }
}

TEST_CASE("canonical decomposition keeps the determinant phase") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4 u = oracle::random_unitary<4>(rng);
    CHECK((canonical_decompose(u).reconstruct() - u).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("canonical decomposition of structured gates") {
  std::mt19937_64 rng(4);
  const Matrix2 a = oracle::random_unitary<2>(rng);
  const Matrix2 b = oracle::random_unitary<2>(rng);
  const Matrix2 c = oracle::random_unitary<2>(rng);
  const Matrix2 e = oracle::random_unitary<2>(rng);
  std::vector<Matrix4> gates_list{
      Matrix4::Identity(), gates::cz(), kron(a, b),
      kron(a, b) * canonical_core(0.3, 0.2, 0.1) * kron(c, e),
      kron(a, b) * canonical_core(kPi / 4, kPi / 4, 0.0) * kron(c, e),
      kron(a, b) * canonical_core(kPi / 4, kPi / 4, kPi / 4) * kron(c, e)};
  for (const auto& g : gates_list) {
    CHECK((canonical_decompose(g).reconstruct() - g).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("CZ is locally equivalent to the (0, 0, pi/4) core") {
  const auto d = canonical_decompose(gates::cz());
  std::array<double, 3> c{std::abs(d.cx), std::abs(d.cy), std::abs(d.cz)};
  for (double& x : c) x = std::fmod(x, kPi / 2);
  std::sort(c.begin(), c.end());
  CHECK(c[0] < 1e-10);
  CHECK(c[1] < 1e-10);
  CHECK(std::abs(c[2] - kPi / 4) < 1e-10);

  const auto [g1, g2] = makhlin(gates::cz());
  const auto [h1, h2] = makhlin(canonical_core(0.0, 0.0, kPi / 4));
  CHECK(std::abs(g1 - h1) < 1e-12);
  CHECK(std::abs(g2 - h2) < 1e-12);
}

TEST_CASE("core coefficients carry the local invariants") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix4 u = oracle::random_unitary<4>(rng);
    const auto d = canonical_decompose(u);
    const auto [g1, g2] = makhlin(u);
    const auto [h1, h2] = makhlin(d.core());
    CHECK(std::abs(g1 - h1) < 1e-9);
    CHECK(std::abs(g2 - h2) < 1e-9);
  }
}

TEST_CASE("core is the exponential of the Pauli pair sum") {
  const DenseMatrix xx = oracle::pauli_string(2, {{0, 'X'}, {1, 'X'}});
  const DenseMatrix yy = oracle::pauli_string(2, {{0, 'Y'}, {1, 'Y'}});
  const DenseMatrix zz = oracle::pauli_string(2, {{0, 'Z'}, {1, 'Z'}});
  for (const auto& [x, y, z] : std::vector<std::array<double, 3>>{
           {0.1, 0.2, 0.3}, {kPi / 4, 0, 0}, {-1.0, 2.0, 0.5}}) {
    const DenseMatrix expected = oracle::expm_i(x * xx + y * yy + z * zz, 1.0);
    CHECK((canonical_core(x, y, z) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("kron places the first factor on the more significant bit") {
  const Matrix4 k = kron(gates::pauli_x(), Matrix2::Identity());
  // |00> -> |10>, index 2.
  CHECK(k(2, 0) == Complex(1.0, 0.0));
}

TEST_CASE("Kronecker factorization") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix2 a = oracle::random_unitary<2>(rng);
    const Matrix2 b = oracle::random_unitary<2>(rng);
    const Matrix4 u = kron(a, b);
    const auto f = kronecker_factor(u);
    CHECK((f.phase * kron(f.first, f.second) - u).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(f.first.determinant() - 1.0) < 1e-10);
  }
}

TEST_CASE("decomposition input checks") {
  Matrix4 bad = Matrix4::Identity();
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(canonical_decompose(bad), Error);
  CHECK(is_unitary(gates::cz(), 1e-12));
  CHECK_FALSE(is_unitary(bad, 1e-3));
}
