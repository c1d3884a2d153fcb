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

#include "alternator/evolution.hpp"

// Closed-form factorizations used to lower arbitrary single- and two-qubit
// broadcast gates onto Z- and Y-diagonal layers.
//
// Conventions:
//   Rz(θ) = exp(-i θ Z / 2), Ry(θ) = exp(-i θ Y / 2);
//   U = Rz(alpha) Ry(beta) Rz(gamma), so Rz(gamma) acts first;
//   4x4 matrices are indexed |first second>, first being the more
//   significant bit, and kron(A, B) places A on `first`.

namespace alternator {

struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// ZYZ angles of a 2x2 special unitary; beta in [0, π]. Throws
/// `Error(kInput)` when `u` is not unitary with unit determinant (1e-8).
EulerAngles euler_zyz(const Matrix2& u);

Matrix2 from_euler(const EulerAngles& angles);

/// U = global_phase · (a1 ⊗ a2) · exp(-i (cx XX + cy YY + cz ZZ)) · (b1 ⊗ b2)
/// with a1, a2, b1, b2 in SU(2).
struct CanonicalDecomposition {
  Matrix2 a1, a2, b1, b2;
  double cx = 0.0;
  double cy = 0.0;
  double cz = 0.0;
  Complex global_phase{1.0, 0.0};

  Matrix4 core() const;
  Matrix4 reconstruct() const;
};

/// Canonical (KAK) decomposition through the magic basis. Accepts any 4x4
/// unitary; the determinant phase is carried in `global_phase`.
CanonicalDecomposition canonical_decompose(const Matrix4& u);

/// exp(-i (cx XX + cy YY + cz ZZ)).
Matrix4 canonical_core(double cx, double cy, double cz);

Matrix4 kron(const Matrix2& first, const Matrix2& second);

/// Splits a 4x4 tensor product into special-unitary factors with
/// u = phase · kron(first, second).
struct KroneckerFactors {
  Matrix2 first;
  Matrix2 second;
  Complex phase;
};
KroneckerFactors kronecker_factor(const Matrix4& u);

bool is_unitary(const DenseMatrix& m, double tol);

/// u scaled by a phase so that det = 1; requires a unitary input.
Matrix2 to_special_unitary(const Matrix2& u);
Matrix4 to_special_unitary(const Matrix4& u);

}  // namespace alternator
