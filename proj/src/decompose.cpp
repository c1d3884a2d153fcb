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

#include "alternator/decompose.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "alternator/error.hpp"

namespace alternator {

namespace {

constexpr Complex kI{0.0, 1.0};

// Columns map the magic (Bell-like) basis to the computational basis. In this
// basis SU(2) ⊗ SU(2) is SO(4) and XX, YY, ZZ are diagonal.
Matrix4 magic() {
  Matrix4 m;
  m << 1, 0, 0, kI,  //
      0, kI, 1, 0,   //
      0, kI, -1, 0,  //
      1, 0, 0, -kI;
  return m / std::numbers::sqrt2;
}

Matrix4 pauli_pair(const Matrix2& p) { return kron(p, p); }

}  // namespace

bool is_unitary(const DenseMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const DenseMatrix prod = m.adjoint() * m;
  return (prod - DenseMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

Matrix2 to_special_unitary(const Matrix2& u) {
  return u / std::sqrt(u.determinant());
}

Matrix4 to_special_unitary(const Matrix4& u) {
  return u / std::pow(u.determinant(), 0.25);
}

EulerAngles euler_zyz(const Matrix2& u) {
  if (!is_unitary(u, 1e-8) || std::abs(u.determinant() - 1.0) > 1e-8) {
    throw Error(ErrorCode::kInput, "Euler decomposition needs an SU(2) matrix");
  }
  // u = [[a, -conj(b)], [b, conj(a)]] with
  // a = e^{-i(α+γ)/2} cos(β/2), b = e^{i(α-γ)/2} sin(β/2).
  const Complex a = u(0, 0);
  const Complex b = u(1, 0);
  EulerAngles e;
  e.beta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  const double sum = std::abs(a) > 1e-12 ? -2.0 * std::arg(a) : 0.0;
  const double diff = std::abs(b) > 1e-12 ? 2.0 * std::arg(b) : 0.0;
  e.alpha = 0.5 * (sum + diff);
  e.gamma = 0.5 * (sum - diff);
  // The half-angle branch may land on -u; Rz(α + 2π) = -Rz(α) fixes it.
  if ((from_euler(e) - u).cwiseAbs().maxCoeff() > 1e-6) {
    e.alpha += 2.0 * std::numbers::pi;
  }
  return e;
}

Matrix2 from_euler(const EulerAngles& angles) {
  return gates::rz(angles.alpha) * gates::ry(angles.beta) *
         gates::rz(angles.gamma);
}

Matrix4 kron(const Matrix2& first, const Matrix2& second) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = first(i, j) * second;
    }
  }
  return out;
}

KroneckerFactors kronecker_factor(const Matrix4& u) {
  int bi = 0;
  int bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double norm = u.block<2, 2>(2 * i, 2 * j).norm();
      if (norm > best) {
        best = norm;
        bi = i;
        bj = j;
      }
    }
  }
  const Matrix2 second = to_special_unitary(Matrix2(u.block<2, 2>(2 * bi, 2 * bj)));
  Matrix2 first;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      first(i, j) = (second.adjoint() * u.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
    }
  }
  first = to_special_unitary(first);
  const Matrix4 k = kron(first, second);
  const Complex phase = (k.adjoint() * u).trace() / 4.0;
  return {first, second, phase / std::abs(phase)};
}

Matrix4 canonical_core(double cx, double cy, double cz) {
  // XX, YY, ZZ commute and are diagonal in the magic basis.
  const Matrix4 m = magic();
  Matrix4 d = Matrix4::Zero();
  const Matrix4 xx = m.adjoint() * pauli_pair(gates::pauli_x()) * m;
  const Matrix4 yy = m.adjoint() * pauli_pair(gates::pauli_y()) * m;
  const Matrix4 zz = m.adjoint() * pauli_pair(gates::pauli_z()) * m;
  for (int k = 0; k < 4; ++k) {
    const double phase =
        cx * xx(k, k).real() + cy * yy(k, k).real() + cz * zz(k, k).real();
    d(k, k) = std::polar(1.0, -phase);
  }
  return m * d * m.adjoint();
}

Matrix4 CanonicalDecomposition::core() const { return canonical_core(cx, cy, cz); }

Matrix4 CanonicalDecomposition::reconstruct() const {
  return global_phase * kron(a1, a2) * core() * kron(b1, b2);
}

CanonicalDecomposition canonical_decompose(const Matrix4& u_in) {
  if (!is_unitary(u_in, 1e-8)) {
    throw Error(ErrorCode::kInput, "canonical decomposition needs a unitary");
  }
  const Complex det_root = std::pow(u_in.determinant(), 0.25);
  const Matrix4 u = u_in / det_root;
  const Matrix4 m = magic();
  const Matrix4 up = m.adjoint() * u * m;
  // up = O1 Δ O2 with O1, O2 in SO(4) and Δ diagonal, so
  // up^T up = O2^T Δ² O2. Its real and imaginary parts are commuting real
  // symmetric matrices; a generic combination of the two shares their
  // eigenvectors.
  const Matrix4 sym = up.transpose() * up;
  const Eigen::Matrix4d re = sym.real();
  const Eigen::Matrix4d im = sym.imag();
  Eigen::Matrix4d p;
  double best_off = 1e300;
  for (double kappa : {0.5772156649, 1.3247179572, 2.7182818284, -0.8660254,
                       4.6692016091, 0.2614972128}) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(re + kappa * im);
    const Eigen::Matrix4d candidate = solver.eigenvectors();
    const Matrix4 diag = candidate.transpose().cast<Complex>() * sym *
                         candidate.cast<Complex>();
    const double off = (diag - Matrix4(diag.diagonal().asDiagonal()))
                           .cwiseAbs()
                           .maxCoeff();
    if (off < best_off) {
      best_off = off;
      p = candidate;
    }
    if (off < 1e-12) break;
  }
  if (best_off > 1e-7) {
    throw Error(ErrorCode::kSolverFailure,
                "could not diagonalize the magic-basis square");
  }
  if (p.determinant() < 0) p.col(0) = -p.col(0);
  const Matrix4 pc = p.cast<Complex>();
  const Eigen::Vector4cd d2 = (pc.transpose() * sym * pc).diagonal();
  Eigen::Vector4cd delta;
  for (int k = 0; k < 4; ++k) delta(k) = std::sqrt(d2(k) / std::abs(d2(k)));
  if (delta.prod().real() < 0) delta(0) = -delta(0);

  const Matrix4 o1 = up * pc * delta.cwiseInverse().asDiagonal();
  const Matrix4 k1 = m * Matrix4(o1.real().cast<Complex>()) * m.adjoint();
  const Matrix4 k2 = m * pc.transpose() * m.adjoint();

  // Solve θ_k = g − (cx x_k + cy y_k + cz z_k) for (cx, cy, cz, g).
  const Matrix4 xx = m.adjoint() * pauli_pair(gates::pauli_x()) * m;
  const Matrix4 yy = m.adjoint() * pauli_pair(gates::pauli_y()) * m;
  const Matrix4 zz = m.adjoint() * pauli_pair(gates::pauli_z()) * m;
  Eigen::Matrix4d system;
  Eigen::Vector4d theta;
  for (int k = 0; k < 4; ++k) {
    system(k, 0) = -xx(k, k).real();
    system(k, 1) = -yy(k, k).real();
    system(k, 2) = -zz(k, k).real();
    system(k, 3) = 1.0;
    theta(k) = std::arg(delta(k));
  }
  const Eigen::Vector4d coeffs = system.partialPivLu().solve(theta);

  CanonicalDecomposition out;
  out.cx = coeffs(0);
  out.cy = coeffs(1);
  out.cz = coeffs(2);
  const KroneckerFactors fa = kronecker_factor(k1);
  const KroneckerFactors fb = kronecker_factor(k2);
  out.a1 = fa.first;
  out.a2 = fa.second;
  out.b1 = fb.first;
  out.b2 = fb.second;
  out.global_phase =
      det_root * fa.phase * fb.phase * std::polar(1.0, coeffs(3));
  return out;
}

}  // namespace alternator
