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

#include "alternator/lattice.hpp"

#include <cmath>

#include "alternator/error.hpp"

namespace alternator::lattice {

namespace {

struct GramSchmidt {
  Eigen::MatrixXd mu;      // mu(i, j) for j < i
  Eigen::VectorXd norms2;  // |b*_i|^2
};

GramSchmidt gram_schmidt(const Eigen::MatrixXd& b) {
  const int d = static_cast<int>(b.rows());
  GramSchmidt gs{Eigen::MatrixXd::Zero(d, d), Eigen::VectorXd::Zero(d)};
  Eigen::MatrixXd star = b;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      gs.mu(i, j) = b.row(i).dot(star.row(j)) / gs.norms2(j);
      star.row(i) -= gs.mu(i, j) * star.row(j);
    }
    gs.norms2(i) = star.row(i).squaredNorm();
    if (!(gs.norms2(i) > 0.0)) {
      throw Error(ErrorCode::kSolverFailure,
                  "lattice generators are numerically dependent");
    }
  }
  return gs;
}

}  // namespace

ReducedBasis lll_reduce(int dimension, const Embedding& embed, double delta) {
  ReducedBasis basis{IntMatrix::Identity(dimension, dimension),
                     Eigen::MatrixXd(dimension, 0)};
  auto refresh = [&](int row) {
    const Eigen::VectorXd v = embed(basis.coefficients.row(row).transpose());
    if (basis.vectors.cols() != v.size()) {
      basis.vectors.resize(dimension, v.size());
    }
    basis.vectors.row(row) = v.transpose();
  };
  for (int i = 0; i < dimension; ++i) refresh(i);

  int k = 1;
  int guard = 0;
  while (k < dimension) {
    if (++guard > 100000) {
      throw Error(ErrorCode::kSolverFailure, "LLL reduction did not converge");
    }
    for (int j = k - 1; j >= 0; --j) {
      const GramSchmidt gs = gram_schmidt(basis.vectors);
      const double q = std::nearbyint(gs.mu(k, j));
      if (q != 0.0) {
        basis.coefficients.row(k) -=
            static_cast<std::int64_t>(q) * basis.coefficients.row(j);
        refresh(k);
      }
    }
    const GramSchmidt gs = gram_schmidt(basis.vectors);
    const double mu = gs.mu(k, k - 1);
    if (gs.norms2(k) >= (delta - mu * mu) * gs.norms2(k - 1)) {
      ++k;
    } else {
      basis.coefficients.row(k).swap(basis.coefficients.row(k - 1));
      basis.vectors.row(k).swap(basis.vectors.row(k - 1));
      k = std::max(k - 1, 1);
    }
  }
  return basis;
}

namespace {

struct Enumerator {
  const ReducedBasis& basis;
  GramSchmidt gs;
  Eigen::VectorXd center;  // target in Gram-Schmidt coordinates
  double radius2;
  std::size_t max_points;
  std::vector<std::int64_t> x;
  std::vector<IntVector> found;

  void run(int level, double partial) {
    if (found.size() >= max_points) return;
    const int d = static_cast<int>(x.size());
    double c = center(level);
    for (int j = level + 1; j < d; ++j) c -= gs.mu(j, level) * x[j];
    const double span = std::sqrt((radius2 - partial) / gs.norms2(level));
    const auto lo = static_cast<std::int64_t>(std::ceil(c - span));
    const auto hi = static_cast<std::int64_t>(std::floor(c + span));
    for (std::int64_t v = lo; v <= hi; ++v) {
      const double diff = static_cast<double>(v) - c;
      const double next = partial + diff * diff * gs.norms2(level);
      if (next > radius2) continue;
      x[level] = v;
      if (level == 0) {
        IntVector coeffs = IntVector::Zero(basis.coefficients.cols());
        for (int i = 0; i < d; ++i) {
          coeffs += x[i] * basis.coefficients.row(i).transpose();
        }
        found.push_back(std::move(coeffs));
        if (found.size() >= max_points) return;
      } else {
        run(level - 1, next);
      }
    }
  }
};

}  // namespace

std::vector<IntVector> enumerate_near(const ReducedBasis& basis,
                                      const Eigen::VectorXd& target,
                                      double radius, std::size_t max_points) {
  const int d = static_cast<int>(basis.vectors.rows());
  Enumerator e{basis, gram_schmidt(basis.vectors), Eigen::VectorXd(d),
               radius * radius, max_points, std::vector<std::int64_t>(d, 0),
               {}};
  // Coordinates of the target along b*_i: <y, b*_i> / |b*_i|^2, with b*_i
  // rebuilt from mu.
  Eigen::MatrixXd star = basis.vectors;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) star.row(i) -= e.gs.mu(i, j) * star.row(j);
  }
  for (int i = 0; i < d; ++i) {
    e.center(i) = target.dot(star.row(i).transpose()) / e.gs.norms2(i);
  }
  // Any component of the target outside the lattice span is a fixed offset.
  Eigen::VectorXd residual = target;
  for (int i = 0; i < d; ++i) residual -= e.center(i) * star.row(i).transpose();
  const double offset2 = residual.squaredNorm();
  if (offset2 > e.radius2) return {};
  e.run(d - 1, offset2);
  return std::move(e.found);
}

}  // namespace alternator::lattice
