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

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

// Small-dimension lattice tools backing the lattice alignment solver.
// Lattices are given by integer combinations of a fixed generator set; the
// caller supplies a function that maps integer coefficients to the embedded
// real vector so that long reduced vectors are always recomputed from exact
// integers instead of accumulated floating-point row operations.

namespace alternator::lattice {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Maps a coefficient vector over the original generators to its embedding.
using Embedding = std::function<Eigen::VectorXd(const IntVector&)>;

struct ReducedBasis {
  /// Row i holds the coefficients of reduced vector i over the generators.
  IntMatrix coefficients;
  /// Row i holds the embedded reduced vector i.
  Eigen::MatrixXd vectors;
};

/// LLL reduction with parameter `delta` of the lattice generated by the
/// unit coefficient vectors e_0 ... e_{d-1}.
ReducedBasis lll_reduce(int dimension, const Embedding& embed,
                        double delta = 0.99);

/// Every lattice point within Euclidean distance `radius` of `target`,
/// returned as coefficient vectors over the original generators.
/// Fincke-Pohst enumeration over the reduced basis; `max_points` caps the
/// output.
std::vector<IntVector> enumerate_near(const ReducedBasis& basis,
                                      const Eigen::VectorXd& target,
                                      double radius,
                                      std::size_t max_points = 4096);

}  // namespace alternator::lattice
