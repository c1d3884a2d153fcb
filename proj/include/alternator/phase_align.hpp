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
#include <string>

#include "alternator/chain_model.hpp"

namespace alternator {

enum class SolverKind { kGrid, kLattice };

const char* to_string(SolverKind solver);
SolverKind solver_from_string(const std::string& name);

/// A solved evolution time together with its wrapped phase distances, one
/// per frequency, each in [0, π].
struct AlignmentResult {
  double time = 0.0;
  std::array<double, 4> residuals{};
  SolverKind solver = SolverKind::kGrid;

  double max_residual() const;
};

/// For each frequency c and target φ: min over integers n of |c·t − 2πn − φ|.
/// The product c·t is carried in double-double before reduction, so the
/// result stays accurate for t up to ~1e12.
std::array<double, 4> residuals(const FrequencySet& freqs, double t,
                                const PhaseTarget& target);

/// Earliest t = k·dt, k = 0, 1, ..., t <= t_max, whose residuals are all
/// below epsilon/4. Requires dt < epsilon / (4 · max frequency).
/// Throws `Error(kNoSolutionInRange)` when the scan is exhausted.
AlignmentResult find_time_grid(const FrequencySet& freqs,
                               const PhaseTarget& target, double t_max,
                               double dt);

/// Some t >= 0 (not necessarily the earliest) with all residuals below
/// epsilon/4, from a closest-vector search in the lattice spanned by the
/// frequency ratios. Throws `Error(kSolverFailure)` when no candidate can be
/// certified.
AlignmentResult find_time_lattice(const FrequencySet& freqs,
                                  const PhaseTarget& target);

AlignmentResult find_time(SolverKind solver, const FrequencySet& freqs,
                          const PhaseTarget& target);

/// max over basis states z of |exp(−i t E(z)) − exp(−i φ E_active(z))|, the
/// operator-norm distance between the two diagonal unitaries. n <= 14.
double verify_isolation(const ChainConfig& config,
                        const AlignmentResult& result, Term active,
                        double phi);

/// `t=<decimal> residuals=<r1>,<r2>,<r3>,<r4> solver=<GRID|LATTICE>`
std::string format_alignment(const AlignmentResult& result);

}  // namespace alternator
