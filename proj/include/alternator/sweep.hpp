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
#include <optional>
#include <string>
#include <vector>

#include "alternator/phase_align.hpp"

namespace alternator {

/// Parsed form of "random:<count>:<seed>".
struct TargetSpec {
  int count = 1;
  std::uint64_t seed = 0;
};

TargetSpec parse_target_spec(const std::string& text);

/// Phase targets drawn uniformly from [0, 2π)^4; depends only on the seed.
std::vector<std::array<double, 4>> random_targets(int count, std::uint64_t seed);

struct SweepOptions {
  std::vector<double> eps_list;
  TargetSpec targets;
  SolverKind solver = SolverKind::kLattice;
  double t_max = 1e6;
  std::optional<double> dt;  // grid step; defaults to half the safe step
  int fidelity_qubits = 4;
  bool timing = false;
};

struct SweepRow {
  double epsilon = 0.0;
  SolverKind solver = SolverKind::kLattice;
  int target = 0;
  double time = 0.0;
  double residual_max = 0.0;
  int pulse_count = 0;
  double fidelity = 0.0;
  double seconds = 0.0;
  std::string status;  // "ok", or the error code name
};

/// One row per (epsilon, target), in input order. Fidelity is one minus the
/// distance between the aligned Z pulse and the ideal four-term rotation.
std::vector<SweepRow> run_sweep(const FrequencySet& freqs,
                                const SweepOptions& options);

inline constexpr const char* kSweepCsvHeader =
    "epsilon,solver,target,t,residual_max,pulse_count,fidelity,seconds,status";

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SweepSummary {
  std::vector<double> epsilons;      // in first-seen order
  std::vector<double> median_time;   // over successful rows
  /// Fraction of targets whose time does not decrease as epsilon shrinks.
  double monotone_fraction = 1.0;
  /// Slope of log(median t) against log(1/epsilon).
  std::optional<double> growth_exponent;
};

SweepSummary summarize(const std::vector<SweepRow>& rows);

std::string format_summary(const SweepSummary& summary);

}  // namespace alternator
