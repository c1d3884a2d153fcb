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

#include "alternator/phase_align.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include "alternator/double_double.hpp"
#include "alternator/error.hpp"
#include "alternator/lattice.hpp"

namespace alternator {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

const char* to_string(SolverKind solver) {
  return solver == SolverKind::kGrid ? "GRID" : "LATTICE";
}

SolverKind solver_from_string(const std::string& name) {
  if (name == "grid" || name == "GRID") return SolverKind::kGrid;
  if (name == "lattice" || name == "LATTICE") return SolverKind::kLattice;
  throw Error(ErrorCode::kInput, "unknown solver '" + name + "'");
}

double AlignmentResult::max_residual() const {
  return *std::max_element(residuals.begin(), residuals.end());
}

std::array<double, 4> residuals(const FrequencySet& freqs, double t,
                                const PhaseTarget& target) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::kInput, "time must be finite and non-negative");
  }
  const auto c = freqs.as_array();
  std::array<double, 4> r{};
  for (int k = 0; k < 4; ++k) {
    const DoubleDouble phase =
        dd::sub(dd::two_prod(c[k], t), DoubleDouble(target.phases[k]));
    r[k] = std::abs(dd::reduce_two_pi(phase));
  }
  return r;
}

AlignmentResult find_time_grid(const FrequencySet& freqs,
                               const PhaseTarget& target, double t_max,
                               double dt) {
  freqs.validate();
  target.validate();
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::kInput, "t_max must be positive");
  }
  if (!(dt > 0.0) || !(dt < target.epsilon / (4.0 * freqs.max()))) {
    throw Error(ErrorCode::kInput,
                "grid step must satisfy 0 < dt < epsilon / (4 max frequency)");
  }
  const auto c = freqs.as_array();
  const double tol = target.tolerance();
  // Plain double products lose ~|c t| ulp; widen the cheap test by that much
  // and certify survivors exactly so no qualifying step is skipped.
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                           (freqs.max() * t_max + kTwoPi) +
                       1e-12;
  const auto steps = static_cast<std::uint64_t>(std::floor(t_max / dt));
  for (std::uint64_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    bool candidate = true;
    for (int i = 0; i < 4 && candidate; ++i) {
      const double r = std::remainder(c[i] * t - target.phases[i], kTwoPi);
      candidate = std::abs(r) < tol + slack;
    }
    if (!candidate) continue;
    const auto exact = residuals(freqs, t, target);
    if (std::all_of(exact.begin(), exact.end(),
                    [tol](double r) { return r < tol; })) {
      return {t, exact, SolverKind::kGrid};
    }
  }
  throw Error(ErrorCode::kNoSolutionInRange,
              "no grid time up to t_max meets epsilon/4 on all four phases");
}

namespace {

// Time-shift refinement: given signed phase errors d_i at a base time, find
// the shift s minimizing max_i |d_i + c_i s| (convex, piecewise linear).
double best_shift(const std::array<double, 4>& d, const std::array<double, 4>& c,
                  double half_width) {
  auto worst = [&](double s) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(d[i] + c[i] * s));
    return m;
  };
  double lo = -half_width;
  double hi = half_width;
  for (int iter = 0; iter < 200; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (worst(m1) <= worst(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

AlignmentResult find_time_lattice(const FrequencySet& freqs,
                                  const PhaseTarget& target) {
  freqs.validate();
  target.validate();
  const auto c = freqs.as_array();
  const double tol = target.tolerance();
  auto certified = [&](double t) -> std::optional<AlignmentResult> {
    if (!(t >= 0.0) || !std::isfinite(t)) return std::nullopt;
    const auto r = residuals(freqs, t, target);
    if (std::all_of(r.begin(), r.end(), [tol](double x) { return x < tol; })) {
      return AlignmentResult{t, r, SolverKind::kLattice};
    }
    return std::nullopt;
  };
  if (auto zero = certified(0.0)) return *zero;

  // Pin the omega_a phase: t(m) = (2π m + φ_a) / ω_a. The other three phases
  // in turns are r_i m + const with r_i = c_i / ω_a, so a good m is an
  // integer whose multiples of (r_1, r_2, r_3) land near a fixed point of the
  // 3-torus. That is a closest-vector problem in the 4-d lattice generated by
  // (σ, r_1, r_2, r_3) and the unit vectors e_1, e_2, e_3, where σ sets the
  // admissible range of m around a centre M.
  std::array<DoubleDouble, 4> ratio;
  for (int i = 1; i < 4; ++i) ratio[i] = dd::div(DoubleDouble(c[i]), c[0]);
  const double delta = tol / kTwoPi;  // tolerance in turns
  Eigen::VectorXd offset(4);
  offset(0) = 0.0;
  for (int i = 1; i < 4; ++i) {
    const DoubleDouble shift = dd::mul(ratio[i], target.phases[0]);
    const double turns =
        (dd::sub(DoubleDouble(target.phases[i]), shift)).value() / kTwoPi;
    offset(i) = turns - std::nearbyint(turns);
  }

  auto base_time = [&](double m) {
    const DoubleDouble num =
        dd::add(dd::mul(dd::kTwoPi, m), DoubleDouble(target.phases[0]));
    return dd::div(num, c[0]);
  };

  // Expected number of lattice points in the admissible box is about
  // 16 δ³ M; start near one and widen geometrically.
  double centre = std::max(4.0, 1.0 / (16.0 * delta * delta * delta));
  constexpr double kMaxCentre = 1e15;
  for (int attempt = 0; attempt < 48 && centre <= kMaxCentre; ++attempt) {
    const double sigma = delta / centre;
    const lattice::Embedding embed = [&](const lattice::IntVector& k) {
      Eigen::VectorXd v(4);
      const auto m = static_cast<double>(k(0));
      v(0) = sigma * m;
      for (int i = 1; i < 4; ++i) {
        v(i) = dd::add(dd::mul(ratio[i], m), DoubleDouble(static_cast<double>(k(i))))
                   .value();
      }
      return v;
    };
    const lattice::ReducedBasis basis = lattice::lll_reduce(4, embed);
    Eigen::VectorXd goal = offset;
    goal(0) = delta;  // = sigma * centre
    const auto points = lattice::enumerate_near(basis, goal, 2.5 * delta);

    std::optional<AlignmentResult> best;
    for (const auto& k : points) {
      if (k(0) < 0) continue;
      const auto m = static_cast<double>(k(0));
      const DoubleDouble t0 = base_time(m);
      std::array<double, 4> d{};
      for (int i = 0; i < 4; ++i) {
        d[i] = dd::reduce_two_pi(
            dd::sub(dd::mul(t0, c[i]), DoubleDouble(target.phases[i])));
      }
      const double s = best_shift(d, c, 2.0 * tol / c[0]);
      const double t = dd::add(t0, DoubleDouble(s)).value();
      if (auto r = certified(t)) {
        if (!best || r->time < best->time) best = r;
      }
    }
    if (best) return *best;
    centre *= 1.6;
  }
  throw Error(ErrorCode::kSolverFailure,
              "lattice search could not certify a time within epsilon/4");
}

AlignmentResult find_time(SolverKind solver, const FrequencySet& freqs,
                          const PhaseTarget& target) {
  if (solver == SolverKind::kLattice) return find_time_lattice(freqs, target);
  // Grid defaults: half the largest admissible step, horizon 1e6.
  const double dt = 0.5 * target.epsilon / (4.0 * freqs.max());
  return find_time_grid(freqs, target, 1e6, dt);
}

double verify_isolation(const ChainConfig& config,
                        const AlignmentResult& result, Term active,
                        double phi) {
  config.validate();
  if (config.n_qubits > 14) {
    throw Error(ErrorCode::kSizeCap,
                "isolation check is limited to 14 qubits");
  }
  const auto c = config.couplings.as_array();
  std::array<double, 4> theta{};
  for (int k = 0; k < 4; ++k) theta[k] = dd::phase_mod_two_pi(c[k], result.time);
  const double phi_reduced = std::remainder(phi, kTwoPi);
  const std::uint64_t dim = std::uint64_t{1} << config.n_qubits;
  double worst = 0.0;
  for (std::uint64_t z = 0; z < dim; ++z) {
    const auto e = term_energies(config, z);
    double actual = 0.0;
    for (int k = 0; k < 4; ++k) actual += e[k] * theta[k];
    const double ideal = phi_reduced * e[static_cast<int>(active)];
    worst = std::max(worst, 2.0 * std::abs(std::sin(0.5 * (actual - ideal))));
  }
  return worst;
}

std::string format_alignment(const AlignmentResult& result) {
  std::string out = "t=" + format_double(result.time) + " residuals=";
  for (int k = 0; k < 4; ++k) {
    if (k) out += ",";
    out += format_double(result.residuals[k]);
  }
  out += " solver=";
  out += to_string(result.solver);
  return out;
}

}  // namespace alternator
