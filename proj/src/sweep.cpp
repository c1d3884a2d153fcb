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

#include "alternator/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "alternator/error.hpp"
#include "alternator/evolution.hpp"

namespace alternator {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double pulse_fidelity(const ChainConfig& config, double t,
                      const std::array<double, 4>& phases) {
  const PulseSchedule pulse{{Pulse::z(t)}};
  const DenseMatrix actual = schedule_unitary(config, pulse);
  const DenseMatrix ideal = columns_of(config.n_qubits, [&](StateVector s) {
    apply_z_rotation_layer(s, config, phases);
    return s;
  });
  return 1.0 - unitary_distance(actual, ideal);
}

}  // namespace

TargetSpec parse_target_spec(const std::string& text) {
  const auto bad = [&] {
    return Error(ErrorCode::kInput,
                 "targets must look like random:<count>:<seed>, got '" + text + "'");
  };
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) != 0) throw bad();
  const std::size_t colon = text.find(':', prefix.size());
  if (colon == std::string::npos) throw bad();
  TargetSpec spec;
  try {
    std::size_t used = 0;
    const std::string count = text.substr(prefix.size(), colon - prefix.size());
    spec.count = std::stoi(count, &used);
    if (used != count.size()) throw bad();
    const std::string seed = text.substr(colon + 1);
    if (seed.empty() || !std::isdigit(static_cast<unsigned char>(seed.front()))) throw bad();
    spec.seed = std::stoull(seed, &used);
    if (used != seed.size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (spec.count < 1) throw bad();
  return spec;
}

std::vector<std::array<double, 4>> random_targets(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<double, 4>> out(static_cast<std::size_t>(count));
  for (auto& target : out) {
    for (double& phi : target) {
      // 53 random bits mapped to [0, 1) without library-specific rounding.
      phi = 2.0 * std::numbers::pi * std::ldexp(static_cast<double>(rng() >> 11), -53);
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(const FrequencySet& freqs,
                                const SweepOptions& options) {
  freqs.validate();
  const ChainConfig config = make_chain(options.fidelity_qubits, freqs);
  const auto targets = random_targets(options.targets.count, options.targets.seed);
  std::vector<std::pair<double, std::size_t>> jobs;
  for (double eps : options.eps_list) {
    for (std::size_t k = 0; k < targets.size(); ++k) jobs.emplace_back(eps, k);
  }
  std::vector<SweepRow> rows(jobs.size());
  auto solve = [&](std::size_t j) {
    const auto [eps, k] = jobs[j];
    SweepRow& row = rows[j];
    row.epsilon = eps;
    row.solver = options.solver;
    row.target = static_cast<int>(k);
    const PhaseTarget target = make_target(targets[k], eps);
    const auto start = std::chrono::steady_clock::now();
    try {
      AlignmentResult r;
      if (options.solver == SolverKind::kGrid) {
        const double dt = options.dt.value_or(0.5 * target.tolerance() / freqs.max());
        r = find_time_grid(freqs, target, options.t_max, dt);
      } else {
        r = find_time_lattice(freqs, target);
      }
      row.time = r.time;
      row.residual_max = r.max_residual();
      row.pulse_count = 1;
      row.fidelity = pulse_fidelity(config, r.time, target.phases);
      row.status = "ok";
    } catch (const Error& e) {
      row.time = std::nan("");
      row.residual_max = std::nan("");
      row.fidelity = std::nan("");
      row.status = to_string(e.code());
    }
    if (options.timing) {
      row.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) solve(j);
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, jobs.size() + 1);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.epsilon) << ',' << to_string(r.solver) << ',' << r.target
        << ',' << format_double(r.time) << ',' << format_double(r.residual_max)
        << ',' << r.pulse_count << ',' << format_double(r.fidelity) << ','
        << format_double(r.seconds) << ',' << r.status << '\n';
  }
  return out.str();
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary summary;
  std::map<double, std::vector<double>> times;
  std::map<int, std::vector<std::pair<double, double>>> per_target;
  for (const auto& r : rows) {
    if (std::find(summary.epsilons.begin(), summary.epsilons.end(), r.epsilon) ==
        summary.epsilons.end()) {
      summary.epsilons.push_back(r.epsilon);
    }
    if (r.status != "ok") continue;
    times[r.epsilon].push_back(r.time);
    per_target[r.target].emplace_back(r.epsilon, r.time);
  }
  for (double eps : summary.epsilons) {
    const auto it = times.find(eps);
    summary.median_time.push_back(it == times.end() ? std::nan("") : median(it->second));
  }

  int monotone = 0;
  int counted = 0;
  for (auto& [target, points] : per_target) {
    if (points.size() < 2) continue;
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    ++counted;
    bool ok = true;
    for (std::size_t i = 1; i < points.size(); ++i) {
      ok = ok && points[i].second >= points[i - 1].second;
    }
    monotone += ok ? 1 : 0;
  }
  if (counted > 0) summary.monotone_fraction = static_cast<double>(monotone) / counted;

  // Least-squares slope of log t against log(1/eps), skipping t = 0.
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < summary.epsilons.size(); ++i) {
    const double t = summary.median_time[i];
    if (std::isfinite(t) && t > 0.0) {
      pts.emplace_back(std::log(1.0 / summary.epsilons[i]), std::log(t));
    }
  }
  if (pts.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= pts.size();
    my /= pts.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
    }
    if (sxx > 0.0) summary.growth_exponent = sxy / sxx;
  }
  return summary;
}

std::string format_summary(const SweepSummary& summary) {
  std::ostringstream out;
  for (std::size_t i = 0; i < summary.epsilons.size(); ++i) {
    out << "median_t[eps=" << format_double(summary.epsilons[i])
        << "]=" << format_double(summary.median_time[i]) << '\n';
  }
  out << "monotone_fraction=" << format_double(summary.monotone_fraction) << '\n';
  out << "growth_exponent="
      << (summary.growth_exponent ? format_double(*summary.growth_exponent) : "n/a")
      << '\n';
  return out.str();
}

}  // namespace alternator
