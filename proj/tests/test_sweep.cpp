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

#include <cmath>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "alternator/error.hpp"
#include "alternator/sweep.hpp"

using namespace alternator;

namespace {

SweepRow row(double eps, int target, double t) {
  SweepRow r;
  r.epsilon = eps;
  r.target = target;
  r.time = t;
  r.status = "ok";
  return r;
}

}  // namespace

TEST_CASE("target specs") {
  const auto spec = parse_target_spec("random:20:7");
  CHECK(spec.count == 20);
  CHECK(spec.seed == 7);
  for (const char* bad : {"random:0:1", "random:3", "fixed:3:1", "random:x:1", "random:3:-1"}) {
    CHECK_THROWS_AS(parse_target_spec(bad), Error);
  }
}

TEST_CASE("random targets are seeded and in range") {
  const auto a = random_targets(50, 3);
  const auto b = random_targets(50, 3);
  const auto c = random_targets(50, 4);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& t : a) {
    for (double phi : t) {
      CHECK(phi >= 0.0);
      CHECK(phi < 2 * std::numbers::pi);
    }
  }
}

TEST_CASE("lattice sweep rows satisfy the alignment contract") {
  SweepOptions opts;
  opts.eps_list = {0.4, 0.2};
  opts.targets = {4, 1};
  const auto rows = run_sweep(FrequencySet{}, opts);
  REQUIRE(rows.size() == 8);
  for (const auto& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.residual_max < r.epsilon / 4);
    CHECK(r.pulse_count == 1);
    CHECK(r.fidelity >= 1.0 - 7 * r.residual_max - 1e-12);
    CHECK(r.seconds == 0.0);
    CHECK(r.solver == SolverKind::kLattice);
  }
  CHECK(rows[0].epsilon == 0.4);
  CHECK(rows[4].epsilon == 0.2);
}

TEST_CASE("grid sweep and failure rows") {
  SweepOptions opts;
  opts.eps_list = {0.8};
  opts.targets = {3, 2};
  opts.solver = SolverKind::kGrid;
  opts.timing = true;
  const auto rows = run_sweep(FrequencySet{}, opts);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.residual_max < 0.2);
    CHECK(r.seconds >= 0.0);
  }

  opts.eps_list = {0.05};
  opts.t_max = 1.0;
  const auto failed = run_sweep(FrequencySet{}, opts);
  REQUIRE(failed.size() == 3);
  for (const auto& r : failed) {
    CHECK(r.status == "NO_SOLUTION_IN_RANGE");
    CHECK(std::isnan(r.time));
  }
}

TEST_CASE("CSV layout") {
  const std::string csv = sweep_csv({row(0.4, 0, 12.5)});
  std::istringstream in(csv);
  std::string header;
  std::string line;
  std::getline(in, header);
  std::getline(in, line);
  CHECK(header == kSweepCsvHeader);
  CHECK(line.rfind("0.4,LATTICE,0,12.5,", 0) == 0);
  CHECK(line.substr(line.size() - 3) == ",ok");
}

TEST_CASE("summary statistics") {
  std::vector<SweepRow> rows;
  const double t8[] = {1, 2, 3, 4};
  const double t4[] = {2, 4, 6, 3};
  const double t2[] = {4, 8, 12, 16};
  for (int k = 0; k < 4; ++k) {
    rows.push_back(row(0.8, k, t8[k]));
    rows.push_back(row(0.4, k, t4[k]));
    rows.push_back(row(0.2, k, t2[k]));
  }
  const auto s = summarize(rows);
  REQUIRE(s.epsilons.size() == 3);
  CHECK(s.epsilons[0] == 0.8);
  CHECK(s.median_time[0] == doctest::Approx(2.5));
  CHECK(s.median_time[1] == doctest::Approx(3.5));
  CHECK(s.median_time[2] == doctest::Approx(10.0));
  CHECK(s.monotone_fraction == doctest::Approx(0.75));
  REQUIRE(s.growth_exponent);
  CHECK(*s.growth_exponent > 0.0);
  const std::string text = format_summary(s);
  CHECK(text.find("monotone_fraction=0.75") != std::string::npos);
  CHECK(text.find("growth_exponent=") != std::string::npos);

  std::vector<SweepRow> exact;
  for (double eps : {1.0, 0.5, 0.25}) exact.push_back(row(eps, 0, 1.0 / (eps * eps)));
  CHECK(*summarize(exact).growth_exponent == doctest::Approx(2.0));
  CHECK_FALSE(summarize({row(0.4, 0, 1.0)}).growth_exponent);
}
