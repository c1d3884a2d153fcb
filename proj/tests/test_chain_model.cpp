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
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "alternator/chain_model.hpp"
#include "alternator/error.hpp"
#include "oracle.hpp"

using namespace alternator;

TEST_CASE("default couplings are the square roots of 1, 2, 3, 5") {
  const FrequencySet f;
  CHECK(f.omega_a == 1.0);
  CHECK(f.omega_b == std::sqrt(2.0));
  CHECK(f.gamma_ab == std::sqrt(3.0));
  CHECK(f.gamma_ba == std::sqrt(5.0));
  CHECK(f.max() == std::sqrt(5.0));
  CHECK_NOTHROW(f.validate());
}

TEST_CASE("frequency validation rejects degenerate sets") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& values : std::vector<std::array<double, 4>>{
           {1, 1, 2, 3}, {-1, 2, 3, 4}, {0, 2, 3, 4}, {1, 2, nan, 4},
           {1, 2, 3, std::numeric_limits<double>::infinity()}}) {
    CHECK_THROWS_AS(FrequencySet::from_array(values).validate(), Error);
  }
}

TEST_CASE("chain sizes must be even and within range") {
  CHECK_NOTHROW(make_chain(2));
  CHECK_NOTHROW(make_chain(62));
  for (int n : {0, 1, 3, 7, 64}) CHECK_THROWS_AS(make_chain(n), Error);
  try {
    make_chain(3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInput);
  }
}

TEST_CASE("term weights count sites and bonds") {
  for (int n = 2; n <= 12; n += 2) {
    const auto w = term_weights(make_chain(n));
    CHECK(w == std::array<int, 4>{n / 2, n / 2, n / 2, n / 2 - 1});
  }
}

TEST_CASE("term energies on hand-worked states") {
  const auto c2 = make_chain(2);
  CHECK(term_energies(c2, 0) == std::array<int, 4>{1, 1, 1, 0});
  CHECK(term_energies(c2, 1) == std::array<int, 4>{-1, 1, -1, 0});
  CHECK(term_energies(c2, 3) == std::array<int, 4>{-1, -1, 1, 0});
  const auto c4 = make_chain(4);
  // bits (q0..q3) = 0,1,1,0: spins +,-,-,+
  CHECK(term_energies(c4, 0b0110) == std::array<int, 4>{0, 0, -2, 1});
  const std::vector<std::uint8_t> bits{0, 1, 1, 0};
  CHECK(term_energy(c4, Term::kBA, bits) == 1.0);
  CHECK_THROWS_AS(term_energy(c4, Term::kA, std::vector<std::uint8_t>{0, 1}), Error);
}

TEST_CASE("diagonal energy equals the dense Hamiltonian diagonal") {
  for (int n : {2, 4, 6}) {
    const auto config = make_chain(n);
    const auto h = oracle::chain_hamiltonian(config);
    const auto c = config.couplings.as_array();
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
      std::vector<std::uint8_t> bits(n);
      for (int q = 0; q < n; ++q) bits[q] = (z >> q) & 1u;
      const double e = diagonal_energy(config, bits);
      CHECK(std::abs(e - h(z, z).real()) < 1e-12);
      const auto terms = term_energies(config, z);
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += c[k] * terms[k];
      CHECK(std::abs(e - sum) < 1e-12);
    }
  }
}

TEST_CASE("global spin flip negates single-site terms and keeps bond terms") {
  std::mt19937_64 rng(11);
  for (int n : {2, 4, 8, 12}) {
    const auto config = make_chain(n);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint64_t z = rng() & mask;
      const auto a = term_energies(config, z);
      const auto b = term_energies(config, z ^ mask);
      CHECK(a[0] == -b[0]);
      CHECK(a[1] == -b[1]);
      CHECK(a[2] == b[2]);
      CHECK(a[3] == b[3]);
      const auto w = term_weights(config);
      for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(a[k]) <= w[k]);
        CHECK((a[k] - w[k]) % 2 == 0);
      }
    }
  }
}

TEST_CASE("make_target folds phases into [0, 2pi)") {
  const double two_pi = 2.0 * std::numbers::pi;
  const auto t = make_target({-0.5, two_pi, 7.0, 0.0}, 0.2);
  CHECK(t.phases[0] == doctest::Approx(two_pi - 0.5));
  CHECK(t.phases[1] == 0.0);
  CHECK(t.phases[2] == doctest::Approx(7.0 - two_pi));
  CHECK(t.tolerance() == doctest::Approx(0.05));
  CHECK_THROWS_AS(make_target({0, 0, 0, 0}, 0.0), Error);
  CHECK_THROWS_AS(make_target({0, 0, 0, 0}, 4.0), Error);
  CHECK_THROWS_AS(make_target({std::nan(""), 0, 0, 0}, 0.1), Error);
}

TEST_CASE("schedule text round-trips exactly") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1e9);
  for (int trial = 0; trial < 100; ++trial) {
    PulseSchedule s = oracle::random_schedule(30, rng);
    for (auto& p : s.pulses) {
      if (p.generator == Generator::kZEvolution) p.duration = u(rng);
    }
    CHECK(parse_schedule(emit_schedule(s)) == s);
  }
  CHECK(parse_schedule("").empty());
  CHECK(emit_schedule(PulseSchedule{}).empty());
}

TEST_CASE("schedule parser accepts comments and blank lines") {
  const auto s = parse_schedule("# header\n\nZ 1.5   # trailing\nX +0.25\nHAD\n");
  REQUIRE(s.size() == 3);
  CHECK(s.pulses[0] == Pulse::z(1.5));
  CHECK(s.pulses[1] == Pulse::x(0.25));
  CHECK(s.pulses[2] == Pulse::hadamard());
}

TEST_CASE("schedule parser reports line and column") {
  auto expect = [](const std::string& text, int line, int column) {
    try {
      parse_schedule(text);
      FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::kParse);
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  expect("Z abc", 1, 3);
  expect("Z 1\nX 2\nY 3", 3, 1);
  expect("Z 1\n  Z -2", 2, 5);
  expect("HAD 1", 1, 5);
  expect("Z", 1, 1);
  expect("Z 1 2", 1, 1);
  expect("Z inf", 1, 3);
}

TEST_CASE("schedule validation rejects negative durations") {
  PulseSchedule s;
  s.pulses.push_back(Pulse::z(-1.0));
  CHECK_THROWS_AS(s.validate(), Error);
  s.pulses[0] = Pulse::x(std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(s.validate(), Error);
}
