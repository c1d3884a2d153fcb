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

#include "alternator/chain_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "alternator/error.hpp"
#include "text_util.hpp"

namespace alternator {

double FrequencySet::max() const {
  const auto v = as_array();
  return *std::max_element(v.begin(), v.end());
}

void FrequencySet::validate() const {
  const auto v = as_array();
  for (double c : v) {
    if (!std::isfinite(c) || c <= 0.0) {
      throw Error(ErrorCode::kInput,
                  "coupling frequencies must be finite and positive");
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) {
        throw Error(ErrorCode::kInput,
                    "coupling frequencies must be pairwise distinct");
      }
    }
  }
}

FrequencySet FrequencySet::from_array(const std::array<double, 4>& values) {
  FrequencySet f{values[0], values[1], values[2], values[3]};
  f.validate();
  return f;
}

bool operator==(const FrequencySet& a, const FrequencySet& b) {
  return a.as_array() == b.as_array();
}

void ChainConfig::validate() const {
  if (n_qubits < 2 || n_qubits % 2 != 0) {
    throw Error(ErrorCode::kInput,
                "chain length must be even and at least 2, got " +
                    std::to_string(n_qubits));
  }
  if (n_qubits > 62) {
    throw Error(ErrorCode::kSizeCap, "chain length above 62 is not supported");
  }
  couplings.validate();
}

ChainConfig make_chain(int n_qubits, FrequencySet couplings) {
  ChainConfig config{n_qubits, couplings};
  config.validate();
  return config;
}

const char* to_string(Term term) {
  switch (term) {
    case Term::kA:
      return "A";
    case Term::kB:
      return "B";
    case Term::kAB:
      return "AB";
    case Term::kBA:
      return "BA";
  }
  return "?";
}

std::array<int, 4> term_energies(const ChainConfig& config,
                                 std::uint64_t basis_index) {
  std::array<int, 4> e{0, 0, 0, 0};
  const int n = config.n_qubits;
  auto spin = [basis_index](int q) {
    return ((basis_index >> q) & 1u) ? -1 : 1;
  };
  for (int q = 0; q < n; ++q) {
    const int s = spin(q);
    if (q % 2 == 0) {
      e[0] += s;
      e[2] += s * spin(q + 1);
    } else {
      e[1] += s;
      if (q + 1 < n) e[3] += s * spin(q + 1);
    }
  }
  return e;
}

std::array<int, 4> term_weights(const ChainConfig& config) {
  return {config.n_ab_pairs(), config.n_ab_pairs(), config.n_ab_pairs(),
          config.n_ba_pairs()};
}

namespace {

std::uint64_t bits_to_index(const ChainConfig& config,
                            std::span<const std::uint8_t> bits) {
  config.validate();
  if (bits.size() != static_cast<std::size_t>(config.n_qubits)) {
    throw Error(ErrorCode::kInput,
                "bit assignment has length " + std::to_string(bits.size()) +
                    ", chain has " + std::to_string(config.n_qubits) +
                    " qubits");
  }
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] > 1) throw Error(ErrorCode::kInput, "bits must be 0 or 1");
    index |= static_cast<std::uint64_t>(bits[q]) << q;
  }
  return index;
}

}  // namespace

double term_energy(const ChainConfig& config, Term term,
                   std::span<const std::uint8_t> bits) {
  return term_energies(config, bits_to_index(config, bits))
      [static_cast<int>(term)];
}

double diagonal_energy(const ChainConfig& config,
                       std::span<const std::uint8_t> bits) {
  const auto e = term_energies(config, bits_to_index(config, bits));
  const auto c = config.couplings.as_array();
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += c[k] * e[k];
  return sum;
}

void PulseSchedule::append(const PulseSchedule& other) {
  pulses.insert(pulses.end(), other.pulses.begin(), other.pulses.end());
}

void PulseSchedule::validate() const {
  for (const Pulse& p : pulses) {
    if (!std::isfinite(p.duration) || p.duration < 0.0) {
      throw Error(ErrorCode::kInput,
                  "pulse durations must be finite and non-negative");
    }
  }
}

void PhaseTarget::validate() const {
  for (double phi : phases) {
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
      throw Error(ErrorCode::kInput, "target phases must lie in [0, 2pi)");
    }
  }
  if (!(epsilon > 0.0 && epsilon < std::numbers::pi)) {
    throw Error(ErrorCode::kInput, "epsilon must lie in (0, pi)");
  }
}

PhaseTarget make_target(const std::array<double, 4>& phases, double epsilon) {
  PhaseTarget target;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int k = 0; k < 4; ++k) {
    if (!std::isfinite(phases[k])) {
      throw Error(ErrorCode::kInput, "target phases must be finite");
    }
    double phi = std::fmod(phases[k], two_pi);
    if (phi < 0.0) phi += two_pi;
    if (phi >= two_pi) phi = 0.0;
    target.phases[k] = phi;
  }
  target.epsilon = epsilon;
  target.validate();
  return target;
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string emit_schedule(const PulseSchedule& schedule) {
  std::string out;
  for (const Pulse& p : schedule.pulses) {
    switch (p.generator) {
      case Generator::kZEvolution:
        out += "Z " + format_double(p.duration) + "\n";
        break;
      case Generator::kXEvolution:
        out += "X " + format_double(p.duration) + "\n";
        break;
      case Generator::kHadamardLayer:
        out += "HAD\n";
        break;
    }
  }
  return out;
}

PulseSchedule parse_schedule(const std::string& text) {
  PulseSchedule schedule;
  int line_no = 0;
  for (const auto& line : text_util::split_lines(text)) {
    ++line_no;
    const auto tokens = text_util::tokenize(line);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    if (head.text == "HAD") {
      if (tokens.size() != 1) {
        throw ParseError(line_no, tokens[1].column, "HAD takes no operand");
      }
      schedule.pulses.push_back(Pulse::hadamard());
      continue;
    }
    if (head.text != "Z" && head.text != "X") {
      throw ParseError(line_no, head.column,
                       "unknown pulse '" + head.text + "'");
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, head.column,
                       "expected exactly one duration after " + head.text);
    }
    const double d = text_util::parse_real(tokens[1], line_no);
    if (!std::isfinite(d) || d < 0.0) {
      throw ParseError(line_no, tokens[1].column,
                       "duration must be finite and non-negative");
    }
    schedule.pulses.push_back(head.text == "Z" ? Pulse::z(d) : Pulse::x(d));
  }
  return schedule;
}

}  // namespace alternator
