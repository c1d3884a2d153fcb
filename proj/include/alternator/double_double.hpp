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

#include <cmath>

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2. Error-free transforms after
// Dekker and Knuth; products use fma so the compiler must not contract or
// reassociate these expressions (no -ffast-math on this translation unit).

namespace alternator {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}  // NOLINT
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

namespace dd {

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble add(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble neg(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble sub(const DoubleDouble& a, const DoubleDouble& b) {
  return add(a, neg(b));
}

inline DoubleDouble mul(const DoubleDouble& a, double b) {
  DoubleDouble p = two_prod(a.hi, b);
  p.lo = std::fma(a.lo, b, p.lo);
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble mul(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble div(const DoubleDouble& a, double b) {
  const double q1 = a.hi / b;
  DoubleDouble r = sub(a, two_prod(q1, b));
  const double q2 = r.hi / b;
  r = sub(r, two_prod(q2, b));
  const double q3 = r.hi / b;
  return add(quick_two_sum(q1, q2), DoubleDouble(q3));
}

inline DoubleDouble div(const DoubleDouble& a, const DoubleDouble& b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = sub(a, mul(b, q1));
  const double q2 = r.hi / b.hi;
  r = sub(r, mul(b, q2));
  const double q3 = r.hi / b.hi;
  return add(quick_two_sum(q1, q2), DoubleDouble(q3));
}

// 2π to about 107 bits.
inline constexpr DoubleDouble kTwoPi{6.283185307179586232e+00,
                                     2.449293598294706414e-16};

/// Reduces `x` to the representative of x mod 2π in [-π, π]. Exact up to the
/// double-double representation error, for |x| < 2^52 · 2π.
inline double reduce_two_pi(const DoubleDouble& x) {
  const double k = std::nearbyint(x.hi / kTwoPi.hi);
  const DoubleDouble r = sub(x, mul(kTwoPi, k));
  return std::remainder(r.hi + r.lo, kTwoPi.hi);
}

/// (c · t) mod 2π for doubles c, t, with the product carried exactly.
inline double phase_mod_two_pi(double c, double t) {
  return reduce_two_pi(two_prod(c, t));
}

}  // namespace dd
}  // namespace alternator
