// Copyright 2026 The mcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The diagonal function mu_alpha(t), its segment peaks, and the two-variable
// functions G and F that give those peaks in closed form.

#ifndef MCF_MINKOWSKI_HPP_
#define MCF_MINKOWSKI_HPP_

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "mcf/cf.hpp"
#include "mcf/error.hpp"
#include "mcf/exact.hpp"
#include "mcf/legendre.hpp"

namespace mcf {

inline bool is_zero(const QuadraticSurd& x) { return x.is_zero(); }
inline bool is_zero(const BigRational& x) { return x == 0; }
inline bool is_zero(const RationalInterval& x) { return x.contains_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

template <class T>
T constant(long v) {
  if constexpr (std::is_same_v<T, RationalInterval>) {
    return RationalInterval::point(BigRational(v));
  } else {
    return T(v);
  }
}

// G(x, y) = (x + y + 1) / 4.
template <class T>
T G(const T& x, const T& y) {
  return (x + y + constant<T>(1)) / constant<T>(4);
}

// F(x, y) = (1 - xy)^2 / (4 (1 + xy)(1 - x)(1 - y)); kDomain at the poles
// x = 1, y = 1, xy = -1 (for intervals: whenever a factor may vanish).
template <class T>
T F(const T& x, const T& y) {
  const T one = constant<T>(1);
  const T xy = x * y;
  const T a = one + xy;
  const T b = one - x;
  const T c = one - y;
  if (is_zero(a) || is_zero(b) || is_zero(c)) fail(ErrorKind::kDomain, "F evaluated at a pole");
  const T num = one - xy;
  return num * num / (constant<T>(4) * a * b * c);
}

// (x, y) in Omega: 0 <= x, y < 1, x + 1/y >= 2 and 1/x + y >= 2, reading
// 1/0 as +infinity.
bool omega_contains(const BigRational& x, const BigRational& y);
bool omega_contains(const QuadraticSurd& x, const QuadraticSurd& y);

// psi_alpha(t) = min over 1 <= x <= t of ||x alpha||, read off the convergent
// table. kDomain for t < 1; kHorizonExceeded when the table stops before t.
QuadraticSurd psi_eval(const ConvergentTable& table, const BigRational& t);

// Linear interpolation of (Q_n, ||Q_n alpha||) at t. kOutsideChain when t is
// outside [first_q, last_q].
QuadraticSurd mu_eval(const LegendreChain& chain, const BigRational& t);

// The hyperbolic rotation (t, mu) -> (t / d, mu * d); it fixes every
// hyperbola t * mu = const.
template <class T>
std::pair<T, T> hyperbolic_rotate(const T& t, const T& mu, const T& d) {
  return {t / d, mu * d};
}

struct PeakWitness {
  QuadraticSurd d_squared;    // (Q_right - Q_left) / (err_left - err_right)
  QuadraticSurd closed_form;  // (d err_left + Q_left / d)^2 / 4
  bool right_below = false;   // d^2 err_right / Q_right <= 1
  bool left_above = false;    // 1 <= d^2 err_left / Q_left
};

struct SegmentPeak {
  QuadraticSurd value;
  PeakWitness witness;
  QuadraticSurd t_star;   // argmax of t * mu on the segment
  QuadraticSurd mu_star;  // mu at t_star (equal to t_star / d^2)
};

// Peak of t * mu over the chain segment described by `gap`, computed from the
// endpoints in closed form and from G (skip) or F (adjacent) at
// (alpha*_nu, 1/alpha_{nu+2}) resp. (alpha*_{nu+1}, 1/alpha_{nu+2}). Throws
// kInternalConsistency if the two disagree or the endpoints fail to straddle
// the diagonal after rotation.
SegmentPeak segment_peak(const ConvergentTable& table, const GapClass& gap);

struct MuSegment {
  BigInt left_q;
  QuadraticSurd left_err;
  BigInt right_q;
  QuadraticSurd right_err;
  GapClass gap;
  QuadraticSurd peak;
};

std::vector<MuSegment> mu_segments(const ConvergentTable& table, const LegendreChain& chain);

// The hyperbolic parameters and closed-form maxima over the segments
// [A_{nu-1}, A_{nu+1}] (index 1) and [A_nu, A_{nu+1}] (index 2), A_j = (q_j, xi_j).
// d squared is returned; d itself lies outside the field.
QuadraticSurd d1_squared(const ConvergentTable& table, std::size_t nu);
QuadraticSurd d2_squared(const ConvergentTable& table, std::size_t nu);
QuadraticSurd m1(const ConvergentTable& table, std::size_t nu);
QuadraticSurd m2(const ConvergentTable& table, std::size_t nu);
// (d^2 xi_right / q_right <= 1, 1 <= d^2 xi_left / q_left) for each segment.
std::pair<bool, bool> straddle1(const ConvergentTable& table, std::size_t nu);
std::pair<bool, bool> straddle2(const ConvergentTable& table, std::size_t nu);

}  // namespace mcf

#endif  // MCF_MINKOWSKI_HPP_
