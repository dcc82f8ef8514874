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

#ifndef MCF_CF_HPP_
#define MCF_CF_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcf/exact.hpp"

namespace mcf {

inline constexpr std::size_t kDefaultMaxTerms = 10000;

// Partial quotients [a0; a1, a2, ...].
//
// Exactly one of three shapes:
//  * finite:    a0; preperiod (the whole word), value is rational, the last
//               quotient is >= 2 unless the word is just [a0];
//  * periodic:  a0; preperiod; period (nonempty), a quadratic irrational;
//  * truncated: a0; preperiod (a known prefix) of an irrational whose further
//               quotients are unknown.
struct CFExpansion {
  BigInt a0;
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;
  bool finite = false;
  bool truncated = false;

  bool is_periodic() const { return !period.empty(); }
  // Index of the first quotient inside the period.
  std::size_t period_start() const { return 1 + preperiod.size(); }
  // Whether a_j is known.
  bool has_quotient(std::size_t j) const;
  // a_j; throws kFiniteExpansion past the end of a finite or truncated word.
  BigInt quotient(std::size_t j) const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

// Expands a rational (finite word) or quadratic irrational (preperiod plus
// minimal period, detected by repetition of the exact complete quotient).
// Throws kHorizonExceeded when no period appears within `max_terms` quotients.
CFExpansion expand(const QuadraticSurd& x, std::size_t max_terms = kDefaultMaxTerms);

// Value of a finite or periodic word. Throws kFiniteExpansion for a
// truncated word.
QuadraticSurd evaluate(const CFExpansion& cf);

// The purely periodic number [b0; b1, ..., b_{k-1}, b0, b1, ...]. When the
// field is known, pass it as `field` to skip square-free extraction of the
// (possibly huge) discriminant.
QuadraticSurd purely_periodic_value(std::span<const BigInt> period, const BigInt& field = 0);

// The complete quotient alpha_nu = [a_nu; a_{nu+1}, ...].
QuadraticSurd tail(const CFExpansion& cf, std::size_t nu);

// Literal "cf:[a0;a1,a2,(p1,p2,...)]"; a trailing ",..." marks a truncated
// word, e.g. "cf:[0;1,2,3,...]". Finite words are canonicalized.
CFExpansion parse_cf_literal(std::string_view text);
std::string format_cf_literal(const CFExpansion& cf);

// One row of the convergent table.
struct ConvergentRecord {
  std::size_t nu = 0;
  BigInt p;
  BigInt q;
  QuadraticSurd xi;         // |q alpha - p|
  BigRational alpha_star;   // [0; a_nu, ..., a_1] = q_{nu-1} / q_nu
};

// Records for nu = 0..n. Both routes to alpha*_nu are evaluated and must
// agree (kInternalConsistency otherwise). Throws kFiniteExpansion when a
// rational alpha has fewer than n + 1 convergents.
std::vector<ConvergentRecord> convergents(const CFExpansion& cf, const QuadraticSurd& alpha,
                                          std::size_t n);

// Convergent records together with exact complete quotients of one number.
class ConvergentTable {
 public:
  ConvergentTable(const QuadraticSurd& alpha, std::size_t horizon,
                  std::size_t max_terms = kDefaultMaxTerms);

  const QuadraticSurd& alpha() const { return alpha_; }
  const CFExpansion& expansion() const { return cf_; }
  bool is_rational() const { return alpha_.is_rational(); }
  std::size_t horizon() const { return records_.size() - 1; }
  const std::vector<ConvergentRecord>& records() const { return records_; }
  // Throws kHorizonExceeded past the horizon.
  const ConvergentRecord& at(std::size_t nu) const;
  const ConvergentRecord& operator[](std::size_t nu) const { return records_[nu]; }
  BigInt quotient(std::size_t nu) const { return cf_.quotient(nu); }
  // alpha_nu for any nu (periodic), or up to the last index (rational).
  QuadraticSurd tail(std::size_t nu) const;

 private:
  QuadraticSurd alpha_;
  CFExpansion cf_;
  std::vector<ConvergentRecord> records_;
  std::vector<QuadraticSurd> head_tails_;  // alpha_0 .. before the period
  std::vector<QuadraticSurd> rotations_;   // one per period position
};

struct IdentityCheck {
  std::string name;
  bool applicable = false;
  bool passed = false;
};

struct IdentityReport {
  std::size_t nu = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// Exact checks at index nu of:
//   q_nu xi_nu = 1/(a*_nu + alpha_{nu+1})
//             = 1/(1/a*_{nu+1} + 1/alpha_{nu+2})
//             = a*_{nu+1} alpha_{nu+2} / (a*_{nu+1} + alpha_{nu+2}),
//   xi_nu / xi_{nu+1} = alpha_{nu+2},
//   xi_{nu-1} / xi_{nu+1} = alpha_{nu+2} + 1    (only when a_{nu+1} = 1).
// Requires an irrational table with nu + 1 <= horizon.
IdentityReport check_identities(const ConvergentTable& table, std::size_t nu);

}  // namespace mcf

#endif  // MCF_CF_HPP_
