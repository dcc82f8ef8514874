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

// The constants lambda(alpha), d(alpha) and m(alpha): exact for quadratic
// irrationals, windowed estimates for truncated words, plus the extremal
// word generators and a sampler over periodic words.

#ifndef MCF_SPECTRA_HPP_
#define MCF_SPECTRA_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mcf/cf.hpp"
#include "mcf/exact.hpp"
#include "mcf/legendre.hpp"

namespace mcf {

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr std::size_t kDefaultWindow = 6;

struct SpectrumValue {
  std::optional<QuadraticSurd> exact;
  RationalInterval enclosure;

  // Midpoint of the enclosure; the value itself when exact.
  double estimate() const;
};

// One segment peak: a limit value per period position for exact reports, or
// the enclosure at convergent index nu for windowed ones.
struct PeakTerm {
  std::size_t nu = 0;
  GapKind kind = GapKind::kAdjacent;
  SpectrumValue value;
};

struct SpectraReport {
  SpectrumValue lambda;
  SpectrumValue dirichlet;
  SpectrumValue m;
  // m restricted to adjacent resp. skip gaps; empty when no such gap occurs.
  std::optional<SpectrumValue> m_adjacent;
  std::optional<SpectrumValue> m_skip;
  bool exact = false;
  // False for truncated words: liminf and limsup are not determined by any
  // finite prefix.
  bool convergence_guaranteed = false;
  std::size_t horizon_used = 0;
  std::vector<PeakTerm> peaks;
  // Truncated words only: enclosures of 1/(alpha*_nu + alpha_{nu+1}) and
  // alpha_{nu+1}/(alpha*_nu + alpha_{nu+1}) for nu = 1, 2, ...
  std::vector<RationalInterval> running_lambda;
  std::vector<RationalInterval> running_dirichlet;
};

// Exact report for an irrational quadratic surd. Throws kNotDefined for
// rationals. Enclosures are 2^-precision_bits wide.
SpectraReport spectra_of(const QuadraticSurd& alpha, unsigned precision_bits = kDefaultPrecisionBits);

// Periodic words go through the exact path; truncated words get windowed
// estimates over the last `window` decided terms; finite words throw
// kNotDefined.
SpectraReport spectra_of(const CFExpansion& cf, unsigned precision_bits = kDefaultPrecisionBits,
                         std::size_t window = kDefaultWindow);

SpectrumValue lambda_of(const QuadraticSurd& alpha);
SpectrumValue dirichlet_of(const QuadraticSurd& alpha);
SpectrumValue m_of(const QuadraticSurd& alpha);

// [0; a_1, a_2, ...] truncated after the given quotients, which must be
// strictly increasing positive integers (kInvalidSpec otherwise).
CFExpansion make_alpha_minus(const std::vector<BigInt>& quotients);
// [0; 1, 1, g_1, 1, 1, g_2, ...] truncated after `terms` quotients; the g_k
// must be strictly increasing, at least 2, and numerous enough.
CFExpansion make_alpha_plus(const std::vector<BigInt>& gap_values, std::size_t terms);

enum class Growth { kLinear, kPow2, kConstant };
// g(first), g(first + 1), ... with g(n) = n, 2^n or 1.
std::vector<BigInt> growth_values(Growth growth, std::size_t count, std::size_t first = 1);

struct SampleEntry {
  std::vector<BigInt> period;
  QuadraticSurd m;
};

struct SampleResult {
  std::vector<SampleEntry> entries;  // in input order
  QuadraticSurd min;
  QuadraticSurd max;
};

// Exact m of the purely periodic number with each period, on `jobs` threads.
SampleResult sample_m(const std::vector<std::vector<BigInt>>& periods, unsigned jobs = 1);

// Every primitive period (not a power of a shorter word) of length at most
// `max_period` with quotients in 1..max_quotient.
std::vector<std::vector<BigInt>> periodic_words(std::size_t max_period, long max_quotient);

}  // namespace mcf

#endif  // MCF_SPECTRA_HPP_
