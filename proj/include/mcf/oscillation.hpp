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

// Comparing mu_alpha with mu_beta: eventual dominance, the precondition for
// infinitely many sign changes, and an exact sign-change scan.

#ifndef MCF_OSCILLATION_HPP_
#define MCF_OSCILLATION_HPP_

#include <optional>
#include <vector>

#include "mcf/exact.hpp"

namespace mcf {

struct CompareConfig {
  unsigned precision_bits = 256;
  unsigned cap_bits = 1024;
};

// m(alpha) < lambda(beta). Throws kUndecided if the refinement cap is hit.
bool dominance_hypothesis(const QuadraticSurd& alpha, const QuadraticSurd& beta,
                        const CompareConfig& cfg = {});

// lambda(beta) < lambda(alpha) < m(beta), for alpha, beta, 1 linearly
// independent over the integers; kNotApplicable otherwise.
bool oscillation_precondition(const QuadraticSurd& alpha, const QuadraticSurd& beta,
                           const CompareConfig& cfg = {});

// sign = -1, 0, +1 for mu_alpha - mu_beta, or nullopt when undecided at the cap.
struct BreakpointSample {
  BigRational t;
  QuadraticSurd mu_alpha;
  QuadraticSurd mu_beta;
  std::optional<int> sign;
};

struct Crossing {
  BigRational lo;
  BigRational hi;
  double root_estimate = 0;  // zero of the linear difference, in double
};

struct CrossingReport {
  BigRational t_lo;
  BigRational t_hi;
  std::vector<Crossing> crossings;
  // Breakpoints whose sign stayed undecided, each as [previous, next].
  std::vector<std::pair<BigRational, BigRational>> undecided;
  // Set only when one side's m is certified below the other's lambda: the
  // first breakpoint after the last crossing, where the predicted sign holds.
  std::optional<BigRational> dominance_t0;
  std::optional<int> predicted_sign;
  // nullopt when the inputs are dependent over the integers.
  std::optional<bool> precondition_holds;
  int final_sign = 0;
  std::vector<BreakpointSample> samples;
};

// Sign changes of mu_alpha - mu_beta on [t_lo, t_hi] (1 <= t_lo < t_hi),
// bracketed by consecutive breakpoints of the merged chains. Throws
// kEqualInputs for alpha == beta, kNotDefined for rational inputs.
CrossingReport find_crossings(const QuadraticSurd& alpha, const QuadraticSurd& beta,
                              const BigRational& t_lo, const BigRational& t_hi,
                              const CompareConfig& cfg = {});

}  // namespace mcf

#endif  // MCF_OSCILLATION_HPP_
