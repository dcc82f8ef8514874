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

// The exact identity and inequality suite run by `mcf verify`.

#ifndef MCF_VERIFY_HPP_
#define MCF_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "mcf/cf.hpp"
#include "mcf/exact.hpp"
#include "mcf/legendre.hpp"

namespace mcf {

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // indices where the premise does not hold
  std::vector<std::string> failures;  // the first few, for display

  void record(bool ok, const std::string& where);
};

struct VerifyReport {
  std::string alpha;
  std::size_t horizon = 0;
  std::vector<CheckTally> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

// Runs every check at each index nu with nu + 2 <= horizon. Throws
// kNotDefined for rational alpha.
VerifyReport verify_alpha(const QuadraticSurd& alpha, std::size_t horizon);

// F over the grid {(i/n, j/n)} restricted to Omega: values in [1/4, 1/2],
// 1/4 only at the origin, 1/2 exactly on the boundary curves.
CheckTally verify_f_extremes_grid(long n);

// Limit of the segment peak at gap `kind` and index nu (in the periodic
// regime), from the closed form at the rescaled limit endpoints. Uses the
// conjugate route lim alpha*_nu = -conj(alpha_{nu+1}) and never evaluates G
// or F.
QuadraticSurd limit_peak_closed_form(const ConvergentTable& table, GapKind kind, std::size_t nu);

}  // namespace mcf

#endif  // MCF_VERIFY_HPP_
