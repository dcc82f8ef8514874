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

#include "mcf/error.hpp"

namespace mcf {

std::string_view module_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSurd:
    case ErrorKind::kCrossField:
    case ErrorKind::kParse:
      return "exact-numbers";
    case ErrorKind::kHorizonExceeded:
    case ErrorKind::kFiniteExpansion:
      return "cf-engine";
    case ErrorKind::kFiniteChain:
    case ErrorKind::kInsufficientHorizon:
      return "legendre-chain";
    case ErrorKind::kDomain:
    case ErrorKind::kOutsideChain:
    case ErrorKind::kInternalConsistency:
      return "minkowski-mu";
    case ErrorKind::kNotDefined:
    case ErrorKind::kInvalidSpec:
      return "spectra";
    case ErrorKind::kUndecided:
    case ErrorKind::kNotApplicable:
    case ErrorKind::kEqualInputs:
      return "oscillation";
    case ErrorKind::kConfig:
      return "cli";
  }
  return "unknown";
}

std::string_view name_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSurd: return "invalid-surd";
    case ErrorKind::kCrossField: return "cross-field";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kHorizonExceeded: return "horizon-exceeded";
    case ErrorKind::kFiniteExpansion: return "finite-expansion";
    case ErrorKind::kFiniteChain: return "finite-chain";
    case ErrorKind::kInsufficientHorizon: return "insufficient-horizon";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kOutsideChain: return "outside-chain";
    case ErrorKind::kInternalConsistency: return "internal-consistency";
    case ErrorKind::kNotDefined: return "not-defined";
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kUndecided: return "undecided";
    case ErrorKind::kNotApplicable: return "not-applicable";
    case ErrorKind::kEqualInputs: return "equal-inputs";
    case ErrorKind::kConfig: return "config";
  }
  return "unknown";
}

// 1 is reserved for verification failures and 2 for usage errors.
int exit_code_of(ErrorKind kind) {
  return 10 + static_cast<int>(kind);
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(module_of(kind)) + ": " +
                         std::string(name_of(kind)) + ": " + message),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mcf
