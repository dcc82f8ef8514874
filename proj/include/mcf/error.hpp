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

#ifndef MCF_ERROR_HPP_
#define MCF_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcf {

// Every failure the library reports. Each kind belongs to exactly one module
// and maps to its own process exit code in the command-line tool.
enum class ErrorKind {
  kInvalidSurd,           // exact-numbers
  kCrossField,            // exact-numbers
  kParse,                 // exact-numbers (literal grammar)
  kHorizonExceeded,       // cf-engine
  kFiniteExpansion,       // cf-engine
  kFiniteChain,           // legendre-chain
  kInsufficientHorizon,   // legendre-chain
  kDomain,                // minkowski-mu
  kOutsideChain,          // minkowski-mu
  kInternalConsistency,   // minkowski-mu
  kNotDefined,            // spectra
  kInvalidSpec,           // spectra
  kUndecided,             // oscillation
  kNotApplicable,         // oscillation
  kEqualInputs,           // oscillation
  kConfig,                // cli
};

std::string_view module_of(ErrorKind kind);
std::string_view name_of(ErrorKind kind);
int exit_code_of(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }
  std::string_view module() const { return module_of(kind_); }
  int exit_code() const { return exit_code_of(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace mcf

#endif  // MCF_ERROR_HPP_
