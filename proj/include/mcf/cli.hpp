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

// Command-line front end: `mcf <subcommand> [options]`.

#ifndef MCF_CLI_HPP_
#define MCF_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcf::cli {

inline constexpr const char* kSchema = "mcf/1";

// Exit statuses besides the per-error-kind codes (10 + kind).
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  unsigned precision_bits = 256;
  std::size_t horizon = 200;
  std::string format = "csv";
  unsigned refinement_cap_bits = 1024;
  unsigned jobs = 1;

  // Throws kConfig unless precision_bits >= 64, horizon >= 10,
  // refinement_cap_bits >= precision_bits, jobs >= 1 and format is csv|json.
  void validate() const;
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcf::cli

#endif  // MCF_CLI_HPP_
