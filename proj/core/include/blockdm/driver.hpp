// Copyright 2026 The Authors.
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

#ifndef BLOCKDM_DRIVER_HPP_
#define BLOCKDM_DRIVER_HPP_

#include <optional>
#include <ostream>
#include <string>

#include "blockdm/document.hpp"

namespace blockdm {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitRankCondition = 2,
  kExitOracleBounds = 3,
  kExitVerificationFailed = 4,
};

struct DecomposeOptions {
  std::optional<std::string> out_path;
  std::optional<std::string> dot_path;
  bool verify = false;
  bool oracle = false;
};

// The `decompose` command. The result document goes to `out_path` when set,
// otherwise to `out`; diagnostics go to `err`.
int RunDecompose(const InputDocument& doc, const DecomposeOptions& options, std::ostream& out,
                 std::ostream& err);

// The `oracle` command: brute-force MSSP, plus the classic matching check for
// the all-ones partition type.
int RunOracle(const InputDocument& doc, std::ostream& out, std::ostream& err);

// The `graph` command: DOT of G and G~_M for a maximum matching.
int RunGraph(const InputDocument& doc, const std::string& dot_path, std::ostream& out, std::ostream& err);

}  // namespace blockdm

#endif  // BLOCKDM_DRIVER_HPP_
