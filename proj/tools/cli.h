// Copyright 2026 The qbfgames Authors
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

#ifndef QBFGAMES_TOOLS_CLI_H_
#define QBFGAMES_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace qbfgames::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,     // unreadable or malformed input files, bad parameters
  kBudgetExceeded = 3,   // solver node budget or naive-oracle bound
  kIllegalMove = 4,      // replay hit an illegal move
  kDisagreement = 5,     // verify found a winner mismatch
  kSnapshotMismatch = 6, // replay: a move's simplified formula differs from
                         // the trace's "expect" line
};

// Runs `qbfgame` with args (program name excluded). The interactive play
// subcommand reads moves from `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace qbfgames::cli

#endif  // QBFGAMES_TOOLS_CLI_H_
