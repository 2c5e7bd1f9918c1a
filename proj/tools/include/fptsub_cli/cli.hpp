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

#ifndef FPTSUB_CLI_CLI_HPP_
#define FPTSUB_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fptsub::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // I/O, unreadable instance, internal error
  kBadParameter = 2,
  kBudget = 3,
  kBadRecord = 4,
};

// Entry point behind the `fptsub` executable; `args` excludes the program
// name. Records and tables go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fptsub::cli

#endif  // FPTSUB_CLI_CLI_HPP_
