// Copyright 2026 The netdim Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netdim {

// Process exit codes of the netdim tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitAnalysis = 3,
};

// Entry point of the command-line tool; `args` excludes the program name.
// Results go to `out` (or the --out file), diagnostics to `err`.
//
//   netdim analyze  FILE [--q Q] ...
//   netdim sweep    FILE [--q-list Q1,Q2,...] ...
//   netdim cover    FILE L_B [--dump-boxes] ...
//   netdim generate MODEL PARAM... [--seed S] [--out PATH]
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace netdim
