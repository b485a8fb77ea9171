// Copyright 2026 The dmaj authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace dmaj::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitYes = 0;        // affirmative verdict or success
inline constexpr int kExitNo = 1;         // negative verdict
inline constexpr int kExitError = 2;      // usage or data error
inline constexpr int kExitUndecided = 3;  // solver could not decide

// Parses and runs one invocation. `args` excludes the program name. Reports
// go to `out`, diagnostics to `err`; the return value is the process exit
// code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dmaj::cli
