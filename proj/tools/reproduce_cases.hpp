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

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"

// The `reproduce` subcommand re-runs the showcase gallery and verifies each
// expected outcome against fixed tolerances. Every case produces a report
// with a per-check breakdown; a case counts as reproduced only when every
// check passes.

namespace dmaj::cli {

struct ReproduceOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 50000;
};

struct CaseResult {
  std::string name;
  bool reproduced = false;
  Json report;
};

const std::vector<std::string>& reproduce_case_names();

// Runs one named case; throws dmaj::Error for unknown names.
CaseResult run_reproduce_case(const std::string& name,
                              const ReproduceOptions& opts);

}  // namespace dmaj::cli
