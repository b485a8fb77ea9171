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

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "dmaj/channels.hpp"
#include "dmaj/matrix.hpp"
#include "dmaj/vector_majorization.hpp"

// JSON plumbing for the command line tool. Matrix files are objects in one
// of two shapes:
//
//   {"rows": r, "cols": c, "entries": [[re, im], ...]}   row-major
//   {"diag": [d1, ..., dn]}                              real diagonal
//
// Choi matrices additionally carry "in_dim" and "out_dim" so the block
// structure survives a round trip. Serialization uses nlohmann's shortest
// round-trip encoding for doubles, so write-then-read is bit exact and
// identical inputs always produce byte-identical files.

namespace dmaj::cli {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json choi_to_json(const ChoiMatrix& choi);
// Reads a Choi matrix; the input dimension comes from the "in_dim" key, the
// in_dim argument, or (failing both) the square root of the matrix size.
ChoiMatrix choi_from_json(const Json& j,
                          std::optional<std::size_t> in_dim = {});

// Accepts a plain array of numbers, the diagonal shorthand, or an n x 1 or
// 1 x n matrix file with vanishing imaginary parts.
RealVector real_vector_from_json(const Json& j);

// Real n x m matrix: rejects any imaginary part beyond the shorthand forms.
RealMatrix real_matrix_from_json(const Json& j);
Json real_matrix_to_json(const RealMatrix& m);

Json load_json(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

// Canonical report rendering: two-space indent plus a trailing newline.
std::string dump_report(const Json& j);

}  // namespace dmaj::cli
