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

#include "json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dmaj/errors.hpp"

namespace dmaj::cli {

namespace {

double finite_number(const Json& j, const std::string& where) {
  if (!j.is_number()) {
    throw ParseError(where + ": expected a number, got " +
                     std::string(j.type_name()));
  }
  const double value = j.get<double>();
  if (!std::isfinite(value)) {
    throw ParseError(where + ": non-finite number");
  }
  return value;
}

std::size_t positive_size(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw ParseError(where + ": expected a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

Complex entry_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(where + ": expected an [re, im] pair");
  }
  return Complex(finite_number(j[0], where + "[0]"),
                 finite_number(j[1], where + "[1]"));
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("matrix: expected a JSON object");
  }
  if (j.contains("diag")) {
    const Json& diag = j["diag"];
    if (!diag.is_array() || diag.empty()) {
      throw ParseError("matrix: \"diag\" must be a nonempty array");
    }
    std::vector<double> values;
    values.reserve(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
      values.push_back(finite_number(diag[i], "diag[" + std::to_string(i) + "]"));
    }
    return ComplexMatrix::diagonal(values);
  }
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError("matrix: need \"rows\", \"cols\" and \"entries\" "
                     "(or the \"diag\" shorthand)");
  }
  const std::size_t rows = positive_size(j["rows"], "rows");
  const std::size_t cols = positive_size(j["cols"], "cols");
  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw ParseError("matrix: \"entries\" must hold rows*cols = " +
                     std::to_string(rows * cols) + " pairs, got " +
                     std::to_string(entries.size()));
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t k = i * cols + c;
      m(i, c) = entry_pair(entries[k], "entries[" + std::to_string(k) + "]");
    }
  }
  return m;
}

Json choi_to_json(const ChoiMatrix& choi) {
  Json out;
  out["in_dim"] = choi.in_dim;
  out["out_dim"] = choi.out_dim;
  Json matrix = matrix_to_json(choi.matrix);
  out["rows"] = matrix["rows"];
  out["cols"] = matrix["cols"];
  out["entries"] = std::move(matrix["entries"]);
  return out;
}

ChoiMatrix choi_from_json(const Json& j, std::optional<std::size_t> in_dim) {
  ComplexMatrix m = matrix_from_json(j);
  if (m.rows() != m.cols()) {
    throw ParseError("choi: matrix must be square, got " +
                     std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
  }
  const std::size_t size = m.rows();
  std::size_t n = 0;
  if (j.is_object() && j.contains("in_dim")) {
    n = positive_size(j["in_dim"], "in_dim");
  } else if (in_dim.has_value()) {
    n = *in_dim;
  } else {
    // No explicit block structure: assume equal input and output dimension.
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(
        static_cast<double>(size))));
    if (root * root != size) {
      throw ParseError("choi: size " + std::to_string(size) +
                       " is not a perfect square; add \"in_dim\" or --in-dim");
    }
    n = root;
  }
  if (n == 0 || size % n != 0) {
    throw ParseError("choi: size " + std::to_string(size) +
                     " is not divisible by in_dim " + std::to_string(n));
  }
  ChoiMatrix choi;
  choi.in_dim = n;
  choi.out_dim = size / n;
  choi.matrix = std::move(m);
  return choi;
}

RealVector real_vector_from_json(const Json& j) {
  if (j.is_array()) {
    RealVector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      v.push_back(finite_number(j[i], "vector[" + std::to_string(i) + "]"));
    }
    if (v.empty()) {
      throw ParseError("vector: empty array");
    }
    return v;
  }
  if (j.is_object() && j.contains("diag")) {
    ComplexMatrix m = matrix_from_json(j);
    RealVector v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, i).real();
    return v;
  }
  const ComplexMatrix m = matrix_from_json(j);
  if (m.rows() != 1 && m.cols() != 1) {
    throw ParseError("vector: expected an array, a diag shorthand, or an "
                     "n x 1 matrix");
  }
  RealVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(i, c).imag() != 0.0) {
        throw ParseError("vector: entries must be real");
      }
      v.push_back(m(i, c).real());
    }
  }
  return v;
}

RealMatrix real_matrix_from_json(const Json& j) {
  const ComplexMatrix m = matrix_from_json(j);
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(i, c).imag() != 0.0) {
        throw ParseError("matrix: entries must be real");
      }
      out(i, c) = m(i, c).real();
    }
  }
  return out;
}

Json real_matrix_to_json(const RealMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j), 0.0});
    }
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << dump_report(j);
  if (!out) {
    throw Error("short write to " + path.string());
  }
}

std::string dump_report(const Json& j) {
  return j.dump(2) + "\n";
}

}  // namespace dmaj::cli
