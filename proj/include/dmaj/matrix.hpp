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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dmaj {

using Complex = std::complex<double>;

// Default tolerance for approximate comparisons. Every check scales it by
// max(1, norm of the inputs), so it acts as a relative tolerance for large
// matrices and an absolute one near zero.
inline constexpr double kDefaultTol = 1e-9;

inline double tol_scale(double norm) { return norm > 1.0 ? norm : 1.0; }

// Dense row-major complex matrix. Sized for desk-scale problems (dimensions
// in the dozens); no attempt is made at cache blocking or expression fusion.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix diagonal(const std::vector<Complex>& d);
  // Row-major literal, mostly for tests and worked examples.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return a_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  std::vector<Complex> diagonal_entries() const;

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;
  bool is_hermitian(double tol = kDefaultTol) const;
  bool is_diagonal(double tol = kDefaultTol) const;

  // Hermitian and anti-hermitian parts: M = hermitian_part + i*skew_part,
  // both summands hermitian.
  ComplexMatrix hermitian_part() const;
  ComplexMatrix skew_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

// |a><b| as a matrix of shape (len a) x (len b).
ComplexMatrix outer(const std::vector<Complex>& a,
                    const std::vector<Complex>& b);

std::vector<Complex> apply_to_vector(const ComplexMatrix& m,
                                     const std::vector<Complex>& v);

double vector_norm(const std::vector<Complex>& v);

}  // namespace dmaj
