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

#include "dmaj/matrix.hpp"

#include <cmath>

#include "dmaj/errors.hpp"

namespace dmaj {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = std::conj(a_[i]);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<Complex> ComplexMatrix::diagonal_entries() const {
  if (!is_square()) throw DimensionMismatch("diagonal of non-square matrix");
  std::vector<Complex> d(rows_);
  for (std::size_t i = 0; i < rows_; ++i) d[i] = (*this)(i, i);
  return d;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double s = 0.0;
  for (const auto& v : a_) s = std::max(s, std::abs(v));
  return s;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  double dev = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      dev += 2.0 * std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(dev) <= tol * tol_scale(frobenius_norm());
}

bool ComplexMatrix::is_diagonal(double tol) const {
  if (!is_square()) return false;
  double off = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j) off += std::norm((*this)(i, j));
  return std::sqrt(off) <= tol * tol_scale(frobenius_norm());
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  if (!is_square()) throw DimensionMismatch("hermitian part of non-square");
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return m;
}

ComplexMatrix ComplexMatrix::skew_part() const {
  if (!is_square()) throw DimensionMismatch("skew part of non-square");
  ComplexMatrix m(rows_, cols_);
  const Complex half_i(0.0, 0.5);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = -half_i * ((*this)(i, j) - std::conj((*this)(j, i)));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  ComplexMatrix m(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex v = lhs(i, k);
      if (v == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) m(i, j) += v * rhs(k, j);
    }
  }
  return m;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
  m *= s;
  return m;
}

ComplexMatrix operator*(double s, ComplexMatrix m) {
  m *= Complex(s, 0.0);
  return m;
}

ComplexMatrix outer(const std::vector<Complex>& a,
                    const std::vector<Complex>& b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

std::vector<Complex> apply_to_vector(const ComplexMatrix& m,
                                     const std::vector<Complex>& v) {
  if (m.cols() != v.size())
    throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Complex> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double vector_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace dmaj
