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

#include "dmaj/dykstra.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "dmaj/errors.hpp"

namespace dmaj {

namespace {

// Rows whose orthogonal remainder falls below this (relative to the original
// row norm) are treated as linearly dependent.
constexpr double kDependentRowTol = 1e-12;
// A dependent row whose reduced right-hand side exceeds this (relative to the
// data scale) certifies an inconsistent system.
constexpr double kInconsistencyTol = 1e-9;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace

const char* to_string(FeasibilityVerdict verdict) {
  switch (verdict) {
    case FeasibilityVerdict::Feasible:
      return "feasible";
    case FeasibilityVerdict::InfeasibleCertified:
      return "infeasible-certified";
    case FeasibilityVerdict::InfeasibleHeuristic:
      return "infeasible-heuristic";
    case FeasibilityVerdict::Undecided:
      return "undecided";
  }
  return "unknown";
}

AffineSubspace::AffineSubspace(std::size_t ambient_dim,
                               std::vector<std::vector<double>> rows,
                               std::vector<double> rhs)
    : dim_(ambient_dim) {
  if (rows.size() != rhs.size())
    throw LengthMismatch("affine subspace: row and rhs counts differ");

  double rhs_scale = 0.0;
  for (double b : rhs) rhs_scale = std::max(rhs_scale, std::abs(b));
  rhs_scale = tol_scale(rhs_scale);

  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<double> row = std::move(rows[r]);
    if (row.size() != dim_)
      throw LengthMismatch("affine subspace: row length does not match dimension");
    double beta = rhs[r];
    const double original_norm = norm(row);

    // Two orthogonalization passes keep the basis orthonormal to roundoff
    // even for nearly dependent rows.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        const double c = dot(basis_[k], row);
        axpy(-c, basis_[k], row);
        beta -= c * offsets_[k];
      }
    }

    const double remainder = norm(row);
    if (remainder > kDependentRowTol * tol_scale(original_norm)) {
      for (double& e : row) e /= remainder;
      basis_.push_back(std::move(row));
      offsets_.push_back(beta / remainder);
    } else if (std::abs(beta) > kInconsistencyTol * rhs_scale) {
      consistent_ = false;
      inconsistency_ = std::max(inconsistency_, std::abs(beta));
    }
  }

  anchor_.assign(dim_, 0.0);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    axpy(offsets_[k], basis_[k], anchor_);
  scale_ = tol_scale(norm(anchor_));
}

std::vector<double> AffineSubspace::project(const std::vector<double>& v) const {
  std::vector<double> out = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const double c = dot(basis_[k], v) - offsets_[k];
    axpy(-c, basis_[k], out);
  }
  return out;
}

double AffineSubspace::violation(const std::vector<double>& v) const {
  double s = 0.0;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const double c = dot(basis_[k], v) - offsets_[k];
    s += c * c;
  }
  return std::sqrt(s);
}

double AffineSubspace::residual(const std::vector<double>& v) const {
  return violation(v) / scale_;
}

FeasibilityResult dykstra_feasibility(const AffineSubspace& affine,
                                      const ConeProjector& cone_project,
                                      const SolverParams& params) {
  FeasibilityResult result;
  if (!affine.consistent()) {
    result.verdict = FeasibilityVerdict::InfeasibleCertified;
    result.residual = affine.inconsistency();
    return result;
  }

  std::vector<double> x = affine.anchor();
  std::vector<double> cone_correction(affine.ambient_dim(), 0.0);
  std::vector<double> affine_correction(affine.ambient_dim(), 0.0);

  const std::size_t window = std::max<std::size_t>(params.plateau_window, 1);
  std::vector<double> best_history(window, std::numeric_limits<double>::infinity());

  auto record = [&result](std::size_t it, double r) {
    if (it <= 100 || it % 100 == 0)
      result.residual_trace.push_back({it, r});
  };

  std::vector<double> shifted(affine.ambient_dim());
  for (std::size_t it = 1; it <= params.max_iterations; ++it) {
    result.iterations = it;

    for (std::size_t i = 0; i < shifted.size(); ++i)
      shifted[i] = x[i] + cone_correction[i];
    std::vector<double> y = cone_project(shifted);
    for (std::size_t i = 0; i < shifted.size(); ++i)
      cone_correction[i] = shifted[i] - y[i];

    const double r = affine.residual(y);
    record(it, r);
    if (r < result.residual) {
      result.residual = r;
      result.point = y;
    }
    if (result.residual < params.eps_feasible) {
      result.verdict = FeasibilityVerdict::Feasible;
      break;
    }

    const double stale_best = best_history[it % window];
    best_history[it % window] = result.residual;
    if (it > window && std::isfinite(stale_best)) {
      const double improvement = (stale_best - result.residual) / stale_best;
      if (improvement < params.plateau_improvement &&
          result.residual > params.eps_infeasible) {
        result.verdict = FeasibilityVerdict::InfeasibleHeuristic;
        break;
      }
    }

    for (std::size_t i = 0; i < shifted.size(); ++i)
      shifted[i] = y[i] + affine_correction[i];
    std::vector<double> z = affine.project(shifted);
    for (std::size_t i = 0; i < shifted.size(); ++i)
      affine_correction[i] = shifted[i] - z[i];
    x = std::move(z);
  }

  if (result.residual_trace.empty() ||
      result.residual_trace.back().iteration != result.iterations)
    result.residual_trace.push_back({result.iterations, result.residual});
  return result;
}

std::vector<double> project_nonnegative(std::vector<double> v) {
  for (double& e : v) e = std::max(e, 0.0);
  return v;
}

HermitianVectorizer::HermitianVectorizer(std::size_t n) : n_(n) {
  coords_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) coords_.push_back({i, i, Part::Diagonal});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      coords_.push_back({i, j, Part::RealPart});
      coords_.push_back({i, j, Part::ImagPart});
    }
}

std::vector<double> HermitianVectorizer::to_real(const ComplexMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_)
    throw DimensionMismatch("vectorizer: matrix has the wrong shape");
  const double sqrt2 = std::sqrt(2.0);
  std::vector<double> v(coords_.size());
  for (std::size_t idx = 0; idx < coords_.size(); ++idx) {
    const auto& c = coords_[idx];
    // Averaging with the conjugate transpose entry makes the result exact for
    // hermitian input and well defined for input with hermitian noise.
    const Complex entry = 0.5 * (m(c.row, c.col) + std::conj(m(c.col, c.row)));
    switch (c.part) {
      case Part::Diagonal:
        v[idx] = entry.real();
        break;
      case Part::RealPart:
        v[idx] = sqrt2 * entry.real();
        break;
      case Part::ImagPart:
        v[idx] = sqrt2 * entry.imag();
        break;
    }
  }
  return v;
}

ComplexMatrix HermitianVectorizer::from_real(const std::vector<double>& v) const {
  if (v.size() != coords_.size())
    throw LengthMismatch("vectorizer: coordinate vector has the wrong length");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(n_, n_);
  for (std::size_t idx = 0; idx < coords_.size(); ++idx) {
    const auto& c = coords_[idx];
    switch (c.part) {
      case Part::Diagonal:
        m(c.row, c.col) += Complex(v[idx], 0.0);
        break;
      case Part::RealPart:
        m(c.row, c.col) += Complex(inv_sqrt2 * v[idx], 0.0);
        m(c.col, c.row) += Complex(inv_sqrt2 * v[idx], 0.0);
        break;
      case Part::ImagPart:
        m(c.row, c.col) += Complex(0.0, inv_sqrt2 * v[idx]);
        m(c.col, c.row) += Complex(0.0, -inv_sqrt2 * v[idx]);
        break;
    }
  }
  return m;
}

ComplexMatrix HermitianVectorizer::basis_element(std::size_t index) const {
  if (index >= coords_.size())
    throw IndexOutOfRange("vectorizer: basis index out of range");
  std::vector<double> v(coords_.size(), 0.0);
  v[index] = 1.0;
  return from_real(v);
}

std::vector<double> functional_row(
    const HermitianVectorizer& vectorizer,
    const std::function<double(const ComplexMatrix&)>& linear_functional) {
  std::vector<double> row(vectorizer.real_dim());
  for (std::size_t b = 0; b < row.size(); ++b)
    row[b] = linear_functional(vectorizer.basis_element(b));
  return row;
}

}  // namespace dmaj
