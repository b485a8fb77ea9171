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

// Convex feasibility by Dykstra's alternating projections between an affine
// subspace and a closed convex cone. Both the d-stochastic witness search
// (nonnegative orthant) and the channel feasibility search (PSD cone on Choi
// matrices) reduce to this driver.
//
// Alternating projections cannot certify infeasibility: a residual that
// plateaus well above the feasibility threshold is reported as heuristic
// evidence only. The one genuine certificate is an inconsistent affine
// system, detected while orthonormalizing the constraint rows.

#ifndef DMAJ_DYKSTRA_HPP
#define DMAJ_DYKSTRA_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "dmaj/matrix.hpp"

namespace dmaj {

enum class FeasibilityVerdict {
  Feasible,             // cone point found within eps_feasible of the subspace
  InfeasibleCertified,  // the affine constraints alone are contradictory
  InfeasibleHeuristic,  // residual plateaued above eps_infeasible
  Undecided,            // budget exhausted in the gray zone
};

const char* to_string(FeasibilityVerdict verdict);

struct SolverParams {
  std::size_t max_iterations = 50000;
  double eps_feasible = 1e-8;
  double eps_infeasible = 1e-5;
  // Plateau rule: relative improvement of the best residual of less than
  // plateau_improvement over plateau_window iterations stops the search.
  std::size_t plateau_window = 500;
  double plateau_improvement = 1e-3;
};

struct ResidualSample {
  std::size_t iteration;
  double residual;
};

struct FeasibilityResult {
  FeasibilityVerdict verdict = FeasibilityVerdict::Undecided;
  // Best scaled distance from a cone-feasible iterate to the affine subspace.
  double residual = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  // The cone-feasible iterate achieving `residual` (empty when certified
  // infeasible before iterating).
  std::vector<double> point;
  std::vector<ResidualSample> residual_trace;

  bool feasible() const { return verdict == FeasibilityVerdict::Feasible; }
};

// Affine subspace {v : <row_i, v> = rhs_i} stored as an orthonormalized row
// system, so that projection is a single sweep of inner products. Rows that
// orthonormalize to (numerically) zero are dropped; if such a row carries a
// nonzero right-hand side the system is inconsistent and the subspace empty.
class AffineSubspace {
 public:
  AffineSubspace(std::size_t ambient_dim, std::vector<std::vector<double>> rows,
                 std::vector<double> rhs);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  bool consistent() const { return consistent_; }
  // Largest right-hand-side residual among dependent rows; zero when the
  // system is consistent.
  double inconsistency() const { return inconsistency_; }

  // Minimum-norm solution of the constraint system.
  const std::vector<double>& anchor() const { return anchor_; }

  std::vector<double> project(const std::vector<double>& v) const;
  // Euclidean distance from v to the subspace.
  double violation(const std::vector<double>& v) const;
  // violation scaled by the size of the constraint data, comparable across
  // instances.
  double residual(const std::vector<double>& v) const;

 private:
  std::size_t dim_;
  bool consistent_ = true;
  double inconsistency_ = 0.0;
  std::vector<std::vector<double>> basis_;
  std::vector<double> offsets_;
  std::vector<double> anchor_;
  double scale_ = 1.0;
};

using ConeProjector = std::function<std::vector<double>(const std::vector<double>&)>;

FeasibilityResult dykstra_feasibility(const AffineSubspace& affine,
                                      const ConeProjector& cone_project,
                                      const SolverParams& params = {});

// Projector onto the nonnegative orthant.
std::vector<double> project_nonnegative(std::vector<double> v);

// Isometry between hermitian n x n matrices with the Hilbert-Schmidt inner
// product and R^(n^2) with the euclidean one. Coordinates are the diagonal
// entries followed by sqrt(2) times the real and imaginary parts of the
// strict upper triangle.
class HermitianVectorizer {
 public:
  explicit HermitianVectorizer(std::size_t n);

  std::size_t matrix_dim() const { return n_; }
  std::size_t real_dim() const { return coords_.size(); }

  std::vector<double> to_real(const ComplexMatrix& m) const;
  ComplexMatrix from_real(const std::vector<double>& v) const;
  // The hermitian matrix corresponding to the index-th coordinate vector.
  ComplexMatrix basis_element(std::size_t index) const;

 private:
  enum class Part { Diagonal, RealPart, ImagPart };
  struct Coordinate {
    std::size_t row, col;
    Part part;
  };

  std::size_t n_;
  std::vector<Coordinate> coords_;
};

// Row of an affine constraint: the linear functional evaluated on every
// basis element of the vectorizer.
std::vector<double> functional_row(
    const HermitianVectorizer& vectorizer,
    const std::function<double(const ComplexMatrix&)>& linear_functional);

}  // namespace dmaj

#endif  // DMAJ_DYKSTRA_HPP
