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

// Majorization of real vectors relative to a strictly positive weight vector
// d: x is d-majorized by y when some column-stochastic matrix M with Md = d
// satisfies My = x. The classical notion is the special case d = (1,...,1).
//
// Two finite criteria decide the relation without searching for M:
//   - positive-part sums: sum_j max(x_j - t d_j, 0) <= same for y, evaluated
//     at every breakpoint t in {x_i/d_i} and {y_i/d_i}, together with equal
//     totals;
//   - trace norms: equal totals and |x - t d|_1 <= |y - t d|_1 at the
//     breakpoints t in {y_i/d_i}.
// Both are evaluated and cross-checked; explicit witness matrices come from
// the collapse/transfer constructions below or from the feasibility solver.

#ifndef DMAJ_VECTOR_MAJORIZATION_HPP
#define DMAJ_VECTOR_MAJORIZATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dmaj/dykstra.hpp"
#include "dmaj/matrix.hpp"

namespace dmaj {

using RealVector = std::vector<double>;

double one_norm(const RealVector& v);
double sum_of(const RealVector& v);

// Strictly positive weight vector.
class WeightVector {
 public:
  explicit WeightVector(RealVector entries);

  const RealVector& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double sum() const;
  double min_entry() const;
  // True when all entries coincide up to a relative tolerance.
  bool proportional_to_uniform(double tol = kDefaultTol) const;

 private:
  RealVector entries_;
};

// Dense real matrix, row major. Kept deliberately small; the complex matrix
// type carries the heavy linear algebra.
class RealMatrix {
 public:
  RealMatrix() : RealMatrix(0, 0) {}
  RealMatrix(std::size_t rows, std::size_t cols);
  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RealVector apply(const RealVector& v) const;
  double max_abs() const;

 private:
  std::size_t rows_, cols_;
  RealVector a_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

// Diagnostics against the column-stochastic invariants; all quantities are
// raw (unscaled) so callers can apply their own tolerance.
struct StochasticDiagnostics {
  double min_entry = 0.0;              // most negative entry
  double worst_column_sum_gap = 0.0;   // max |column sum - 1|
  double worst_fixed_point_gap = 0.0;  // max |(M d - d)_i|, 0 without a weight
};
StochasticDiagnostics stochastic_diagnostics(const RealMatrix& m,
                                             const WeightVector* d = nullptr);

// Column-stochastic matrix, optionally with a verified fixed weight vector
// (d-stochastic). Construction validates the invariants.
struct StochasticMatrix {
  RealMatrix entries;
  std::optional<WeightVector> fixed_vector;

  static StochasticMatrix checked(RealMatrix entries,
                                  std::optional<WeightVector> fixed_vector = {},
                                  double tol = kDefaultTol);
};

struct MajorizationReport {
  bool majorized = false;
  double sum_gap = 0.0;            // total(x) - total(y)
  double worst_partial_gap = 0.0;  // largest partial-sum excess of x over y
};
MajorizationReport classical_majorization_check(const RealVector& x,
                                                const RealVector& y,
                                                double tol = kDefaultTol);

struct DMajVectorReport {
  bool majorized = false;
  // The two finite criteria, inequalities only (sum equality tracked apart).
  bool positive_part_criterion = false;
  bool trace_norm_criterion = false;
  bool sums_equal = false;
  // The criteria are equivalent whenever the sums match; disagreement beyond
  // tolerance would indicate a numerical problem.
  bool criteria_agree = false;
  double sum_gap = 0.0;
  double worst_positive_part_gap = 0.0;
  double worst_trace_norm_gap = 0.0;
};
DMajVectorReport d_majorization_check(const RealVector& x, const RealVector& y,
                                      const WeightVector& d,
                                      double tol = kDefaultTol);

// 0/1 column-stochastic matrix collecting the nonnegative entries of x into
// coordinate 0 and the negative ones into coordinate 1:
// (Ax) = (sum of positive part, -(sum of negative part), 0, ..., 0).
StochasticMatrix collapse_matrix(const RealVector& x);

// Column-stochastic M with My = x, for total(x) = total(y) and
// |x|_1 <= |y|_1. Built as a chain of two-coordinate pinching steps applied
// after collapsing y; deterministic (pivot selection by largest surplus
// index, then smallest deficit index).
StochasticMatrix transfer_matrix(const RealVector& x, const RealVector& y,
                                 double tol = kDefaultTol);

struct VectorFeasibilityReport {
  FeasibilityVerdict verdict = FeasibilityVerdict::Undecided;
  double residual = 0.0;
  std::size_t iterations = 0;
  std::vector<ResidualSample> residual_trace;
  std::optional<StochasticMatrix> witness;  // present when feasible
};

// Searches for a d-stochastic M with My = x by alternating projections
// between the nonnegative orthant and the affine constraints. A feasible
// result carries the witness; infeasibility is heuristic (see dykstra.hpp).
VectorFeasibilityReport d_stochastic_witness(const RealVector& x,
                                             const RealVector& y,
                                             const WeightVector& d,
                                             const SolverParams& params = {});

}  // namespace dmaj

#endif  // DMAJ_VECTOR_MAJORIZATION_HPP
