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

// D-majorization of matrices: A is D-majorized by B when a quantum channel T
// with fixed point D satisfies T(B) = A. The weight matrix is kept diagonal
// internally (D = diag(d)); positive definite non-diagonal weights are
// rotated into their eigenbasis on construction.
//
// Decision routes, from cheapest to most general:
//   - qubit_check: exact finite test for n = 2 (trace equality, two shifted
//     trace-norm inequalities, one generalized-fidelity inequality);
//   - trace_norm_curve_check: |A - tD|_1 <= |B - tD|_1 sampled at spectral
//     breakpoints and a diagnostic grid; necessary for all n, decisive
//     together with the breakpoints only for n = 2;
//   - matrix_convex_necessary_check: scalar traces against matrix convex
//     functions; necessary only;
//   - d_maj_feasibility: alternating-projection search for the channel
//     itself; decides any n up to the solver's heuristic infeasibility.

#ifndef DMAJ_MATRIX_MAJORIZATION_HPP
#define DMAJ_MATRIX_MAJORIZATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dmaj/channels.hpp"
#include "dmaj/dykstra.hpp"
#include "dmaj/matrix.hpp"
#include "dmaj/vector_majorization.hpp"

namespace dmaj {

struct DMajInstance {
  ComplexMatrix a, b;  // hermitian, n x n
  WeightVector d;      // the weight matrix is diag(d)
};

// Validates shapes and hermiticity. The overload taking a full weight matrix
// accepts any positive definite hermitian weight; it diagonalizes the weight
// and conjugates a and b into its eigenbasis (the relation is covariant
// under this change of frame).
DMajInstance make_instance(ComplexMatrix a, ComplexMatrix b, WeightVector d,
                           double tol = kDefaultTol);
DMajInstance make_instance(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ComplexMatrix& weight, double tol = kDefaultTol);

// diag(d) as a complex matrix.
ComplexMatrix weight_matrix(const WeightVector& d);

struct QubitCheckReport {
  bool majorized = false;
  bool trace_equal = false;
  bool norm_low = false;   // |A - b1 D|_1 <= |B - b1 D|_1
  bool norm_high = false;  // |A - b2 D|_1 <= |B - b2 D|_1
  bool fidelity = false;   // |sqrt(A-b1 D) sqrt(b2 D-A)|_1 >= same for B
  // b1 = b2 (B proportional to D): the fidelity inequality degenerates to
  // 0 >= 0 and is excluded from the verdict.
  bool degenerate_window = false;
  double b1 = 0.0, b2 = 0.0;  // spectral window of D^{-1/2} B D^{-1/2}
  double trace_gap = 0.0;
  double norm_low_margin = 0.0;   // slack of the b1 inequality (>= 0 good)
  double norm_high_margin = 0.0;  // slack of the b2 inequality
  double fidelity_margin = 0.0;   // slack of the fidelity inequality
};
// Exact decision for qubit instances.
QubitCheckReport qubit_check(const DMajInstance& inst, double tol = kDefaultTol);

struct CurvePoint {
  double t;
  double margin;  // |B - tD|_1 - |A - tD|_1
};
struct CurveReport {
  bool holds = false;
  double worst_margin = 0.0;
  double worst_t = 0.0;
  std::vector<CurvePoint> points;  // ascending in t
};
// Evaluates the shifted trace-norm inequality at the supplied t values, the
// spectral breakpoints of D^{-1/2} A D^{-1/2} and D^{-1/2} B D^{-1/2}, and a
// 41-point diagnostic grid spanning the spectral window.
CurveReport trace_norm_curve_check(const DMajInstance& inst,
                                   const std::vector<double>& t_values = {},
                                   double tol = kDefaultTol);

struct MatrixFeasibilityReport {
  FeasibilityVerdict verdict = FeasibilityVerdict::Undecided;
  double residual = 0.0;
  std::size_t iterations = 0;
  std::vector<ResidualSample> residual_trace;
  std::optional<ChoiMatrix> witness;  // present when feasible
  // Constraint residuals of the witness; zero when no witness was found.
  double witness_min_eigenvalue = 0.0;
  double witness_tp_gap = 0.0;
  double witness_map_b_gap = 0.0;  // |T(B) - A|_F
  double witness_map_d_gap = 0.0;  // |T(D) - D|_F
};
// Searches for the channel itself: Dykstra projections of the Choi matrix
// between the PSD cone and the affine set {trace preserving, T(B) = A,
// T(D) = D}. The overload on raw matrices accepts non-hermitian a and b;
// the relation is defined for those as well even though the finite
// criteria above are not.
MatrixFeasibilityReport d_maj_feasibility(const DMajInstance& inst,
                                          const SolverParams& params = {});
MatrixFeasibilityReport d_maj_feasibility(const ComplexMatrix& a,
                                          const ComplexMatrix& b,
                                          const WeightVector& d,
                                          const SolverParams& params = {});

// Channel acting on diagonals by the column-stochastic matrix m and erasing
// off-diagonal entries; the Choi matrix is diagonal.
ChoiMatrix diagonal_action_choi(const StochasticMatrix& m);
// Same, additionally verifying m d = d, so that diag(d) is a fixed point.
ChoiMatrix lift_diagonal_channel(const StochasticMatrix& m, const WeightVector& d,
                                 double tol = kDefaultTol);

// Channel T with T(b) = a, for hermitian a, b with equal traces and
// |a|_1 <= |b|_1. When b is singular the action on its kernel eigenvectors
// is free; passing omega (a density matrix) routes every kernel eigenvector
// psi of b to T(|psi><psi|) = omega. Passing omega for nonsingular b is an
// error.
ChoiMatrix construct_channel_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const std::optional<ComplexMatrix>& omega = {},
                                  double tol = kDefaultTol);

struct PureStateMajReport {
  bool majorized = false;
  double min_eigenvalue = 0.0;  // of diag(d) - d_j rho
  // The proof's residual state (diag(d) - d_j rho) / (sum(d) - d_j); only a
  // valid state when majorized.
  ComplexMatrix omega;
  std::optional<ChoiMatrix> witness;  // channel with T(|e_j><e_j|) = rho, T(D) = D
};
// Decides rho d-majorized-by |e_j><e_j| via positivity of diag(d) - d_j rho;
// j is a zero-based index into d.
PureStateMajReport pure_state_majorization(const ComplexMatrix& rho, std::size_t j,
                                           const WeightVector& d,
                                           double tol = kDefaultTol);

struct MinMaxReport {
  ComplexMatrix minimal;  // diag(d), the unique minimum on its trace slice
  std::vector<ComplexMatrix> maximal;  // sum(d) |e_k><e_k| for each minimal d_k
  std::vector<std::size_t> maximal_indices;
  bool unique_max = false;
  // Witness for minimality: the trace projection X -> tr(X) D / tr(D).
  ChoiMatrix minimal_witness;
};
MinMaxReport minmax_elements(const WeightVector& d, double tie_tol = kDefaultTol);

struct ConvexProbe {
  enum class Kind { Square, InverseShift };
  Kind kind = Kind::Square;
  double shift = 0.0;  // the c in x -> 1/(x + c)
};
struct ConvexProbeResult {
  ConvexProbe probe;
  bool holds = false;
  double lhs = 0.0;  // tr(D psi(D^{-1/2} A D^{-1/2}))
  double rhs = 0.0;  // tr(D psi(D^{-1/2} B D^{-1/2}))
  double margin = 0.0;  // rhs - lhs
};
struct ConvexCheckReport {
  bool all_hold = false;
  double worst_margin = 0.0;
  std::vector<ConvexProbeResult> results;
};
// Necessary conditions from matrix convex functions; an empty family selects
// the square plus one domain-safe inverse shift. Not sufficient: instances
// exist that pass every probe with equality yet admit no channel.
ConvexCheckReport matrix_convex_necessary_check(const DMajInstance& inst,
                                                const std::vector<ConvexProbe>& family = {},
                                                double tol = kDefaultTol);

struct IterationFactor {
  RealMatrix matrix;
  bool fixes_weights;  // true: fixes d; false: permutation fixing the uniform vector
};
struct IterationReport {
  double q = 0.0;         // contraction ratio per macro-step
  std::size_t pivot = 0;  // zero-based first index of the pivot pair in d
  bool mirrored = false;  // pivot pair ascends (construction ran on reversed d)
  std::vector<IterationFactor> factors;  // one macro-step; factors[0] acts first
  RealMatrix step_matrix;                // product of the factors
  std::vector<RealVector> sequence;      // x^(0), ..., x^(steps)
  std::vector<double> distances;  // trace-norm distance of diag(x^(a)) to |e1><e1|
  double max_closed_form_gap = 0.0;  // worst entry gap to (1-q^a) e1 + q^a x0
};
// Drives a probability vector toward e1 by one fixed macro-step repeated
// `steps` times; each factor of the macro-step is individually either
// d-stochastic or doubly stochastic, and the macro-step acts as
// x -> (1-q) e1 + q x.
IterationReport iterate_majorization(const RealVector& x0, const WeightVector& d,
                                     std::size_t steps);

}  // namespace dmaj

#endif  // DMAJ_MATRIX_MAJORIZATION_HPP
