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
#include <functional>
#include <optional>
#include <vector>

#include "dmaj/eig.hpp"
#include "dmaj/matrix.hpp"

namespace dmaj {

// KRAUS CONVENTION. Throughout this library a map T from n x n to k x k
// matrices acts as
//
//     T(A) = sum_i K_i* A K_i        with K_i in C^{n x k},
//
// i.e. the operators sit on the *outside* as adjoints. Consequently
// T(1_n) = sum_i K_i* K_i lives on the output side, and T is trace
// preserving iff sum_i K_i K_i* = 1_n. Most textbooks put the adjoint on the
// right; when comparing against such sources swap K_i and K_i*.

// Choi matrix of T: an n x n grid of k x k blocks, block (i, j) holding
// T(|e_i><e_j|). Stored dense as an (n*k) x (n*k) matrix.
struct ChoiMatrix {
  std::size_t in_dim = 0;   // n
  std::size_t out_dim = 0;  // k
  ComplexMatrix matrix;

  ChoiMatrix() = default;
  ChoiMatrix(std::size_t n, std::size_t k)
      : in_dim(n), out_dim(k), matrix(n * k, n * k) {}

  ComplexMatrix block(std::size_t i, std::size_t j) const;
  void set_block(std::size_t i, std::size_t j, const ComplexMatrix& b);
};

struct KrausSet {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::vector<ComplexMatrix> operators;  // each n x k
};

// Tabulates T on the matrix units |e_i><e_j|.
ChoiMatrix choi_from_map(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
    std::size_t in_dim, std::size_t out_dim);

ChoiMatrix choi_from_kraus(const KrausSet& kraus);

// Extracts Kraus operators from the spectral decomposition of the Choi
// matrix; eigenvalues at or below tol * max(1, ||C||_F) are dropped, anything
// materially negative throws NotCompletelyPositive. The returned set has at
// most n*k operators.
KrausSet kraus_from_choi(const ChoiMatrix& choi, double tol = kDefaultTol);

// T(A) assembled from the Choi blocks by linearity.
ComplexMatrix apply_choi(const ChoiMatrix& choi, const ComplexMatrix& a);

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& a);

// T(1_n), the sum of the diagonal Choi blocks. Strict positivity of a
// positive map is equivalent to this matrix being positive definite.
ComplexMatrix output_on_identity(const ChoiMatrix& choi);

struct CpReport {
  bool completely_positive;
  double min_choi_eigenvalue;
};
CpReport is_cp(const ChoiMatrix& choi, double tol = kDefaultTol);

struct TpReport {
  bool trace_preserving;
  double max_deviation;  // max |tr block(i,j) - delta_ij|
};
TpReport is_tp(const ChoiMatrix& choi, double tol = kDefaultTol);

struct SpReport {
  bool strictly_positive;
  std::size_t kernel_dim;  // m = dim ker T(1); 0 when strictly positive
  double min_eigenvalue;   // smallest eigenvalue of T(1)
};

// Decides strict positivity of a positive map by classifying T(1).
// The caller is responsible for T actually being positive; for a positive
// map T(1) > 0 already forces T(X) > 0 for every X > 0.
SpReport strict_positivity_check(const ChoiMatrix& choi,
                                 double tol = kDefaultTol);

struct UniversalKernelReport {
  ComplexMatrix basis;  // orthonormal columns spanning ker T(1)
  bool consistent;      // every probe reproduced the same kernel
  double worst_gap;     // largest sin(principal angle) seen across probes
};

// For a positive map the kernel of T(X) is one fixed subspace for every
// positive definite X. This checks that statement on caller-supplied probes
// and returns the common kernel. Probes must be positive definite.
UniversalKernelReport universal_kernel(const ChoiMatrix& choi,
                                       const std::vector<ComplexMatrix>& probes,
                                       double tol = kDefaultTol);

// Orthonormal basis of the intersection of the kernels of all K_i, computed
// as ker sum_i K_i* K_i (which is T(1) in the convention above).
ComplexMatrix kraus_kernel_intersection(const KrausSet& kraus,
                                        double tol = kDefaultTol);

struct BlockFormReport {
  std::size_t m = 0;          // dim ker T(1)
  ComplexMatrix unitary;      // U with U* T(A) U = [[*, 0], [0, 0_m]]
  ComplexMatrix projection;   // pi of rank k - m with pi T(A) pi = T(A)
  ComplexMatrix kernel_basis; // the vectors psi_j, columns, j = 1..m
  double max_residual = 0.0;  // worst violation over all matrix-unit inputs
};

// Block normal form of a non strictly positive map: a unitary U (built by
// sending e_{k+1-j} to the j-th kernel vector) under which every output
// T(A) has its last m rows and columns vanish. Throws IsStrictlyPositive
// when ker T(1) is trivial.
BlockFormReport block_form_decomposition(const ChoiMatrix& choi,
                                         double tol = kDefaultTol);

// Choi matrix of the adjoint map T* with tr(T(A) B) = tr(A T*(B)).
ChoiMatrix dual_map(const ChoiMatrix& choi);

struct DistanceSearchParams {
  std::uint64_t seed = 0;
  int samples = 2000;      // random pure states tried
  int refine_top = 10;     // best candidates kept for local ascent
  int ascent_steps = 50;
};

struct DistanceReport {
  double lower;                      // certified: attained by argmax_state
  double upper;                      // ||T||_est + 1; exact for PTP inputs
  double norm_estimate;              // max ||T(psi psi*)||_1 seen
  std::vector<Complex> argmax_state; // unit vector attaining `lower`
};

// Estimates ||T - id|| in the trace-norm-induced distance by sampling pure
// states and locally improving the best candidates. The lower estimate is a
// genuine bound (it is attained); the upper estimate relies on ||T|| <= 1,
// which holds for positive trace-preserving maps.
DistanceReport distance_to_identity(const ChoiMatrix& choi,
                                    const DistanceSearchParams& params = {});

// Choi matrix of (1 - 1/m) T + (1/m) id, strictly positive for every m >= 1
// whenever T is positive.
ChoiMatrix sp_density_sequence(const ChoiMatrix& choi, unsigned m);

ChoiMatrix identity_choi(std::size_t n);

// Choi matrix of the composition "outer after inner".
ChoiMatrix compose(const ChoiMatrix& outer, const ChoiMatrix& inner);

}  // namespace dmaj
