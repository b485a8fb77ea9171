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

#include <vector>

#include "dmaj/matrix.hpp"

namespace dmaj {

// Eigenvalues ascending; the columns of `eigenvectors` form a unitary V with
// M = V diag(eigenvalues) V*.
struct HermitianEig {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalization of a hermitian matrix. Throws
// NonHermitianInput when ||M - M*|| exceeds tol * max(1, ||M||_F), and
// NoConvergence if the off-diagonal mass has not dropped below
// 1e-14 * max(1, ||M||_F) after 100 sweeps (in practice a handful of sweeps
// suffice at the dimensions this library targets).
HermitianEig hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

// Trace norm ||M||_1 = tr sqrt(M* M). Hermitian inputs take the cheaper
// sum-of-|eigenvalue| route; general square inputs go through M* M.
double trace_norm(const ComplexMatrix& m);

enum class PsdClass { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct PsdReport {
  PsdClass classification;
  double min_eigenvalue;
  bool is_positive_semidefinite() const {
    return classification != PsdClass::Indefinite;
  }
};

// Classifies a hermitian matrix by its smallest eigenvalue against
// +-tol * max(1, ||M||_F).
PsdReport psd_check(const ComplexMatrix& m, double tol = kDefaultTol);

// Nearest (Frobenius) positive semidefinite matrix: negative eigenvalues are
// truncated to zero.
ComplexMatrix psd_project(const ComplexMatrix& m, double tol = kDefaultTol);

// Principal square root of a positive semidefinite matrix. Eigenvalues in
// [-tol * scale, 0] are treated as zero; anything more negative throws
// NotPositiveSemidefinite.
ComplexMatrix sqrt_psd(const ComplexMatrix& m, double tol = kDefaultTol);

// Inverse square root; requires a positive definite input.
ComplexMatrix inv_sqrt_pd(const ComplexMatrix& m, double tol = kDefaultTol);

// Columns of V whose eigenvalues are <= threshold, i.e. an orthonormal basis
// of the (near-)kernel when threshold is a small positive number.
ComplexMatrix eigenvectors_at_most(const HermitianEig& eig, double threshold);

// sin of the largest principal angle between the column spans of two
// matrices with orthonormal columns. Returns 1 when the dimensions differ.
double subspace_gap(const ComplexMatrix& q1, const ComplexMatrix& q2);

}  // namespace dmaj
