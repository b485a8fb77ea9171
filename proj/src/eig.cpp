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

#include "dmaj/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dmaj/errors.hpp"

namespace dmaj {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSweepTol = 1e-14;

double off_diagonal_mass(const ComplexMatrix& m) {
  double s = 0.0;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation zeroing the (p, q) entry of the hermitian working
// matrix; V accumulates the product of rotations so that the original matrix
// equals V a V* on exit from the sweep loop.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double abs_apq = std::abs(apq);
  if (abs_apq == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const Complex phase = apq / abs_apq;
  const double tau = (aqq - app) / (2.0 * abs_apq);
  // Smaller root of t^2 + 2 tau t - 1 = 0, keeping the rotation angle below
  // 45 degrees for numerical stability.
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex s = t * c * phase;
  const Complex sbar = std::conj(s);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - sbar * akq;
    a(k, q) = s * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  const double shifted = t * abs_apq;
  a(p, p) = app - shifted;
  a(q, q) = aqq + shifted;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - sbar * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionMismatch("eigendecomposition of non-square matrix");
  if (!m.all_finite()) throw NonFiniteEntry("eigendecomposition input has non-finite entries");
  if (!m.is_hermitian(tol)) throw NonHermitianInput("eigendecomposition input is not hermitian");

  const std::size_t n = m.rows();
  const double scale = tol_scale(m.frobenius_norm());

  // Work on the exactly-hermitian average so tiny asymmetries inside the
  // tolerance cannot leak into the rotations.
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);

  if (n > 1) {
    bool converged = off_diagonal_mass(a) < kSweepTol * scale;
    int sweep = 0;
    while (!converged) {
      if (sweep++ >= kMaxSweeps)
        throw NoConvergence("Jacobi sweeps exceeded cap without converging");
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
      converged = off_diagonal_mass(a) < kSweepTol * scale;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEig out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("trace norm of non-square matrix");
  if (m.is_hermitian(1e-12)) {
    const auto eig = hermitian_eig(m, 1e-12);
    double s = 0.0;
    for (double lam : eig.eigenvalues) s += std::abs(lam);
    return s;
  }
  // Singular values are the square roots of the eigenvalues of M* M.
  const auto eig = hermitian_eig(m.adjoint() * m);
  double s = 0.0;
  for (double lam : eig.eigenvalues) s += std::sqrt(std::max(lam, 0.0));
  return s;
}

PsdReport psd_check(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eig(m, tol);
  const double lam_min = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  const double bound = tol * tol_scale(m.frobenius_norm());
  PsdClass cls;
  if (lam_min > bound) {
    cls = PsdClass::PositiveDefinite;
  } else if (lam_min >= -bound) {
    cls = PsdClass::PositiveSemidefinite;
  } else {
    cls = PsdClass::Indefinite;
  }
  return {cls, lam_min};
}

namespace {

ComplexMatrix rebuild(const HermitianEig& eig, const std::vector<double>& lam) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += lam[k] * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace

ComplexMatrix psd_project(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eig(m, tol);
  std::vector<double> lam = eig.eigenvalues;
  for (double& x : lam) x = std::max(x, 0.0);
  return rebuild(eig, lam);
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eig(m, tol);
  const double bound = tol * tol_scale(m.frobenius_norm());
  std::vector<double> lam = eig.eigenvalues;
  for (double& x : lam) {
    if (x < -bound)
      throw NotPositiveSemidefinite("square root of a matrix with a negative eigenvalue");
    x = std::sqrt(std::max(x, 0.0));
  }
  return rebuild(eig, lam);
}

ComplexMatrix inv_sqrt_pd(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eig(m, tol);
  const double bound = tol * tol_scale(m.frobenius_norm());
  std::vector<double> lam = eig.eigenvalues;
  for (double& x : lam) {
    if (x <= bound)
      throw NotPositiveSemidefinite("inverse square root needs a positive definite input");
    x = 1.0 / std::sqrt(x);
  }
  return rebuild(eig, lam);
}

ComplexMatrix eigenvectors_at_most(const HermitianEig& eig, double threshold) {
  const std::size_t n = eig.eigenvalues.size();
  std::size_t count = 0;
  while (count < n && eig.eigenvalues[count] <= threshold) ++count;
  ComplexMatrix basis(n, count);
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = eig.eigenvectors(i, j);
  return basis;
}

double subspace_gap(const ComplexMatrix& q1, const ComplexMatrix& q2) {
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  if (q1.rows() != q2.rows()) throw DimensionMismatch("subspace bases of different ambient dimension");
  // sin(theta_max) is the spectral norm of (1 - Q1 Q1*) Q2; symmetrized to be
  // safe against mildly non-orthonormal inputs.
  const auto residual_norm = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    const ComplexMatrix r = b - a * (a.adjoint() * b);
    const auto eig = hermitian_eig(r.adjoint() * r);
    return std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
  };
  return std::max(residual_norm(q1, q2), residual_norm(q2, q1));
}

}  // namespace dmaj
