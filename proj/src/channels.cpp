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

#include "dmaj/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "dmaj/errors.hpp"

namespace dmaj {

namespace {

// Two subspaces count as "the same kernel" when the sin of their largest
// principal angle stays below this.
constexpr double kKernelGapTol = 1e-7;

void check_choi_shape(const ChoiMatrix& choi) {
  if (choi.in_dim == 0 || choi.out_dim == 0)
    throw DimensionMismatch("empty Choi matrix");
  const std::size_t nk = choi.in_dim * choi.out_dim;
  if (choi.matrix.rows() != nk || choi.matrix.cols() != nk)
    throw DimensionMismatch("Choi matrix size does not match in_dim * out_dim");
}

void check_input_shape(const ChoiMatrix& choi, const ComplexMatrix& a) {
  if (a.rows() != choi.in_dim || a.cols() != choi.in_dim)
    throw DimensionMismatch("map input has the wrong dimension");
}

}  // namespace

ComplexMatrix ChoiMatrix::block(std::size_t i, std::size_t j) const {
  if (i >= in_dim || j >= in_dim) throw IndexOutOfRange("Choi block index");
  ComplexMatrix b(out_dim, out_dim);
  for (std::size_t r = 0; r < out_dim; ++r)
    for (std::size_t c = 0; c < out_dim; ++c)
      b(r, c) = matrix(i * out_dim + r, j * out_dim + c);
  return b;
}

void ChoiMatrix::set_block(std::size_t i, std::size_t j, const ComplexMatrix& b) {
  if (i >= in_dim || j >= in_dim) throw IndexOutOfRange("Choi block index");
  if (b.rows() != out_dim || b.cols() != out_dim)
    throw DimensionMismatch("Choi block has the wrong size");
  for (std::size_t r = 0; r < out_dim; ++r)
    for (std::size_t c = 0; c < out_dim; ++c)
      matrix(i * out_dim + r, j * out_dim + c) = b(r, c);
}

ChoiMatrix choi_from_map(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& apply,
    std::size_t in_dim, std::size_t out_dim) {
  ChoiMatrix choi(in_dim, out_dim);
  ComplexMatrix unit(in_dim, in_dim);
  for (std::size_t i = 0; i < in_dim; ++i) {
    for (std::size_t j = 0; j < in_dim; ++j) {
      unit(i, j) = 1.0;
      const ComplexMatrix out = apply(unit);
      unit(i, j) = 0.0;
      if (out.rows() != out_dim || out.cols() != out_dim)
        throw DimensionMismatch("map output has the wrong dimension");
      choi.set_block(i, j, out);
    }
  }
  return choi;
}

ChoiMatrix choi_from_kraus(const KrausSet& kraus) {
  if (kraus.operators.empty()) throw EmptyKrausSet("no Kraus operators");
  const std::size_t n = kraus.in_dim ? kraus.in_dim : kraus.operators.front().rows();
  const std::size_t k = kraus.out_dim ? kraus.out_dim : kraus.operators.front().cols();
  ChoiMatrix choi(n, k);
  for (const auto& op : kraus.operators) {
    if (op.rows() != n || op.cols() != k)
      throw DimensionMismatch("Kraus operators of inconsistent shape");
    // Choi entry ((a,r),(b,c)) accumulates conj(K[a,r]) K[b,c]; this is the
    // rank-one contribution of vec(K) under the convention in channels.hpp.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t r = 0; r < k; ++r) {
        const Complex left = std::conj(op(a, r));
        if (left == Complex{}) continue;
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < k; ++c)
            choi.matrix(a * k + r, b * k + c) += left * op(b, c);
      }
  }
  return choi;
}

KrausSet kraus_from_choi(const ChoiMatrix& choi, double tol) {
  check_choi_shape(choi);
  const std::size_t n = choi.in_dim;
  const std::size_t k = choi.out_dim;
  const auto eig = hermitian_eig(choi.matrix, tol);
  const double bound = tol * tol_scale(choi.matrix.frobenius_norm());

  KrausSet out;
  out.in_dim = n;
  out.out_dim = k;
  for (std::size_t idx = 0; idx < eig.eigenvalues.size(); ++idx) {
    const double lam = eig.eigenvalues[idx];
    if (lam < -bound)
      throw NotCompletelyPositive("Choi matrix has a negative eigenvalue");
    if (lam <= bound) continue;
    const double w = std::sqrt(lam);
    ComplexMatrix op(n, k);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t r = 0; r < k; ++r)
        op(a, r) = w * std::conj(eig.eigenvectors(a * k + r, idx));
    out.operators.push_back(std::move(op));
  }
  return out;
}

ComplexMatrix apply_choi(const ChoiMatrix& choi, const ComplexMatrix& a) {
  check_choi_shape(choi);
  check_input_shape(choi, a);
  const std::size_t n = choi.in_dim;
  const std::size_t k = choi.out_dim;
  ComplexMatrix out(k, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          out(r, c) += aij * choi.matrix(i * k + r, j * k + c);
    }
  return out;
}

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& a) {
  if (kraus.operators.empty()) throw EmptyKrausSet("no Kraus operators");
  ComplexMatrix out(kraus.out_dim, kraus.out_dim);
  for (const auto& op : kraus.operators) out += op.adjoint() * a * op;
  return out;
}

ComplexMatrix output_on_identity(const ChoiMatrix& choi) {
  check_choi_shape(choi);
  const std::size_t k = choi.out_dim;
  ComplexMatrix out(k, k);
  for (std::size_t i = 0; i < choi.in_dim; ++i)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        out(r, c) += choi.matrix(i * k + r, i * k + c);
  return out;
}

CpReport is_cp(const ChoiMatrix& choi, double tol) {
  check_choi_shape(choi);
  const auto report = psd_check(choi.matrix, tol);
  return {report.is_positive_semidefinite(), report.min_eigenvalue};
}

TpReport is_tp(const ChoiMatrix& choi, double tol) {
  check_choi_shape(choi);
  double worst = 0.0;
  for (std::size_t i = 0; i < choi.in_dim; ++i)
    for (std::size_t j = 0; j < choi.in_dim; ++j) {
      Complex tr = 0.0;
      for (std::size_t r = 0; r < choi.out_dim; ++r)
        tr += choi.matrix(i * choi.out_dim + r, j * choi.out_dim + r);
      if (i == j) tr -= 1.0;
      worst = std::max(worst, std::abs(tr));
    }
  return {worst <= tol * tol_scale(choi.matrix.frobenius_norm()), worst};
}

SpReport strict_positivity_check(const ChoiMatrix& choi, double tol) {
  const ComplexMatrix t1 = output_on_identity(choi);
  const auto eig = hermitian_eig(t1, tol);
  const double bound = tol * tol_scale(t1.frobenius_norm());
  std::size_t m = 0;
  while (m < eig.eigenvalues.size() && eig.eigenvalues[m] <= bound) ++m;
  return {m == 0, m, eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front()};
}

UniversalKernelReport universal_kernel(const ChoiMatrix& choi,
                                       const std::vector<ComplexMatrix>& probes,
                                       double tol) {
  const ComplexMatrix t1 = output_on_identity(choi);
  const auto eig = hermitian_eig(t1, tol);
  UniversalKernelReport report;
  report.basis = eigenvectors_at_most(eig, tol * tol_scale(t1.frobenius_norm()));
  report.worst_gap = 0.0;

  for (const auto& probe : probes) {
    check_input_shape(choi, probe);
    if (psd_check(probe, tol).classification != PsdClass::PositiveDefinite)
      throw ProbeNotPositiveDefinite("universal-kernel probe must be positive definite");
    const ComplexMatrix tx = apply_choi(choi, probe);
    const auto eig_x = hermitian_eig(tx, tol);
    const ComplexMatrix basis_x =
        eigenvectors_at_most(eig_x, tol * tol_scale(tx.frobenius_norm()));
    report.worst_gap = std::max(report.worst_gap, subspace_gap(report.basis, basis_x));
  }
  report.consistent = report.worst_gap < kKernelGapTol;
  return report;
}

ComplexMatrix kraus_kernel_intersection(const KrausSet& kraus, double tol) {
  if (kraus.operators.empty()) throw EmptyKrausSet("no Kraus operators");
  const std::size_t k = kraus.operators.front().cols();
  ComplexMatrix gram(k, k);
  for (const auto& op : kraus.operators) gram += op.adjoint() * op;
  const auto eig = hermitian_eig(gram, tol);
  return eigenvectors_at_most(eig, tol * tol_scale(gram.frobenius_norm()));
}

BlockFormReport block_form_decomposition(const ChoiMatrix& choi, double tol) {
  check_choi_shape(choi);
  const std::size_t k = choi.out_dim;
  const ComplexMatrix t1 = output_on_identity(choi);
  const auto eig = hermitian_eig(t1, tol);
  const double bound = tol * tol_scale(t1.frobenius_norm());

  std::size_t m = 0;
  while (m < k && eig.eigenvalues[m] <= bound) ++m;
  if (m == 0)
    throw IsStrictlyPositive("block form requested for a strictly positive map");

  BlockFormReport report;
  report.m = m;
  report.kernel_basis = ComplexMatrix(k, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i)
      report.kernel_basis(i, j) = eig.eigenvectors(i, j);

  // Kernel vector psi_j goes to column k-j (1-based), the remaining
  // eigenvectors fill the leading columns in ascending eigenvalue order.
  report.unitary = ComplexMatrix(k, k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i)
      report.unitary(i, k - 1 - j) = report.kernel_basis(i, j);
  for (std::size_t j = m; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i)
      report.unitary(i, j - m) = eig.eigenvectors(i, j);

  report.projection = ComplexMatrix::identity(k);
  report.projection -= report.kernel_basis * report.kernel_basis.adjoint();

  // Validate on every matrix unit: conjugating by U must empty the last m
  // rows and columns of each Choi block.
  double worst = 0.0;
  for (std::size_t i = 0; i < choi.in_dim; ++i)
    for (std::size_t j = 0; j < choi.in_dim; ++j) {
      const ComplexMatrix g =
          report.unitary.adjoint() * choi.block(i, j) * report.unitary;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          if (r >= k - m || c >= k - m) worst = std::max(worst, std::abs(g(r, c)));
    }
  report.max_residual = worst;
  return report;
}

ChoiMatrix dual_map(const ChoiMatrix& choi) {
  check_choi_shape(choi);
  const std::size_t n = choi.in_dim;
  const std::size_t k = choi.out_dim;
  ChoiMatrix dual(k, n);
  // T*(|e_r><e_s|)[i,j] = T(|e_j><e_i|)[s,r], read off the defining identity
  // tr(T(A) B) = tr(A T*(B)) on matrix units.
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          dual.matrix(r * n + i, s * n + j) = choi.matrix(j * k + s, i * k + r);
  return dual;
}

namespace {

ComplexMatrix sign_of_hermitian(const ComplexMatrix& g) {
  const auto eig = hermitian_eig(g, 1e-9);
  const std::size_t n = g.rows();
  ComplexMatrix s(n, n);
  for (std::size_t kcol = 0; kcol < n; ++kcol) {
    const double sgn = eig.eigenvalues[kcol] >= 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s(i, j) += sgn * eig.eigenvectors(i, kcol) * std::conj(eig.eigenvectors(j, kcol));
  }
  return s;
}

std::vector<Complex> top_eigenvector(const ComplexMatrix& h) {
  const auto eig = hermitian_eig(h, 1e-9);
  const std::size_t n = h.rows();
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = eig.eigenvectors(i, n - 1);
  return v;
}

}  // namespace

DistanceReport distance_to_identity(const ChoiMatrix& choi,
                                    const DistanceSearchParams& params) {
  check_choi_shape(choi);
  if (choi.in_dim != choi.out_dim)
    throw DimensionMismatch("distance to the identity needs in_dim == out_dim");
  const std::size_t n = choi.in_dim;
  const ChoiMatrix dual = dual_map(choi);

  const auto deviation = [&](const std::vector<Complex>& psi) {
    const ComplexMatrix p = outer(psi, psi);
    return trace_norm(apply_choi(choi, p) - p);
  };
  const auto output_norm = [&](const std::vector<Complex>& psi) {
    return trace_norm(apply_choi(choi, outer(psi, psi)));
  };

  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto sample_state = [&] {
    std::vector<Complex> v(n);
    double norm = 0.0;
    for (auto& z : v) {
      z = Complex(gauss(rng), gauss(rng));
      norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    for (auto& z : v) z /= norm;
    return v;
  };

  std::vector<std::vector<Complex>> states;
  states.reserve(std::max(params.samples, 1));
  for (int i = 0; i < std::max(params.samples, 1); ++i) states.push_back(sample_state());

  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) scored.emplace_back(deviation(states[i]), i);
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  // Local ascent: linearize the trace norm at the current point through its
  // sign matrix S, then jump to the top eigenvector of T*(S) - S. Each jump
  // can only increase the objective, so this terminates cleanly.
  DistanceReport report;
  report.lower = scored.front().first;
  report.argmax_state = states[scored.front().second];

  const std::size_t refine = std::min<std::size_t>(params.refine_top, scored.size());
  for (std::size_t c = 0; c < refine; ++c) {
    std::vector<Complex> psi = states[scored[c].second];
    double value = scored[c].first;
    for (int step = 0; step < params.ascent_steps; ++step) {
      const ComplexMatrix p = outer(psi, psi);
      const ComplexMatrix s = sign_of_hermitian(apply_choi(choi, p) - p);
      const std::vector<Complex> next = top_eigenvector(apply_choi(dual, s) - s);
      const double next_value = deviation(next);
      if (next_value <= value + 1e-15) break;
      value = next_value;
      psi = next;
    }
    if (value > report.lower) {
      report.lower = value;
      report.argmax_state = psi;
    }
  }

  // ||T|| estimate over the same sample set, improved the same way.
  double best_norm = 0.0;
  std::vector<Complex> best_state = states.front();
  for (const auto& st : states) {
    const double v = output_norm(st);
    if (v > best_norm) {
      best_norm = v;
      best_state = st;
    }
  }
  {
    std::vector<Complex> psi = best_state;
    double value = best_norm;
    for (int step = 0; step < params.ascent_steps; ++step) {
      const ComplexMatrix s = sign_of_hermitian(apply_choi(choi, outer(psi, psi)));
      const std::vector<Complex> next = top_eigenvector(apply_choi(dual, s));
      const double next_value = output_norm(next);
      if (next_value <= value + 1e-15) break;
      value = next_value;
      psi = next;
    }
    best_norm = value;
  }
  report.norm_estimate = best_norm;
  report.upper = best_norm + 1.0;
  return report;
}

ChoiMatrix sp_density_sequence(const ChoiMatrix& choi, unsigned m) {
  check_choi_shape(choi);
  if (m == 0) throw PreconditionViolated("density-sequence index must be >= 1");
  if (choi.in_dim != choi.out_dim)
    throw DimensionMismatch("mixing with the identity needs in_dim == out_dim");
  const double w = 1.0 / static_cast<double>(m);
  ChoiMatrix out(choi.in_dim, choi.out_dim);
  out.matrix = (1.0 - w) * choi.matrix + w * identity_choi(choi.in_dim).matrix;
  return out;
}

ChoiMatrix identity_choi(std::size_t n) {
  ChoiMatrix choi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) choi.matrix(i * n + i, j * n + j) = 1.0;
  return choi;
}

ChoiMatrix compose(const ChoiMatrix& outer_map, const ChoiMatrix& inner_map) {
  check_choi_shape(outer_map);
  check_choi_shape(inner_map);
  if (inner_map.out_dim != outer_map.in_dim)
    throw DimensionMismatch("composition dimensions do not line up");
  return choi_from_map(
      [&](const ComplexMatrix& a) {
        return apply_choi(outer_map, apply_choi(inner_map, a));
      },
      inner_map.in_dim, outer_map.out_dim);
}

}  // namespace dmaj
