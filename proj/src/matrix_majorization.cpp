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

#include "dmaj/matrix_majorization.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "dmaj/eig.hpp"
#include "dmaj/errors.hpp"

namespace dmaj {

namespace {

ComplexMatrix inv_sqrt_weight(const WeightVector& d) {
  std::vector<double> w(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) w[i] = 1.0 / std::sqrt(d[i]);
  return ComplexMatrix::diagonal(w);
}

}  // namespace

DMajInstance make_instance(ComplexMatrix a, ComplexMatrix b, WeightVector d,
                           double tol) {
  const std::size_t n = d.size();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
    throw DimensionMismatch(
        "make_instance: operands must be n x n matching the weight count");
  if (!a.all_finite() || !b.all_finite())
    throw NonFiniteEntry("make_instance: operands must be finite");
  if (!a.is_hermitian(tol) || !b.is_hermitian(tol))
    throw NonHermitianInput("make_instance: operands must be hermitian");
  return {std::move(a), std::move(b), std::move(d)};
}

DMajInstance make_instance(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ComplexMatrix& weight, double tol) {
  if (!weight.is_square())
    throw DimensionMismatch("make_instance: weight matrix must be square");
  if (!weight.all_finite())
    throw NonFiniteEntry("make_instance: weight matrix must be finite");
  if (!weight.is_hermitian(tol))
    throw NonHermitianInput("make_instance: weight matrix must be hermitian");
  if (weight.is_diagonal(tol)) {
    RealVector d(weight.rows());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = weight(i, i).real();
    return make_instance(a, b, WeightVector(std::move(d)), tol);
  }
  const HermitianEig ew = hermitian_eig(weight, tol);
  if (ew.eigenvalues.front() <= tol * tol_scale(weight.frobenius_norm()))
    throw NonpositiveWeight("make_instance: weight matrix must be positive definite");
  const ComplexMatrix& v = ew.eigenvectors;
  const ComplexMatrix vadj = v.adjoint();
  return make_instance(vadj * a * v, vadj * b * v, WeightVector(ew.eigenvalues),
                       tol);
}

ComplexMatrix weight_matrix(const WeightVector& d) {
  return ComplexMatrix::diagonal(d.entries());
}

QubitCheckReport qubit_check(const DMajInstance& inst, double tol) {
  if (inst.d.size() != 2)
    throw DimensionMismatch(
        "qubit_check: the exact decision is available only for 2 x 2 instances");
  const ComplexMatrix dm = weight_matrix(inst.d);
  const ComplexMatrix w = inv_sqrt_weight(inst.d);
  const HermitianEig eb = hermitian_eig((w * inst.b * w).hermitian_part());

  QubitCheckReport report;
  report.b1 = eb.eigenvalues.front();
  report.b2 = eb.eigenvalues.back();

  const Complex tra = inst.a.trace();
  const Complex trb = inst.b.trace();
  report.trace_gap = (tra - trb).real();
  report.trace_equal =
      std::abs(tra - trb) <=
      tol * tol_scale(std::max(std::abs(tra), std::abs(trb)));

  auto norm_margin = [&](double t, double* out_scale) {
    const double lhs = trace_norm(inst.a - t * dm);
    const double rhs = trace_norm(inst.b - t * dm);
    *out_scale = tol_scale(std::max(lhs, rhs));
    return rhs - lhs;
  };
  double s_low = 1.0, s_high = 1.0;
  report.norm_low_margin = norm_margin(report.b1, &s_low);
  report.norm_high_margin = norm_margin(report.b2, &s_high);
  report.norm_low = report.norm_low_margin >= -tol * s_low;
  report.norm_high = report.norm_high_margin >= -tol * s_high;

  report.degenerate_window =
      report.b2 - report.b1 <=
      tol * tol_scale(std::max(std::abs(report.b1), std::abs(report.b2)));

  // Generalized fidelity between the gaps to the spectral window edges. The
  // factors are positive semidefinite by construction for B; for A the
  // projection absorbs whatever indefiniteness the instance has.
  auto window_fidelity = [&](const ComplexMatrix& m) {
    const ComplexMatrix low =
        sqrt_psd(psd_project((m - report.b1 * dm).hermitian_part()));
    const ComplexMatrix high =
        sqrt_psd(psd_project((report.b2 * dm - m).hermitian_part()));
    return trace_norm(low * high);
  };
  const double fid_a = window_fidelity(inst.a);
  const double fid_b = window_fidelity(inst.b);
  report.fidelity_margin = fid_a - fid_b;
  report.fidelity =
      report.fidelity_margin >= -tol * tol_scale(std::max(fid_a, fid_b));

  report.majorized = report.trace_equal && report.norm_low &&
                     report.norm_high &&
                     (report.degenerate_window || report.fidelity);
  return report;
}

CurveReport trace_norm_curve_check(const DMajInstance& inst,
                                   const std::vector<double>& t_values,
                                   double tol) {
  const ComplexMatrix dm = weight_matrix(inst.d);
  const ComplexMatrix w = inv_sqrt_weight(inst.d);
  const HermitianEig ea = hermitian_eig((w * inst.a * w).hermitian_part());
  const HermitianEig eb = hermitian_eig((w * inst.b * w).hermitian_part());

  // Breakpoints of t -> |A - tD|_1 and |B - tD|_1 (the curves are piecewise
  // linear in between), plus a fixed grid across the spectral window of B
  // for diagnostics.
  std::vector<double> ts = t_values;
  ts.insert(ts.end(), ea.eigenvalues.begin(), ea.eigenvalues.end());
  ts.insert(ts.end(), eb.eigenvalues.begin(), eb.eigenvalues.end());
  const double lo = eb.eigenvalues.front() - 1.0;
  const double hi = eb.eigenvalues.back() + 1.0;
  for (int i = 0; i <= 40; ++i) ts.push_back(lo + (hi - lo) * i / 40.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  CurveReport report;
  report.points.reserve(ts.size());
  double scale = 1.0;
  bool first = true;
  for (double t : ts) {
    const double lhs = trace_norm(inst.a - t * dm);
    const double rhs = trace_norm(inst.b - t * dm);
    const double margin = rhs - lhs;
    scale = std::max(scale, tol_scale(std::max(lhs, rhs)));
    report.points.push_back({t, margin});
    if (first || margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_t = t;
      first = false;
    }
  }
  report.holds = report.worst_margin >= -tol * scale;
  return report;
}

MatrixFeasibilityReport d_maj_feasibility(const DMajInstance& inst,
                                          const SolverParams& params) {
  return d_maj_feasibility(inst.a, inst.b, inst.d, params);
}

MatrixFeasibilityReport d_maj_feasibility(const ComplexMatrix& a,
                                          const ComplexMatrix& b,
                                          const WeightVector& d,
                                          const SolverParams& params) {
  const std::size_t n = d.size();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
    throw DimensionMismatch(
        "d_maj_feasibility: operands must be n x n matching the weight count");
  if (!a.all_finite() || !b.all_finite())
    throw NonFiniteEntry("d_maj_feasibility: operands must be finite");

  // Unknown: the hermitian Choi matrix of the channel, an n x n grid of
  // n x n blocks with block (i, j) = T(|e_i><e_j|).
  const HermitianVectorizer vec(n * n);
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;

  // Trace preservation: tr T(|e_i><e_j|) = delta_ij. The (j, i) rows are
  // complex conjugates of the (i, j) ones on hermitian arguments, so only
  // the upper triangle is emitted.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      rows.push_back(functional_row(vec, [n, i, j](const ComplexMatrix& e) {
        Complex t = 0.0;
        for (std::size_t r = 0; r < n; ++r) t += e(i * n + r, j * n + r);
        return t.real();
      }));
      rhs.push_back(i == j ? 1.0 : 0.0);
      if (i != j) {
        rows.push_back(functional_row(vec, [n, i, j](const ComplexMatrix& e) {
          Complex t = 0.0;
          for (std::size_t r = 0; r < n; ++r) t += e(i * n + r, j * n + r);
          return t.imag();
        }));
        rhs.push_back(0.0);
      }
    }
  }

  // T(x) = y entrywise. Real and imaginary rows for every entry; redundant
  // ones (hermitian symmetry) orthonormalize to zero and are dropped.
  auto add_action_rows = [&](const ComplexMatrix& x, const ComplexMatrix& y) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        auto entry = [n, r, c, &x](const ComplexMatrix& e) {
          Complex t = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              t += x(i, j) * e(i * n + r, j * n + c);
          return t;
        };
        rows.push_back(functional_row(
            vec, [&entry](const ComplexMatrix& e) { return entry(e).real(); }));
        rhs.push_back(y(r, c).real());
        rows.push_back(functional_row(
            vec, [&entry](const ComplexMatrix& e) { return entry(e).imag(); }));
        rhs.push_back(y(r, c).imag());
      }
    }
  };
  add_action_rows(b, a);
  const ComplexMatrix dm = weight_matrix(d);
  add_action_rows(dm, dm);

  const AffineSubspace affine(vec.real_dim(), std::move(rows), std::move(rhs));
  const ConeProjector cone = [&vec](const std::vector<double>& v) {
    return vec.to_real(psd_project(vec.from_real(v)));
  };
  FeasibilityResult res = dykstra_feasibility(affine, cone, params);

  MatrixFeasibilityReport report;
  report.verdict = res.verdict;
  report.residual = res.residual;
  report.iterations = res.iterations;
  report.residual_trace = std::move(res.residual_trace);
  if (res.feasible()) {
    ChoiMatrix choi(n, n);
    choi.matrix = vec.from_real(res.point);
    report.witness_min_eigenvalue = psd_check(choi.matrix).min_eigenvalue;
    report.witness_tp_gap = is_tp(choi).max_deviation;
    report.witness_map_b_gap = (apply_choi(choi, b) - a).frobenius_norm();
    report.witness_map_d_gap = (apply_choi(choi, dm) - dm).frobenius_norm();
    report.witness = std::move(choi);
  }
  return report;
}

ChoiMatrix diagonal_action_choi(const StochasticMatrix& m) {
  const std::size_t n = m.entries.cols();
  if (m.entries.rows() != n)
    throw DimensionMismatch("diagonal_action_choi: need a square stochastic matrix");
  // T(|e_i><e_j|) = delta_ij sum_a M(a, i) |e_a><e_a|, so the Choi matrix is
  // diagonal and T erases all off-diagonal input entries.
  ChoiMatrix choi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      choi.matrix(i * n + a, i * n + a) = m.entries(a, i);
  return choi;
}

ChoiMatrix lift_diagonal_channel(const StochasticMatrix& m, const WeightVector& d,
                                 double tol) {
  if (m.entries.cols() != d.size())
    throw DimensionMismatch(
        "lift_diagonal_channel: stochastic matrix and weights disagree in size");
  const StochasticDiagnostics diag = stochastic_diagnostics(m.entries, &d);
  if (diag.worst_fixed_point_gap > tol * tol_scale(d.sum()))
    throw NotDStochastic("lift_diagonal_channel: the weight vector is not fixed");
  return diagonal_action_choi(m);
}

ChoiMatrix construct_channel_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const std::optional<ComplexMatrix>& omega,
                                  double tol) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.rows() != n || b.cols() != n)
    throw DimensionMismatch(
        "construct_channel_pair: operands must be square and equally sized");
  if (!a.all_finite() || !b.all_finite())
    throw NonFiniteEntry("construct_channel_pair: operands must be finite");
  if (!a.is_hermitian(tol) || !b.is_hermitian(tol))
    throw NonHermitianInput("construct_channel_pair: operands must be hermitian");

  const double norm_a = trace_norm(a);
  const double norm_b = trace_norm(b);
  const double scale = tol_scale(std::max(norm_a, norm_b));
  if (std::abs(a.trace() - b.trace()) > tol * scale)
    throw PreconditionViolated("construct_channel_pair: traces must agree");
  if (norm_a > norm_b + tol * scale)
    throw PreconditionViolated(
        "construct_channel_pair: the image may not exceed the preimage in "
        "trace norm");

  const HermitianEig ea = hermitian_eig(a, tol);
  const HermitianEig eb = hermitian_eig(b, tol);
  RealVector x = ea.eigenvalues;
  RealVector y = eb.eigenvalues;

  // Eigenvalues of b within tolerance of zero are snapped to exact zero;
  // those coordinates are the free directions an omega target may claim.
  double ymax = 0.0;
  for (double v : y) ymax = std::max(ymax, std::abs(v));
  const double zero_tol = tol * tol_scale(ymax);
  std::vector<std::size_t> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(y[j]) <= zero_tol) {
      kernel.push_back(j);
      y[j] = 0.0;
    }
  }

  if (omega) {
    if (kernel.empty())
      throw PreconditionViolated(
          "construct_channel_pair: a free target was provided but the "
          "preimage is nonsingular");
    if (omega->rows() != n || omega->cols() != n)
      throw DimensionMismatch(
          "construct_channel_pair: the free target must match the operand size");
    if (!omega->all_finite() || !omega->is_hermitian(tol))
      throw NotAState("construct_channel_pair: the free target must be hermitian");
    if (psd_check(*omega, tol).classification == PsdClass::Indefinite)
      throw NotAState(
          "construct_channel_pair: the free target must be positive semidefinite");
    if (std::abs(omega->trace() - 1.0) > tol)
      throw NotAState("construct_channel_pair: the free target must have unit trace");
  }

  // Snapping shifts the totals by up to n * zero_tol, so the transfer
  // construction gets a matching amount of slack for its own checks.
  const StochasticMatrix m = transfer_matrix(x, y, 4.0 * (n + 1.0) * tol);
  ChoiMatrix tilde = diagonal_action_choi(m);
  if (omega) {
    const ComplexMatrix w_rot =
        ea.eigenvectors.adjoint() * (*omega) * ea.eigenvectors;
    for (std::size_t j : kernel) tilde.set_block(j, j, w_rot);
  }

  // T = (rotate to a's eigenbasis) after (diagonal action) after (rotate b's
  // eigenbasis to the standard one); then T(b) = a by M y = x.
  const ComplexMatrix& u = ea.eigenvectors;
  const ComplexMatrix& v = eb.eigenvectors;
  const ComplexMatrix uadj = u.adjoint();
  const ComplexMatrix vadj = v.adjoint();
  return choi_from_map(
      [&](const ComplexMatrix& input) {
        return u * apply_choi(tilde, vadj * input * v) * uadj;
      },
      n, n);
}

PureStateMajReport pure_state_majorization(const ComplexMatrix& rho, std::size_t j,
                                           const WeightVector& d, double tol) {
  const std::size_t n = d.size();
  if (j >= n)
    throw IndexOutOfRange("pure_state_majorization: index outside the weight range");
  if (rho.rows() != n || rho.cols() != n)
    throw DimensionMismatch(
        "pure_state_majorization: state dimension must match the weight count");
  if (!rho.all_finite() || !rho.is_hermitian(tol))
    throw NotAState("pure_state_majorization: the state must be hermitian");
  if (psd_check(rho, tol).classification == PsdClass::Indefinite)
    throw NotAState("pure_state_majorization: the state must be positive semidefinite");
  if (std::abs(rho.trace() - 1.0) > tol)
    throw NotAState("pure_state_majorization: the state must have unit trace");

  const ComplexMatrix dm = weight_matrix(d);
  const ComplexMatrix gap = dm - d[j] * rho;
  const PsdReport rep = psd_check(gap, tol);

  PureStateMajReport report;
  report.majorized = rep.is_positive_semidefinite();
  report.min_eigenvalue = rep.min_eigenvalue;
  const double denom = d.sum() - d[j];
  report.omega = denom > 0.0 ? (1.0 / denom) * gap : ComplexMatrix(n, n);
  if (report.majorized) {
    // Diagonal-block channel: T(X) = X_jj rho + (sum of the other diagonal
    // entries weighted) omega. It is CP (diagonal PSD blocks), TP (unit
    // block traces) and maps diag(d) to d_j rho + (tr d - d_j) omega = D.
    ChoiMatrix witness(n, n);
    for (std::size_t i = 0; i < n; ++i)
      witness.set_block(i, i, i == j ? rho : report.omega);
    report.witness = std::move(witness);
  }
  return report;
}

MinMaxReport minmax_elements(const WeightVector& d, double tie_tol) {
  const std::size_t n = d.size();
  MinMaxReport report;
  report.minimal = weight_matrix(d);
  const double total = d.sum();
  const double dmin = d.min_entry();
  const double threshold = dmin + tie_tol * tol_scale(dmin);
  for (std::size_t k = 0; k < n; ++k) {
    if (d[k] <= threshold) {
      ComplexMatrix peak(n, n);
      peak(k, k) = total;
      report.maximal.push_back(std::move(peak));
      report.maximal_indices.push_back(k);
    }
  }
  report.unique_max = report.maximal_indices.size() == 1;
  const ComplexMatrix target = (1.0 / total) * report.minimal;
  report.minimal_witness = choi_from_map(
      [&target](const ComplexMatrix& x) { return x.trace() * target; }, n, n);
  return report;
}

ConvexCheckReport matrix_convex_necessary_check(const DMajInstance& inst,
                                                const std::vector<ConvexProbe>& family,
                                                double tol) {
  const ComplexMatrix w = inv_sqrt_weight(inst.d);
  const HermitianEig ea = hermitian_eig((w * inst.a * w).hermitian_part());
  const HermitianEig eb = hermitian_eig((w * inst.b * w).hermitian_part());

  // tr(D psi(D^{-1/2} X D^{-1/2})) by functional calculus:
  // sum_k psi(lambda_k) <v_k| D |v_k>.
  auto weighted_trace = [&](const HermitianEig& eig,
                            const std::function<double(double)>& psi) {
    double acc = 0.0;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
      double wk = 0.0;
      for (std::size_t i = 0; i < inst.d.size(); ++i)
        wk += inst.d[i] * std::norm(eig.eigenvectors(i, k));
      acc += psi(eig.eigenvalues[k]) * wk;
    }
    return acc;
  };

  std::vector<ConvexProbe> probes = family;
  if (probes.empty()) {
    probes.push_back({ConvexProbe::Kind::Square, 0.0});
    const double lam = std::min(ea.eigenvalues.front(), eb.eigenvalues.front());
    probes.push_back({ConvexProbe::Kind::InverseShift, 1.0 + std::max(0.0, -lam)});
  }

  ConvexCheckReport report;
  report.all_hold = true;
  bool first = true;
  for (const ConvexProbe& probe : probes) {
    std::function<double(double)> psi;
    if (probe.kind == ConvexProbe::Kind::Square) {
      psi = [](double v) { return v * v; };
    } else {
      const double c = probe.shift;
      const double clearance =
          std::min(ea.eigenvalues.front(), eb.eigenvalues.front()) + c;
      if (clearance <= tol * tol_scale(std::abs(c)))
        throw DomainViolation(
            "matrix_convex_necessary_check: inverse-shift probe evaluated at "
            "or below its pole");
      psi = [c](double v) { return 1.0 / (v + c); };
    }
    ConvexProbeResult result;
    result.probe = probe;
    result.lhs = weighted_trace(ea, psi);
    result.rhs = weighted_trace(eb, psi);
    result.margin = result.rhs - result.lhs;
    result.holds =
        result.margin >=
        -tol * tol_scale(std::abs(result.lhs) + std::abs(result.rhs));
    report.all_hold = report.all_hold && result.holds;
    if (first || result.margin < report.worst_margin) {
      report.worst_margin = result.margin;
      first = false;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

namespace {

// Cyclic right shift by k: (S x)[i] = x[(i - k) mod n]. Doubly stochastic.
RealMatrix shift_right_matrix(std::size_t n, std::size_t k) {
  RealMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(i, (i + n - k % n) % n) = 1.0;
  return s;
}

RealMatrix reversal_matrix(std::size_t n) {
  RealMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, n - 1 - i) = 1.0;
  return r;
}

// Two-coordinate pinching at (p, p+1) that fixes any weight vector with
// d_{p+1} = q d_p: column-stochastic, sends e_{p+1} to e_p.
RealMatrix pinch_matrix(std::size_t n, std::size_t p, double q) {
  RealMatrix t = RealMatrix::identity(n);
  t(p, p) = 1.0 - q;
  t(p, p + 1) = 1.0;
  t(p + 1, p) = q;
  t(p + 1, p + 1) = 0.0;
  return t;
}

// One macro-step for weights with a strict descent d_p > d_{p+1}: shift the
// pivot pair through every position, pinching once per stop. Acting on a
// probability vector x the product equals q x + (1-q) e_1.
std::vector<IterationFactor> descent_chain(std::size_t n, std::size_t p, double q) {
  std::vector<IterationFactor> factors;
  const std::size_t lead = (p + 1) % n;
  if (lead != 0) factors.push_back({shift_right_matrix(n, lead), false});
  for (std::size_t r = 0; r + 1 < n; ++r) {
    factors.push_back({pinch_matrix(n, p, q), true});
    if (r + 2 < n) factors.push_back({shift_right_matrix(n, 1), false});
  }
  const std::size_t trail = (n - p) % n;
  if (trail != 0) factors.push_back({shift_right_matrix(n, trail), false});
  return factors;
}

}  // namespace

IterationReport iterate_majorization(const RealVector& x0, const WeightVector& d,
                                     std::size_t steps) {
  const std::size_t n = d.size();
  if (x0.size() != n)
    throw LengthMismatch(
        "iterate_majorization: start vector length must match the weight count");
  for (double v : x0) {
    if (!std::isfinite(v) || v <= 0.0)
      throw PreconditionViolated(
          "iterate_majorization: start vector must be strictly positive");
  }
  if (std::abs(sum_of(x0) - 1.0) > kDefaultTol)
    throw PreconditionViolated("iterate_majorization: start vector must have unit total");
  if (d.proportional_to_uniform())
    throw ConstantWeights(
        "iterate_majorization: constant weights admit no contracting step");

  IterationReport report;
  std::size_t pivot = n;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (d[p] > d[p + 1]) {
      pivot = p;
      break;
    }
  }
  report.mirrored = pivot == n;
  if (!report.mirrored) {
    report.pivot = pivot;
    report.q = d[pivot + 1] / d[pivot];
    report.factors = descent_chain(n, pivot, report.q);
  } else {
    // Nondecreasing weights: run the construction on the reversed weights
    // and conjugate every factor with the reversal. A plain left shift in
    // front and a right shift behind realign the distinguished coordinate,
    // so the composite again contracts toward e_1.
    RealVector reversed(d.entries().rbegin(), d.entries().rend());
    std::size_t rp = 0;
    while (rp + 1 < n && reversed[rp] <= reversed[rp + 1]) ++rp;
    report.pivot = n - 2 - rp;
    report.q = reversed[rp + 1] / reversed[rp];
    const RealMatrix rev = reversal_matrix(n);
    report.factors.push_back({shift_right_matrix(n, n - 1), false});
    for (IterationFactor& f : descent_chain(n, rp, report.q))
      report.factors.push_back({rev * f.matrix * rev, f.fixes_weights});
    report.factors.push_back({shift_right_matrix(n, 1), false});
  }

  RealMatrix step = RealMatrix::identity(n);
  for (const IterationFactor& f : report.factors) step = f.matrix * step;
  report.step_matrix = step;

  report.sequence.reserve(steps + 1);
  report.sequence.push_back(x0);
  for (std::size_t a = 0; a < steps; ++a)
    report.sequence.push_back(report.step_matrix.apply(report.sequence.back()));

  report.distances.reserve(report.sequence.size());
  double qa = 1.0;
  for (const RealVector& xa : report.sequence) {
    double dist = std::abs(xa[0] - 1.0);
    for (std::size_t i = 1; i < n; ++i) dist += std::abs(xa[i]);
    report.distances.push_back(dist);
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = qa * x0[i] + (i == 0 ? 1.0 - qa : 0.0);
      report.max_closed_form_gap =
          std::max(report.max_closed_form_gap, std::abs(xa[i] - expected));
    }
    qa *= report.q;
  }
  return report;
}

}  // namespace dmaj
