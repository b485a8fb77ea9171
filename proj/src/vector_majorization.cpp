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

#include "dmaj/vector_majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>

#include "dmaj/errors.hpp"

namespace dmaj {

namespace {

std::vector<std::size_t> descending_order(const RealVector& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&v](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

void check_finite(const RealVector& v, const char* what) {
  for (double e : v)
    if (!std::isfinite(e)) throw NonFiniteEntry(std::string(what) + ": entry is not finite");
}

}  // namespace

double one_norm(const RealVector& v) {
  double s = 0.0;
  for (double e : v) s += std::abs(e);
  return s;
}

double sum_of(const RealVector& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

WeightVector::WeightVector(RealVector entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw DimensionTooSmall("weight vector must not be empty");
  for (double e : entries_) {
    if (!std::isfinite(e)) throw NonFiniteEntry("weight vector: entry is not finite");
    if (e <= 0.0) throw NonpositiveWeight("weight vector: entries must be strictly positive");
  }
}

double WeightVector::sum() const { return sum_of(entries_); }

double WeightVector::min_entry() const {
  return *std::min_element(entries_.begin(), entries_.end());
}

bool WeightVector::proportional_to_uniform(double tol) const {
  const auto [lo, hi] = std::minmax_element(entries_.begin(), entries_.end());
  return *hi - *lo <= tol * *hi;
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealVector RealMatrix::apply(const RealVector& v) const {
  if (v.size() != cols_) throw LengthMismatch("matrix-vector product: size mismatch");
  RealVector out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += a_[i * cols_ + j] * v[j];
  return out;
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double e : a_) m = std::max(m, std::abs(e));
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: shape mismatch");
  RealMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

StochasticDiagnostics stochastic_diagnostics(const RealMatrix& m,
                                             const WeightVector* d) {
  StochasticDiagnostics diag;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double col_sum = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      col_sum += m(i, j);
      diag.min_entry = std::min(diag.min_entry, m(i, j));
    }
    diag.worst_column_sum_gap =
        std::max(diag.worst_column_sum_gap, std::abs(col_sum - 1.0));
  }
  if (d != nullptr) {
    const RealVector image = m.apply(d->entries());
    for (std::size_t i = 0; i < image.size(); ++i)
      diag.worst_fixed_point_gap =
          std::max(diag.worst_fixed_point_gap, std::abs(image[i] - (*d)[i]));
  }
  return diag;
}

StochasticMatrix StochasticMatrix::checked(RealMatrix entries,
                                           std::optional<WeightVector> fixed_vector,
                                           double tol) {
  if (entries.rows() != entries.cols())
    throw DimensionMismatch("stochastic matrix must be square");
  const WeightVector* d = fixed_vector ? &*fixed_vector : nullptr;
  if (d != nullptr && d->size() != entries.rows())
    throw LengthMismatch("stochastic matrix: fixed vector size mismatch");
  const auto diag = stochastic_diagnostics(entries, d);
  if (diag.min_entry < -tol)
    throw NotDStochastic("stochastic matrix: negative entry");
  if (diag.worst_column_sum_gap > tol)
    throw NotDStochastic("stochastic matrix: column sums differ from one");
  if (d != nullptr &&
      diag.worst_fixed_point_gap > tol * tol_scale(one_norm(d->entries())))
    throw NotDStochastic("stochastic matrix: weight vector is not fixed");
  return StochasticMatrix{std::move(entries), std::move(fixed_vector)};
}

MajorizationReport classical_majorization_check(const RealVector& x,
                                                const RealVector& y, double tol) {
  if (x.size() != y.size())
    throw LengthMismatch("majorization check: vector lengths differ");
  check_finite(x, "majorization check");
  check_finite(y, "majorization check");

  RealVector xs = x, ys = y;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());

  MajorizationReport report;
  report.sum_gap = sum_of(x) - sum_of(y);
  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    report.worst_partial_gap = std::max(report.worst_partial_gap, px - py);
  }
  const double bound = tol * tol_scale(std::max(one_norm(x), one_norm(y)));
  report.majorized =
      std::abs(report.sum_gap) <= bound && report.worst_partial_gap <= bound;
  return report;
}

DMajVectorReport d_majorization_check(const RealVector& x, const RealVector& y,
                                      const WeightVector& d, double tol) {
  const std::size_t n = x.size();
  if (y.size() != n || d.size() != n)
    throw LengthMismatch("d-majorization check: vector lengths differ");
  check_finite(x, "d-majorization check");
  check_finite(y, "d-majorization check");

  DMajVectorReport report;
  const double scale = tol_scale(std::max(one_norm(x), one_norm(y)));
  const double bound = tol * scale;

  report.sum_gap = sum_of(x) - sum_of(y);
  report.sums_equal = std::abs(report.sum_gap) <= bound;

  const auto positive_part_sum = [&](const RealVector& v, double t) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::max(v[j] - t * d[j], 0.0);
    return s;
  };
  const auto shifted_one_norm = [&](const RealVector& v, double t) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::abs(v[j] - t * d[j]);
    return s;
  };

  // Criterion one: positive-part sums at every breakpoint of either vector.
  double worst_pp = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (const double t : {x[i] / d[i], y[i] / d[i]}) {
      worst_pp = std::max(worst_pp, positive_part_sum(x, t) - positive_part_sum(y, t));
    }
  }
  report.worst_positive_part_gap = worst_pp;
  report.positive_part_criterion = worst_pp <= bound;

  // Criterion two: shifted one-norms at the breakpoints of y.
  double worst_tn = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = y[i] / d[i];
    worst_tn = std::max(worst_tn, shifted_one_norm(x, t) - shifted_one_norm(y, t));
  }
  report.worst_trace_norm_gap = worst_tn;
  report.trace_norm_criterion = worst_tn <= bound;

  report.majorized = report.sums_equal && report.positive_part_criterion &&
                     report.trace_norm_criterion;
  // The two criteria are equivalent only on the equal-sum slice.
  report.criteria_agree =
      !report.sums_equal ||
      report.positive_part_criterion == report.trace_norm_criterion;
  return report;
}

StochasticMatrix collapse_matrix(const RealVector& x) {
  const std::size_t n = x.size();
  if (n < 2) throw DimensionTooSmall("collapse matrix needs dimension at least 2");
  check_finite(x, "collapse matrix");
  RealMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) a(x[j] >= 0.0 ? 0 : 1, j) = 1.0;
  return StochasticMatrix::checked(std::move(a));
}

StochasticMatrix transfer_matrix(const RealVector& x, const RealVector& y,
                                 double tol) {
  const std::size_t n = x.size();
  if (y.size() != n) throw LengthMismatch("transfer matrix: vector lengths differ");
  if (n == 0) throw DimensionTooSmall("transfer matrix: empty vectors");
  check_finite(x, "transfer matrix");
  check_finite(y, "transfer matrix");

  const double scale = tol_scale(std::max(one_norm(x), one_norm(y)));
  if (std::abs(sum_of(x) - sum_of(y)) > tol * scale)
    throw PreconditionViolated("transfer matrix: totals of x and y differ");
  if (one_norm(x) > one_norm(y) + tol * scale)
    throw PreconditionViolated(
        "transfer matrix: one-norm of x exceeds the one-norm of y");

  if (n == 1) return StochasticMatrix::checked(RealMatrix::identity(1));

  // Collapse y onto two coordinates; the result classically majorizes x.
  const StochasticMatrix collapse = collapse_matrix(y);
  const RealVector z = collapse.entries.apply(y);

  const auto order_x = descending_order(x);
  const auto order_z = descending_order(z);
  RealVector xs(n), w(n);
  for (std::size_t r = 0; r < n; ++r) {
    xs[r] = x[order_x[r]];
    w[r] = z[order_z[r]];
  }

  // Chain of two-coordinate pinchings driving w to xs. Each step equalizes
  // at least one coordinate, so n - 1 steps suffice; the loop bound only
  // guards against pathological ties.
  RealMatrix chain = RealMatrix::identity(n);
  const double eps = 1e-13 * scale;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t j = n;
    for (std::size_t i = n; i-- > 0;) {
      if (w[i] - xs[i] > eps) {
        j = i;
        break;
      }
    }
    if (j == n) break;
    std::size_t k = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (xs[i] - w[i] > eps) {
        k = i;
        break;
      }
    }
    if (k == n) break;

    const double delta = std::min(w[j] - xs[j], xs[k] - w[k]);
    const double lambda = 1.0 - delta / (w[j] - w[k]);
    // Mix rows j and k of the accumulated chain by the same pinching.
    for (std::size_t c = 0; c < n; ++c) {
      const double rj = chain(j, c), rk = chain(k, c);
      chain(j, c) = lambda * rj + (1.0 - lambda) * rk;
      chain(k, c) = (1.0 - lambda) * rj + lambda * rk;
    }
    w[j] -= delta;
    w[k] += delta;
  }

  double drift = 0.0;
  for (std::size_t r = 0; r < n; ++r) drift = std::max(drift, std::abs(w[r] - xs[r]));
  if (drift > 1e-10 * scale)
    throw NoConvergence("transfer matrix: pinching chain did not reach the target");

  // Undo both sort permutations, then compose with the collapse.
  std::vector<std::size_t> pos_x(n), pos_z(n);
  for (std::size_t r = 0; r < n; ++r) {
    pos_x[order_x[r]] = r;
    pos_z[order_z[r]] = r;
  }
  RealMatrix doubly(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) doubly(a, b) = chain(pos_x[a], pos_z[b]);

  return StochasticMatrix::checked(doubly * collapse.entries, {}, 1e-10);
}

VectorFeasibilityReport d_stochastic_witness(const RealVector& x,
                                             const RealVector& y,
                                             const WeightVector& d,
                                             const SolverParams& params) {
  const std::size_t n = x.size();
  if (y.size() != n || d.size() != n)
    throw LengthMismatch("witness search: vector lengths differ");
  check_finite(x, "witness search");
  check_finite(y, "witness search");

  // Unknown M vectorized row major; constraints: unit column sums, Md = d,
  // My = x.
  const std::size_t dim = n * n;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  rows.reserve(3 * n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<double> row(dim, 0.0);
    for (std::size_t r = 0; r < n; ++r) row[r * n + c] = 1.0;
    rows.push_back(std::move(row));
    rhs.push_back(1.0);
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<double> row(dim, 0.0);
    for (std::size_t c = 0; c < n; ++c) row[r * n + c] = d[c];
    rows.push_back(std::move(row));
    rhs.push_back(d[r]);
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<double> row(dim, 0.0);
    for (std::size_t c = 0; c < n; ++c) row[r * n + c] = y[c];
    rows.push_back(std::move(row));
    rhs.push_back(x[r]);
  }

  const AffineSubspace affine(dim, std::move(rows), std::move(rhs));
  const FeasibilityResult result =
      dykstra_feasibility(affine, project_nonnegative, params);

  VectorFeasibilityReport report;
  report.verdict = result.verdict;
  report.residual = result.residual;
  report.iterations = result.iterations;
  report.residual_trace = result.residual_trace;
  if (result.feasible()) {
    RealMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = result.point[r * n + c];
    // Invariants hold up to the solver tolerance; no re-validation here.
    report.witness = StochasticMatrix{std::move(m), d};
  }
  return report;
}

}  // namespace dmaj
