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

// Acceptance gate: every release-blocking behavioral guarantee, one line of
// output per criterion. Exits nonzero when any line reads FAIL. Pass the
// path to the command line binary as argv[1] for the reproduce criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

#include "dmaj/channels.hpp"
#include "dmaj/eig.hpp"
#include "dmaj/errors.hpp"
#include "dmaj/matrix_majorization.hpp"
#include "dmaj/showcase.hpp"
#include "dmaj/vector_majorization.hpp"

#include "test_helpers.hpp"

namespace {

using namespace dmaj;
using dmaj::testing::Rng;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------------------
// 1. The transpose pair defeats every finite necessary condition while the
//    channel search stalls at a strictly positive residual, all well inside
//    the runtime budget.

Outcome criterion_transpose_pair() {
  const auto t0 = std::chrono::steady_clock::now();
  const TransposePairInstance pair = showcase_transpose_pair();
  const DMajInstance inst = make_instance(pair.a, pair.b, pair.d_full);

  const CurveReport curve = trace_norm_curve_check(inst);
  const bool curve_ok = curve.holds && curve.worst_margin >= -1e-10;

  const std::vector<ConvexProbe> square = {{ConvexProbe::Kind::Square, 0.0}};
  const ConvexCheckReport convex = matrix_convex_necessary_check(inst, square);
  const double square_gap = std::abs(convex.results.front().margin);
  const bool convex_ok = square_gap <= 1e-10;

  SolverParams params;  // 50000 iteration cap by default
  const MatrixFeasibilityReport feas = d_maj_feasibility(inst, params);
  const bool solver_ok =
      feas.verdict == FeasibilityVerdict::InfeasibleHeuristic &&
      feas.residual > 1e-4 && feas.iterations <= params.max_iterations;

  const double elapsed = seconds_since(t0);
  const bool time_ok = elapsed < 60.0;

  Outcome o;
  o.pass = curve_ok && convex_ok && solver_ok && time_ok;
  o.detail = "curve worst margin " + fmt(curve.worst_margin) + " over " +
             std::to_string(curve.points.size()) + " points, square gap " +
             fmt(square_gap) + ", solver " + to_string(feas.verdict) +
             " residual " + fmt(feas.residual) + " after " +
             std::to_string(feas.iterations) + " iterations, " + fmt(elapsed) +
             " s";
  return o;
}

// ---------------------------------------------------------------------------
// 2. On qubit instances the finite criterion and the channel search always
//    agree; the solver rarely leaves an instance undecided.

Outcome criterion_qubit_oracles() {
  Rng rng(11);
  std::uniform_real_distribution<double> mix(0.15, 0.85);
  const int total = 500;
  int decided = 0;
  int agreed = 0;
  int undecided = 0;
  int majorized_verdicts = 0;

  for (int rep = 0; rep < total; ++rep) {
    const WeightVector d = testing::random_weight_vector(2, rng);
    const ComplexMatrix b = testing::random_hermitian(2, rng);
    const double s = mix(rng);
    const ComplexMatrix mixed =
        (1.0 - s) * b + (s * b.trace().real() / d.sum()) * weight_matrix(d);

    // Even reps mix toward the weights (a channel exists by construction);
    // odd reps ask for the reverse unmixing, generically impossible.
    const bool forward = rep % 2 == 0;
    const DMajInstance inst = forward ? make_instance(mixed, b, d)
                                      : make_instance(b, mixed, d);

    const QubitCheckReport qubit = qubit_check(inst);
    const MatrixFeasibilityReport feas = d_maj_feasibility(inst);
    if (qubit.majorized) ++majorized_verdicts;
    if (feas.verdict == FeasibilityVerdict::Undecided) {
      ++undecided;
      continue;
    }
    ++decided;
    const bool solver_majorized = feas.verdict == FeasibilityVerdict::Feasible;
    if (solver_majorized == qubit.majorized) ++agreed;
  }

  Outcome o;
  o.pass = agreed == decided && undecided * 50 < total;
  o.detail = std::to_string(agreed) + "/" + std::to_string(decided) +
             " decided instances agree, " + std::to_string(undecided) +
             " undecided of " + std::to_string(total) + ", " +
             std::to_string(majorized_verdicts) + " majorized verdicts";
  return o;
}

// ---------------------------------------------------------------------------
// 3. On diagonal instances the matrix-level verdict coincides exactly with
//    the vector-level decision.

Outcome criterion_diagonal_bridge() {
  Rng rng(12);
  std::uniform_real_distribution<double> mix(0.15, 0.85);
  const int total = 500;
  int matched = 0;
  int majorized_count = 0;

  for (int rep = 0; rep < total; ++rep) {
    const std::size_t n = 2 + rep % 3;
    const WeightVector d = testing::random_weight_vector(n, rng);
    const RealVector base = testing::random_real_vector(n, rng);
    const double s = mix(rng);
    RealVector toward(n);
    const double pull = s * sum_of(base) / d.sum();
    for (std::size_t i = 0; i < n; ++i) {
      toward[i] = (1.0 - s) * base[i] + pull * d[i];
    }
    const bool forward = rep % 2 == 0;
    const RealVector& x = forward ? toward : base;
    const RealVector& y = forward ? base : toward;

    const bool vector_verdict = d_majorization_check(x, y, d).majorized;
    if (vector_verdict) ++majorized_count;

    bool matrix_verdict = false;
    bool decided = true;
    const DMajInstance inst = make_instance(
        ComplexMatrix::diagonal(x), ComplexMatrix::diagonal(y), d);
    if (n == 2) {
      matrix_verdict = qubit_check(inst).majorized;
    } else {
      const MatrixFeasibilityReport feas = d_maj_feasibility(inst);
      decided = feas.verdict != FeasibilityVerdict::Undecided;
      matrix_verdict = feas.verdict == FeasibilityVerdict::Feasible;
    }
    if (decided && matrix_verdict == vector_verdict) ++matched;
  }

  Outcome o;
  o.pass = matched == total;
  o.detail = std::to_string(matched) + "/" + std::to_string(total) +
             " verdicts identical, " + std::to_string(majorized_count) +
             " majorized / " + std::to_string(total - majorized_count) +
             " not";
  return o;
}

// ---------------------------------------------------------------------------
// 4. For maps that positivity forces to vanish on a fixed subspace, the
//    kernel of T(X) is the same for every positive definite X.

Outcome criterion_universal_kernel() {
  Rng rng(13);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int total = 100;
  int good = 0;
  double worst_gap = 0.0;

  for (int rep = 0; rep < total; ++rep) {
    const std::size_t k = 2 + rep % 3;
    const std::size_t m = 1 + rep % (k - 1 == 0 ? 1 : k - 1);
    const ChoiMatrix choi = testing::random_non_sp_cptp_choi(k, k, m, rng);

    std::vector<ComplexMatrix> probes;
    probes.reserve(20);
    for (int p = 0; p < 20; ++p) {
      const ComplexMatrix h = testing::random_hermitian(k, rng);
      probes.push_back(h + (h.frobenius_norm() + 1.0) * ComplexMatrix::identity(k));
    }

    const UniversalKernelReport kernel = universal_kernel(choi, probes);
    worst_gap = std::max(worst_gap, kernel.worst_gap);
    if (kernel.consistent && kernel.worst_gap < 1e-7 &&
        kernel.basis.cols() == m) {
      ++good;
    }
  }

  Outcome o;
  o.pass = good == total;
  o.detail = std::to_string(good) + "/" + std::to_string(total) +
             " maps with one common kernel, worst principal-angle gap " +
             fmt(worst_gap);
  return o;
}

// ---------------------------------------------------------------------------
// 5. Trace-preserving maps that are not strictly positive sit at the maximal
//    distance 2 from the identity; strictly positive mixtures near the
//    identity stay well below it. The swap conjugation shows the converse of
//    the dichotomy fails: strictly positive yet at distance 2.

Outcome criterion_distance_dichotomy() {
  Rng rng(14);
  const int far_total = 50;
  int far_good = 0;
  double far_worst = 3.0;
  for (int rep = 0; rep < far_total; ++rep) {
    const std::size_t k = 2 + rep % 3;
    const std::size_t m = 1 + rep % (k - 1 == 0 ? 1 : k - 1);
    const ChoiMatrix choi = testing::random_non_sp_cptp_choi(k, k, m, rng);
    DistanceSearchParams params;
    params.seed = 1000 + static_cast<std::uint64_t>(rep);
    const DistanceReport report = distance_to_identity(choi, params);
    far_worst = std::min(far_worst, report.lower);
    if (report.lower >= 2.0 - 1e-4 && report.lower <= 2.0 + 1e-9) ++far_good;
  }

  DistanceSearchParams swap_params;
  swap_params.seed = 99;
  const DistanceReport swap_report =
      distance_to_identity(showcase_swap_conjugation(), swap_params);
  const double swap_err = std::abs(swap_report.lower - 2.0);
  const bool swap_ok = swap_err <= 1e-6;

  std::uniform_real_distribution<double> eps_dist(0.01, 0.3);
  const int near_total = 50;
  int near_good = 0;
  double near_worst = 0.0;
  for (int rep = 0; rep < near_total; ++rep) {
    const std::size_t n = 2 + rep % 3;
    const double eps = eps_dist(rng);
    const ComplexMatrix mixed_state =
        (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n);
    const ChoiMatrix depolarizing = testing::trace_projection_choi(n, mixed_state);
    ChoiMatrix choi(n, n);
    choi.matrix = (1.0 - eps) * identity_choi(n).matrix +
                  eps * depolarizing.matrix;
    DistanceSearchParams params;
    params.seed = 2000 + static_cast<std::uint64_t>(rep);
    const DistanceReport report = distance_to_identity(choi, params);
    near_worst = std::max(near_worst, report.lower);
    if (report.lower < 1.0) ++near_good;
  }

  Outcome o;
  o.pass = far_good == far_total && swap_ok && near_good == near_total;
  o.detail = std::to_string(far_good) + "/" + std::to_string(far_total) +
             " non-strictly-positive maps at distance 2 (worst " +
             fmt(far_worst) + "), swap error " + fmt(swap_err) + ", " +
             std::to_string(near_good) + "/" + std::to_string(near_total) +
             " near-identity mixtures below 1 (max " + fmt(near_worst) + ")";
  return o;
}

// ---------------------------------------------------------------------------
// 6. Equal traces plus the trace-norm inequality always yield an explicit
//    channel mapping b to a, verified as completely positive, trace
//    preserving, and exact on b.

Outcome criterion_channel_construction() {
  Rng rng(15);
  const int total = 200;
  int good = 0;
  double worst_eig = 0.0;
  double worst_tp = 0.0;
  double worst_gap = 0.0;

  for (int rep = 0; rep < total; ++rep) {
    const std::size_t n = 2 + rep % 3;
    const ComplexMatrix b = testing::random_hermitian(n, rng);
    const RealVector y = hermitian_eig(b).eigenvalues;
    const RealMatrix squeeze = testing::random_column_stochastic(n, rng);
    const RealVector x = squeeze.apply(y);
    const ComplexMatrix u = testing::random_unitary(n, rng);
    const ComplexMatrix a =
        (u * ComplexMatrix::diagonal(x) * u.adjoint()).hermitian_part();

    const ChoiMatrix choi = construct_channel_pair(a, b);
    const CpReport cp = is_cp(choi);
    const TpReport tp = is_tp(choi);
    const double gap = (apply_choi(choi, b) - a).frobenius_norm();
    const double scale =
        std::max(1.0, std::max(a.frobenius_norm(), b.frobenius_norm()));

    worst_eig = std::min(worst_eig, cp.min_choi_eigenvalue);
    worst_tp = std::max(worst_tp, tp.max_deviation);
    worst_gap = std::max(worst_gap, gap / scale);
    if (cp.min_choi_eigenvalue >= -1e-9 && tp.max_deviation <= 1e-10 &&
        gap <= 1e-9 * scale) {
      ++good;
    }
  }

  Outcome o;
  o.pass = good == total;
  o.detail = std::to_string(good) + "/" + std::to_string(total) +
             " channels verified (min eigenvalue " + fmt(worst_eig) +
             ", tp gap " + fmt(worst_tp) + ", relative action gap " +
             fmt(worst_gap) + ")";
  return o;
}

// ---------------------------------------------------------------------------
// 7. Order extremes: the peak at a minimal weight dominates every state via
//    an explicit channel, the weight matrix is reachable from anything by
//    the trace projection, and maximizer uniqueness tracks the multiplicity
//    of the smallest weight.

Outcome criterion_order_extremes() {
  Rng rng(16);
  const int weight_total = 20;
  const int state_total = 20;
  int good_weights = 0;
  std::string first_failure;

  for (int rep = 0; rep < weight_total; ++rep) {
    const std::size_t n = 2 + rep % 3;
    RealVector entries = testing::random_weight_vector(n, rng).entries();
    const bool force_tie = rep % 3 == 2;
    std::size_t arg_min = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (entries[i] < entries[arg_min]) arg_min = i;
    }
    if (force_tie) {
      entries[(arg_min + 1) % n] = entries[arg_min];
    }
    const WeightVector d(entries);
    std::size_t multiplicity = 0;
    for (double e : entries) {
      if (e == entries[arg_min]) ++multiplicity;
    }

    const MinMaxReport extremes = minmax_elements(d);
    bool ok = extremes.unique_max == (multiplicity == 1) &&
              extremes.maximal_indices.size() == multiplicity;

    const ComplexMatrix weight = weight_matrix(d);
    const double weight_scale = std::max(1.0, weight.frobenius_norm());
    ok = ok && is_cp(extremes.minimal_witness).completely_positive &&
         is_tp(extremes.minimal_witness).trace_preserving;

    for (int s = 0; ok && s < state_total; ++s) {
      const ComplexMatrix rho = testing::random_density(n, rng);

      // Trace projection sends any state to the normalized weight matrix.
      const ComplexMatrix projected = apply_choi(extremes.minimal_witness, rho);
      const ComplexMatrix target = (1.0 / d.sum()) * weight;
      ok = ok && (projected - target).frobenius_norm() <= 1e-9;
      ok = ok && (apply_choi(extremes.minimal_witness, weight) - weight)
                         .frobenius_norm() <= 1e-9 * weight_scale;

      // The peak at the smallest weight dominates rho, and the proof channel
      // actually transports the peak onto rho while fixing the weights.
      const PureStateMajReport peak = pure_state_majorization(rho, arg_min, d);
      ok = ok && peak.majorized && peak.witness.has_value();
      if (ok) {
        const ChoiMatrix& witness = *peak.witness;
        std::vector<double> peak_entries(n, 0.0);
        peak_entries[arg_min] = 1.0;
        const ComplexMatrix peak_state = ComplexMatrix::diagonal(peak_entries);
        ok = is_cp(witness).completely_positive &&
             is_tp(witness).trace_preserving &&
             (apply_choi(witness, peak_state) - rho).frobenius_norm() <= 1e-9 &&
             (apply_choi(witness, weight) - weight).frobenius_norm() <=
                 1e-9 * weight_scale;
      }
    }

    if (ok) {
      ++good_weights;
    } else if (first_failure.empty()) {
      first_failure = " (first failure at weight set " + std::to_string(rep) + ")";
    }
  }

  Outcome o;
  o.pass = good_weights == weight_total;
  o.detail = std::to_string(good_weights) + "/" + std::to_string(weight_total) +
             " weight sets with " + std::to_string(state_total) +
             " states each" + first_failure;
  return o;
}

// ---------------------------------------------------------------------------
// 8. The iteration toward the first basis state follows the closed form
//    (1 - q^a) e1 + q^a x and contracts the distance by exactly q per step.
//    The ratio check runs at q = 0.9, where all 30 steps stay far above the
//    cancellation floor of the distance computation.

Outcome criterion_iteration_contraction() {
  const RealVector x0 = {0.3, 0.7};
  const IterationReport run =
      iterate_majorization(x0, WeightVector(RealVector{10.0, 9.0}), 30);

  const bool closed_ok = run.max_closed_form_gap <= 1e-12;
  double worst_ratio_error = 0.0;
  for (std::size_t a = 1; a < run.distances.size(); ++a) {
    const double ratio = run.distances[a] / run.distances[a - 1];
    worst_ratio_error =
        std::max(worst_ratio_error, std::abs(ratio - run.q) / run.q);
  }
  const bool ratio_ok = worst_ratio_error < 1e-10;

  // Every factor of the macro-step is an honest stochastic matrix fixing
  // either the weights or the uniform vector.
  bool factors_ok = run.q == 0.9 && run.pivot == 0 && !run.mirrored;
  const WeightVector d(RealVector{10.0, 9.0});
  const WeightVector uniform(RealVector{1.0, 1.0});
  for (const IterationFactor& factor : run.factors) {
    const WeightVector& fixed = factor.fixes_weights ? d : uniform;
    const StochasticDiagnostics diag =
        stochastic_diagnostics(factor.matrix, &fixed);
    factors_ok = factors_ok && diag.min_entry >= -1e-12 &&
                 diag.worst_column_sum_gap <= 1e-12 &&
                 diag.worst_fixed_point_gap <= 1e-12;
  }

  const IterationReport steep =
      iterate_majorization(x0, WeightVector(RealVector{2.0, 1.0}), 30);
  const bool steep_ok = steep.max_closed_form_gap <= 1e-12 && steep.q == 0.5;

  Outcome o;
  o.pass = closed_ok && ratio_ok && factors_ok && steep_ok;
  o.detail = "closed-form gap " + fmt(run.max_closed_form_gap) +
             ", worst ratio error " + fmt(worst_ratio_error) + " at q = 0.9, " +
             std::to_string(run.factors.size()) +
             " stochastic factors, steep gap " +
             fmt(steep.max_closed_form_gap) + " at q = 0.5";
  return o;
}

// ---------------------------------------------------------------------------
// 9. The command line tool regenerates the whole showcase gallery with exit
//    code 0 and every per-case report verdict "reproduced".

bool check_passed(const cli::Json& report, const std::string& name) {
  for (const cli::Json& check : report["checks"]) {
    if (check["name"] == name) return check["pass"].get<bool>();
  }
  return false;
}

Outcome criterion_cli_reproduce(const std::string& cli_path) {
  Outcome o;
  if (cli_path.empty()) {
    o.detail = "no CLI binary path supplied on the command line";
    return o;
  }

  const fs::path dir =
      fs::temp_directory_path() /
      ("dmaj_acceptance_" + std::to_string(std::random_device{}()));
  const fs::path reports = dir / "reports";
  fs::create_directories(dir);

  const std::string command = "\"" + cli_path + "\" reproduce --case all --dir \"" +
                              reports.string() + "\" > \"" +
                              (dir / "stdout.txt").string() + "\" 2>&1";
  const int status = std::system(command.c_str());
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  int reproduced = 0;
  bool named_checks_ok = false;
  const std::vector<std::string> names = {
      "qubit-leaky",   "qutrit-shift",   "nonpositive-tp", "rank-deficient",
      "swap",          "transpose-pair", "iteration"};
  try {
    for (const std::string& name : names) {
      const cli::Json report = cli::load_json(reports / (name + ".json"));
      if (report["verdict"] == "reproduced") ++reproduced;
    }
    const cli::Json rank = cli::load_json(reports / "rank-deficient.json");
    const cli::Json swap = cli::load_json(reports / "swap.json");
    const cli::Json nonpos = cli::load_json(reports / "nonpositive-tp.json");
    named_checks_ok = check_passed(rank, "choi_spectrum_gap") &&
                      check_passed(rank, "dual_map_entry_gap") &&
                      check_passed(swap, "distance_to_identity");
    for (int m = 1; m <= 10 && named_checks_ok; ++m) {
      named_checks_ok = check_passed(
          nonpos, "negative_output_eigenvalue_m" + std::to_string(m));
    }
  } catch (const Error&) {
    named_checks_ok = false;
  }

  std::error_code ec;
  fs::remove_all(dir, ec);

  o.pass = exit_code == 0 && reproduced == 7 && named_checks_ok;
  o.detail = "exit code " + std::to_string(exit_code) + ", " +
             std::to_string(reproduced) + "/7 cases reproduced, named checks " +
             (named_checks_ok ? "pass" : "FAIL");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";

  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {"transpose-pair-obstruction", criterion_transpose_pair},
      {"qubit-criterion-vs-solver", criterion_qubit_oracles},
      {"diagonal-bridge", criterion_diagonal_bridge},
      {"universal-kernel", criterion_universal_kernel},
      {"distance-dichotomy", criterion_distance_dichotomy},
      {"channel-construction", criterion_channel_construction},
      {"order-extremes", criterion_order_extremes},
      {"iteration-contraction", criterion_iteration_contraction},
      {"cli-reproduce", [&] { return criterion_cli_reproduce(cli_path); }},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", entry.name,
                outcome.detail.c_str());
    if (!outcome.pass) ++failures;
  }

  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
