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

#include "reproduce_cases.hpp"

#include <cmath>
#include <random>

#include "dmaj/eig.hpp"
#include "dmaj/errors.hpp"
#include "dmaj/matrix_majorization.hpp"
#include "dmaj/showcase.hpp"

namespace dmaj::cli {

namespace {

// Collects named pass/fail records; a case is reproduced when all pass.
class CheckList {
 public:
  // |observed - expected| <= tolerance
  void near(const std::string& name, double observed, double expected,
            double tolerance) {
    push(name, std::abs(observed - expected) <= tolerance, observed, expected,
         tolerance, "near");
  }
  void at_most(const std::string& name, double observed, double bound) {
    push(name, observed <= bound, observed, bound, 0.0, "at-most");
  }
  void at_least(const std::string& name, double observed, double bound) {
    push(name, observed >= bound, observed, bound, 0.0, "at-least");
  }
  void flag(const std::string& name, bool observed, bool expected) {
    push(name, observed == expected, observed ? 1.0 : 0.0,
         expected ? 1.0 : 0.0, 0.0, "flag");
  }

  bool all_passed() const { return all_; }
  const Json& checks() const { return checks_; }

 private:
  void push(const std::string& name, bool pass, double observed,
            double expected, double tolerance, const char* relation) {
    Json entry;
    entry["name"] = name;
    entry["pass"] = pass;
    entry["observed"] = observed;
    entry["expected"] = expected;
    if (tolerance > 0.0) entry["tolerance"] = tolerance;
    entry["relation"] = relation;
    checks_.push_back(std::move(entry));
    all_ = all_ && pass;
  }

  Json checks_ = Json::array();
  bool all_ = true;
};

Json base_report(const std::string& name, const ReproduceOptions& opts) {
  Json report;
  report["command"] = "reproduce";
  report["case"] = name;
  report["verdict"] = "";  // filled in by finish()
  report["tolerances"] = {{"tol", opts.tol},
                          {"max_iterations", opts.max_iterations}};
  report["seed"] = opts.seed;
  return report;
}

CaseResult finish(const std::string& name, Json report, const CheckList& cl) {
  report["verdict"] = cl.all_passed() ? "reproduced" : "deviation";
  report["checks"] = cl.checks();
  return CaseResult{name, cl.all_passed(), std::move(report)};
}

void check_cptp(CheckList& cl, const ChoiMatrix& choi, double tol) {
  const CpReport cp = is_cp(choi, tol);
  const TpReport tp = is_tp(choi, tol);
  cl.at_least("choi_min_eigenvalue", cp.min_choi_eigenvalue, -1e-9);
  cl.at_most("trace_preservation_gap", tp.max_deviation, 1e-10);
}

std::size_t rank_at(const ComplexMatrix& m, double threshold) {
  const HermitianEig eig = hermitian_eig(m.hermitian_part());
  std::size_t rank = 0;
  for (double value : eig.eigenvalues) {
    if (value > threshold) ++rank;
  }
  return rank;
}

ComplexMatrix random_hermitian_probe(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = Complex(dist(rng), dist(rng));
    }
  }
  return g.hermitian_part();
}

Json trace_to_json(const std::vector<ResidualSample>& trace) {
  Json out = Json::array();
  for (const ResidualSample& s : trace) {
    out.push_back({s.iteration, s.residual});
  }
  return out;
}

CaseResult case_qubit_leaky(const ReproduceOptions& opts) {
  const ChoiMatrix choi = showcase_qubit_leaky_channel();
  CheckList cl;
  check_cptp(cl, choi, opts.tol);
  const SpReport sp = strict_positivity_check(choi, opts.tol);
  cl.flag("strictly_positive", sp.strictly_positive, true);
  cl.near("min_eigenvalue_on_identity", sp.min_eigenvalue, 0.5, 1e-12);

  Json report = base_report("qubit-leaky", opts);
  report["margins"] = {{"min_eigenvalue_on_identity", sp.min_eigenvalue},
                       {"kernel_dim", sp.kernel_dim}};
  return finish("qubit-leaky", std::move(report), cl);
}

CaseResult case_qutrit_shift(const ReproduceOptions& opts) {
  const ChoiMatrix choi = showcase_qutrit_shift_channel();
  CheckList cl;
  check_cptp(cl, choi, opts.tol);
  const SpReport sp = strict_positivity_check(choi, opts.tol);
  cl.flag("strictly_positive", sp.strictly_positive, true);
  cl.near("min_eigenvalue_on_identity", sp.min_eigenvalue, 0.5, 1e-12);

  // Strict positivity does not preserve rank: a rank-one input inflates to
  // rank two while a rank-two input collapses to rank one.
  const ComplexMatrix rank_one =
      ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0, 0.0});
  const ComplexMatrix rank_two =
      ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0, 1.0});
  cl.near("rank_of_image_of_rank_one",
          static_cast<double>(rank_at(apply_choi(choi, rank_one), 1e-9)), 2.0,
          0.0);
  cl.near("rank_of_image_of_rank_two",
          static_cast<double>(rank_at(apply_choi(choi, rank_two), 1e-9)), 1.0,
          0.0);

  Json report = base_report("qutrit-shift", opts);
  report["margins"] = {{"min_eigenvalue_on_identity", sp.min_eigenvalue},
                       {"kernel_dim", sp.kernel_dim}};
  return finish("qutrit-shift", std::move(report), cl);
}

CaseResult case_nonpositive_tp(const ReproduceOptions& opts) {
  CheckList cl;
  const ComplexMatrix witness_input =
      ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
  Json eigenvalues = Json::array();
  for (unsigned m = 1; m <= 10; ++m) {
    const ChoiMatrix choi = showcase_nonpositive_tp_map(m);
    const TpReport tp = is_tp(choi, opts.tol);
    cl.at_most("trace_preservation_gap_m" + std::to_string(m),
               tp.max_deviation, 1e-10);
    const ComplexMatrix image = apply_choi(choi, witness_input);
    const double min_eig =
        hermitian_eig(image.hermitian_part()).eigenvalues.front();
    cl.near("negative_output_eigenvalue_m" + std::to_string(m), min_eig,
            -1.0 / m, 1e-12);
    eigenvalues.push_back(min_eig);
  }

  Json report = base_report("nonpositive-tp", opts);
  report["margins"] = {{"negative_output_eigenvalues", eigenvalues}};
  return finish("nonpositive-tp", std::move(report), cl);
}

CaseResult case_rank_deficient(const ReproduceOptions& opts) {
  const ChoiMatrix choi = showcase_rank_deficient_channel();
  CheckList cl;
  check_cptp(cl, choi, opts.tol);

  const SpReport sp = strict_positivity_check(choi, opts.tol);
  cl.flag("strictly_positive", sp.strictly_positive, false);
  cl.near("kernel_dim", static_cast<double>(sp.kernel_dim), 1.0, 0.0);

  const std::vector<double> spectrum =
      hermitian_eig(choi.matrix).eigenvalues;  // ascending
  const std::vector<double> expected = {0, 0, 0, 0, 0, 0, 0, 1, 2};
  double spectrum_gap = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    spectrum_gap = std::max(spectrum_gap, std::abs(spectrum[i] - expected[i]));
  }
  cl.at_most("choi_spectrum_gap", spectrum_gap, 1e-9);

  const BlockFormReport block = block_form_decomposition(choi, opts.tol);
  cl.near("block_form_kernel_dim", static_cast<double>(block.m), 1.0, 0.0);
  cl.at_most("block_form_residual", block.max_residual, 1e-9);

  const ChoiMatrix dual = dual_map(choi);
  const ChoiMatrix hand_dual = showcase_rank_deficient_dual();
  cl.at_most("dual_map_entry_gap", (dual.matrix - hand_dual.matrix).max_abs(),
             1e-12);

  // The defining pairing tr(T(A) B) = tr(A T*(B)) on random hermitian pairs.
  std::mt19937_64 rng(opts.seed);
  double worst_pairing_gap = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix a = random_hermitian_probe(3, rng);
    const ComplexMatrix b = random_hermitian_probe(3, rng);
    const Complex lhs = (apply_choi(choi, a) * b).trace();
    const Complex rhs = (a * apply_choi(dual, b)).trace();
    const double scale = std::max(1.0, std::abs(lhs));
    worst_pairing_gap = std::max(worst_pairing_gap, std::abs(lhs - rhs) / scale);
  }
  cl.at_most("dual_pairing_worst_gap", worst_pairing_gap, 1e-10);

  Json report = base_report("rank-deficient", opts);
  report["margins"] = {{"choi_spectrum", spectrum},
                       {"kernel_dim", sp.kernel_dim},
                       {"dual_pairing_worst_gap", worst_pairing_gap}};
  return finish("rank-deficient", std::move(report), cl);
}

CaseResult case_swap(const ReproduceOptions& opts) {
  const ChoiMatrix choi = showcase_swap_conjugation();
  CheckList cl;
  check_cptp(cl, choi, opts.tol);
  const SpReport sp = strict_positivity_check(choi, opts.tol);
  cl.flag("strictly_positive", sp.strictly_positive, true);
  cl.near("min_eigenvalue_on_identity", sp.min_eigenvalue, 1.0, 1e-12);

  // A unitary conjugation has a rank-one Choi matrix of trace n = 2.
  const std::vector<double> spectrum = hermitian_eig(choi.matrix).eigenvalues;
  double spectrum_gap = std::abs(spectrum.back() - 2.0);
  for (std::size_t i = 0; i + 1 < spectrum.size(); ++i) {
    spectrum_gap = std::max(spectrum_gap, std::abs(spectrum[i]));
  }
  cl.at_most("choi_spectrum_gap", spectrum_gap, 1e-9);

  DistanceSearchParams params;
  params.seed = opts.seed;
  const DistanceReport distance = distance_to_identity(choi, params);
  cl.near("distance_to_identity", distance.lower, 2.0, 1e-6);
  cl.at_least("distance_upper_bound", distance.upper, distance.lower - 1e-12);

  Json report = base_report("swap", opts);
  report["margins"] = {{"distance_lower", distance.lower},
                       {"distance_upper", distance.upper},
                       {"norm_estimate", distance.norm_estimate}};
  return finish("swap", std::move(report), cl);
}

CaseResult case_transpose_pair(const ReproduceOptions& opts) {
  const TransposePairInstance pair = showcase_transpose_pair();
  const DMajInstance inst = make_instance(pair.a, pair.b, pair.d_full, opts.tol);
  CheckList cl;

  // Every shifted trace-norm comparison holds (with equality), so the
  // necessary conditions cannot see the obstruction.
  const CurveReport curve = trace_norm_curve_check(inst, {}, opts.tol);
  cl.flag("trace_norm_curve_holds", curve.holds, true);
  cl.at_least("trace_norm_worst_margin", curve.worst_margin, -1e-10);

  const std::vector<ConvexProbe> square = {{ConvexProbe::Kind::Square, 0.0}};
  const ConvexCheckReport convex =
      matrix_convex_necessary_check(inst, square, opts.tol);
  cl.at_most("square_trace_equality_gap",
             std::abs(convex.results.front().margin), 1e-10);

  // Yet the channel search stalls: no trace-preserving completely positive
  // map with the required action exists.
  SolverParams params;
  params.max_iterations = opts.max_iterations;
  const MatrixFeasibilityReport feas = d_maj_feasibility(inst, params);
  cl.flag("solver_reports_infeasible",
          feas.verdict == FeasibilityVerdict::InfeasibleHeuristic, true);
  cl.at_least("solver_residual", feas.residual, 1e-4);
  cl.at_most("solver_iterations", static_cast<double>(feas.iterations),
             static_cast<double>(opts.max_iterations));

  Json report = base_report("transpose-pair", opts);
  report["margins"] = {{"trace_norm_worst_margin", curve.worst_margin},
                       {"trace_norm_worst_t", curve.worst_t},
                       {"square_trace_lhs", convex.results.front().lhs},
                       {"square_trace_rhs", convex.results.front().rhs},
                       {"solver_verdict", to_string(feas.verdict)},
                       {"solver_residual", feas.residual},
                       {"solver_iterations", feas.iterations}};
  Json points = Json::array();
  for (const CurvePoint& p : curve.points) points.push_back({p.t, p.margin});
  report["curve_points"] = std::move(points);
  report["residual_trace"] = trace_to_json(feas.residual_trace);
  return finish("transpose-pair", std::move(report), cl);
}

CaseResult case_iteration(const ReproduceOptions& opts) {
  CheckList cl;

  // Moderate ratio q = 0.9: every per-step contraction factor is resolvable
  // at full precision over all 30 steps.
  const WeightVector d(RealVector{10.0, 9.0});
  const RealVector x0 = {0.3, 0.7};
  const std::size_t steps = 30;
  const IterationReport run = iterate_majorization(x0, d, steps);
  cl.near("contraction_ratio", run.q, 0.9, 1e-15);
  cl.near("pivot", static_cast<double>(run.pivot), 0.0, 0.0);
  cl.flag("mirrored", run.mirrored, false);
  cl.at_most("closed_form_gap", run.max_closed_form_gap, 1e-12);

  double worst_ratio_error = 0.0;
  Json ratios = Json::array();
  for (std::size_t a = 1; a < run.distances.size(); ++a) {
    const double ratio = run.distances[a] / run.distances[a - 1];
    worst_ratio_error =
        std::max(worst_ratio_error, std::abs(ratio - run.q) / run.q);
    ratios.push_back(ratio);
  }
  cl.at_most("worst_ratio_relative_error", worst_ratio_error, 1e-10);

  // Steep ratio q = 1/2 for contrast; only the closed form is checked, the
  // late-step ratios drown in cancellation noise once the distance shrinks
  // toward the spacing of doubles near 1.
  const IterationReport steep =
      iterate_majorization(x0, WeightVector(RealVector{2.0, 1.0}), steps);
  cl.near("steep_contraction_ratio", steep.q, 0.5, 1e-15);
  cl.at_most("steep_closed_form_gap", steep.max_closed_form_gap, 1e-12);

  Json report = base_report("iteration", opts);
  report["margins"] = {{"q", run.q},
                       {"worst_ratio_relative_error", worst_ratio_error},
                       {"closed_form_gap", run.max_closed_form_gap},
                       {"steep_q", steep.q},
                       {"steep_closed_form_gap", steep.max_closed_form_gap}};
  report["distances"] = run.distances;
  report["ratios"] = std::move(ratios);
  return finish("iteration", std::move(report), cl);
}

}  // namespace

const std::vector<std::string>& reproduce_case_names() {
  static const std::vector<std::string> names = {
      "qubit-leaky",   "qutrit-shift",   "nonpositive-tp", "rank-deficient",
      "swap",          "transpose-pair", "iteration"};
  return names;
}

CaseResult run_reproduce_case(const std::string& name,
                              const ReproduceOptions& opts) {
  if (name == "qubit-leaky") return case_qubit_leaky(opts);
  if (name == "qutrit-shift") return case_qutrit_shift(opts);
  if (name == "nonpositive-tp") return case_nonpositive_tp(opts);
  if (name == "rank-deficient") return case_rank_deficient(opts);
  if (name == "swap") return case_swap(opts);
  if (name == "transpose-pair") return case_transpose_pair(opts);
  if (name == "iteration") return case_iteration(opts);
  throw Error("unknown reproduce case: " + name);
}

}  // namespace dmaj::cli
