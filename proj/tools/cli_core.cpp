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

#include "cli_core.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dmaj/eig.hpp"
#include "dmaj/errors.hpp"
#include "dmaj/matrix_majorization.hpp"
#include "json_io.hpp"
#include "reproduce_cases.hpp"

namespace dmaj::cli {

namespace {

struct CommonOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::size_t max_iter = SolverParams{}.max_iterations;
  std::string format = "text";
  std::string report_path;
};

void add_common_options(CLI::App* cmd, CommonOptions* o) {
  cmd->add_option("--tol", o->tol, "decision tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", o->seed, "seed for randomized probing")
      ->capture_default_str();
  cmd->add_option("--max-iter", o->max_iter,
                  "iteration cap for feasibility solvers")
      ->capture_default_str();
  cmd->add_option("--format", o->format, "stdout rendering of the report")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", o->report_path,
                  "also write the JSON report to this file");
}

Json new_report(const std::string& command, const CommonOptions& o) {
  Json report;
  report["command"] = command;
  report["tolerances"] = {{"tol", o.tol}, {"max_iterations", o.max_iter}};
  report["seed"] = o.seed;
  return report;
}

// ---------------------------------------------------------------------------
// Plain-text rendering. The JSON report stays the single source of truth;
// this walks it and prints scalar leaves as dotted paths, with matrices and
// long arrays summarized.

bool is_matrix_like(const Json& v) {
  return v.is_object() && (v.contains("entries") || v.contains("diag"));
}

bool is_scalar_array(const Json& v) {
  for (const Json& e : v) {
    if (e.is_structured()) return false;
  }
  return true;
}

void render_value_line(std::ostream& out, const std::string& path,
                       const Json& v) {
  out << "  " << path << " = ";
  if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
  out << "\n";
}

void render_checks(const Json& checks, std::ostream& out) {
  for (const Json& c : checks) {
    const std::string relation = c["relation"].get<std::string>();
    out << "  check " << c["name"].get<std::string>() << ": "
        << (c["pass"].get<bool>() ? "pass" : "FAIL") << " (observed "
        << c["observed"].dump();
    if (relation == "near") {
      out << ", expected " << c["expected"].dump();
      if (c.contains("tolerance")) out << " within " << c["tolerance"].dump();
    } else {
      out << ", " << relation << " " << c["expected"].dump();
    }
    out << ")\n";
  }
}

void render_cases(const Json& cases, std::ostream& out) {
  for (const Json& c : cases) {
    out << "  case " << c["case"].get<std::string>() << ": "
        << c["verdict"].get<std::string>() << " (" << c["report"].get<std::string>()
        << ")\n";
  }
}

void render_tree(const Json& node, const std::string& prefix,
                 std::ostream& out) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string& key = it.key();
    if (prefix.empty() && (key == "command" || key == "case" || key == "verdict")) {
      continue;
    }
    const Json& v = it.value();
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (key == "checks" && v.is_array()) {
      render_checks(v, out);
    } else if (key == "cases" && v.is_array()) {
      render_cases(v, out);
    } else if (is_matrix_like(v)) {
      if (v.contains("diag")) {
        out << "  " << path << " = <diagonal matrix, " << v["diag"].size()
            << " entries>\n";
      } else {
        out << "  " << path << " = <matrix " << v["rows"].dump() << " x "
            << v["cols"].dump() << ">\n";
      }
    } else if (v.is_object()) {
      render_tree(v, path, out);
    } else if (v.is_array()) {
      if (is_scalar_array(v) && v.size() <= 12) {
        render_value_line(out, path, v);
      } else {
        out << "  " << path << " = [" << v.size() << " entries]\n";
      }
    } else {
      render_value_line(out, path, v);
    }
  }
}

void render_text(const Json& report, std::ostream& out) {
  out << report["command"].get<std::string>();
  if (report.contains("case")) {
    out << " " << report["case"].get<std::string>();
  }
  out << ": " << report["verdict"].get<std::string>() << "\n";
  render_tree(report, "", out);
}

int finish_report(Json report, int exit_code, const CommonOptions& o,
                  std::ostream& out) {
  report["exit_code"] = exit_code;
  if (!o.report_path.empty()) {
    write_json_file(o.report_path, report);
  }
  if (o.format == "json") {
    out << dump_report(report);
  } else {
    render_text(report, out);
  }
  return exit_code;
}

Json trace_to_json(const std::vector<ResidualSample>& trace) {
  Json out = Json::array();
  for (const ResidualSample& s : trace) {
    out.push_back({s.iteration, s.residual});
  }
  return out;
}

// Guaranteed positive definite: for hermitian h the smallest eigenvalue is
// at least -|h|_F, so h + (|h|_F + 1) is bounded below by the identity.
ComplexMatrix random_pd_probe(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = Complex(dist(rng), dist(rng));
    }
  }
  const ComplexMatrix h = g.hermitian_part();
  return h + (h.frobenius_norm() + 1.0) * ComplexMatrix::identity(n);
}

// ---------------------------------------------------------------------------
// check-sp

struct CheckSpOptions {
  std::string map_path;
  std::size_t probes = 12;
  std::size_t in_dim = 0;  // 0: take it from the file or assume square blocks
  CommonOptions common;
};

int cmd_check_sp(const CheckSpOptions& opt, std::ostream& out) {
  std::optional<std::size_t> in_dim;
  if (opt.in_dim > 0) in_dim = opt.in_dim;
  const ChoiMatrix choi = choi_from_json(load_json(opt.map_path), in_dim);

  const SpReport sp = strict_positivity_check(choi, opt.common.tol);
  const CpReport cp = is_cp(choi, opt.common.tol);
  const TpReport tp = is_tp(choi, opt.common.tol);

  Json report = new_report("check-sp", opt.common);
  report["inputs"] = {{"map", opt.map_path},
                      {"in_dim", choi.in_dim},
                      {"out_dim", choi.out_dim}};
  report["verdict"] =
      sp.strictly_positive ? "strictly-positive" : "not-strictly-positive";
  report["margins"] = {{"min_eigenvalue_on_identity", sp.min_eigenvalue},
                       {"kernel_dim", sp.kernel_dim},
                       {"choi_min_eigenvalue", cp.min_choi_eigenvalue},
                       {"completely_positive", cp.completely_positive},
                       {"trace_preservation_gap", tp.max_deviation},
                       {"trace_preserving", tp.trace_preserving}};

  if (opt.probes > 0) {
    std::mt19937_64 rng(opt.common.seed);
    std::vector<ComplexMatrix> probes;
    probes.reserve(opt.probes);
    for (std::size_t i = 0; i < opt.probes; ++i) {
      probes.push_back(random_pd_probe(choi.in_dim, rng));
    }
    const UniversalKernelReport kernel =
        universal_kernel(choi, probes, opt.common.tol);
    report["heuristic_probes"] = {
        {"count", opt.probes},
        {"kernel_consistent", kernel.consistent},
        {"worst_kernel_gap", kernel.worst_gap},
        {"note",
         "sampled positive definite inputs; positivity of the map itself is "
         "a caller responsibility"}};
  }

  if (!sp.strictly_positive) {
    const BlockFormReport block =
        block_form_decomposition(choi, opt.common.tol);
    report["block_form"] = {{"m", block.m},
                            {"max_residual", block.max_residual},
                            {"unitary", matrix_to_json(block.unitary)},
                            {"projection", matrix_to_json(block.projection)},
                            {"kernel_basis", matrix_to_json(block.kernel_basis)}};
  }

  return finish_report(std::move(report),
                       sp.strictly_positive ? kExitYes : kExitNo, opt.common,
                       out);
}

// ---------------------------------------------------------------------------
// check-dmaj

struct CheckDmajOptions {
  std::string a_path;
  std::string b_path;
  std::string d_path;
  std::string method = "auto";
  CommonOptions common;
};

int cmd_check_dmaj(const CheckDmajOptions& opt, std::ostream& out) {
  const ComplexMatrix a = matrix_from_json(load_json(opt.a_path));
  const ComplexMatrix b = matrix_from_json(load_json(opt.b_path));
  const Json dj = load_json(opt.d_path);

  // Arrays and the diag shorthand name the weights directly; a full matrix
  // file goes through the weight-matrix route, which rotates everything into
  // the eigenbasis of the weight when it is not already diagonal.
  const bool d_is_vector = dj.is_array() || (dj.is_object() && dj.contains("diag"));
  const DMajInstance inst =
      d_is_vector
          ? make_instance(a, b, WeightVector(real_vector_from_json(dj)),
                          opt.common.tol)
          : make_instance(a, b, matrix_from_json(dj), opt.common.tol);
  const std::size_t n = inst.a.rows();

  if (opt.method == "qubit" && n != 2) {
    throw DimensionMismatch("--method qubit needs 2 x 2 operands, got n = " +
                            std::to_string(n));
  }
  const bool use_qubit = opt.method == "qubit" || (opt.method == "auto" && n == 2);
  const bool use_solver = opt.method == "feasibility" || opt.method == "auto";

  Json qubit_margins;
  std::optional<bool> qubit_majorized;
  if (use_qubit) {
    const QubitCheckReport q = qubit_check(inst, opt.common.tol);
    qubit_majorized = q.majorized;
    qubit_margins = {{"majorized", q.majorized},
                     {"b1", q.b1},
                     {"b2", q.b2},
                     {"trace_gap", q.trace_gap},
                     {"trace_equal", q.trace_equal},
                     {"norm_low_margin", q.norm_low_margin},
                     {"norm_low", q.norm_low},
                     {"norm_high_margin", q.norm_high_margin},
                     {"norm_high", q.norm_high},
                     {"fidelity_margin", q.fidelity_margin},
                     {"fidelity", q.fidelity},
                     {"degenerate_window", q.degenerate_window}};
  }

  Json solver_margins;
  Json residual_trace;
  std::optional<Json> witness_json;
  std::optional<FeasibilityVerdict> solver_verdict;
  if (use_solver) {
    SolverParams params;
    params.max_iterations = opt.common.max_iter;
    const MatrixFeasibilityReport feas = d_maj_feasibility(inst, params);
    solver_verdict = feas.verdict;
    solver_margins = {{"verdict", to_string(feas.verdict)},
                      {"residual", feas.residual},
                      {"iterations", feas.iterations},
                      {"certified", feas.verdict == FeasibilityVerdict::Feasible ||
                                        feas.verdict ==
                                            FeasibilityVerdict::InfeasibleCertified}};
    if (feas.witness.has_value()) {
      solver_margins["witness_min_eigenvalue"] = feas.witness_min_eigenvalue;
      solver_margins["witness_tp_gap"] = feas.witness_tp_gap;
      solver_margins["witness_map_b_gap"] = feas.witness_map_b_gap;
      solver_margins["witness_map_d_gap"] = feas.witness_map_d_gap;
      witness_json = choi_to_json(*feas.witness);
    }
    residual_trace = trace_to_json(feas.residual_trace);
  }

  std::string verdict;
  int code = kExitError;
  if (use_qubit) {
    verdict = *qubit_majorized ? "d-majorized" : "not-d-majorized";
    code = *qubit_majorized ? kExitYes : kExitNo;
  } else {
    switch (*solver_verdict) {
      case FeasibilityVerdict::Feasible:
        verdict = "d-majorized";
        code = kExitYes;
        break;
      case FeasibilityVerdict::InfeasibleCertified:
      case FeasibilityVerdict::InfeasibleHeuristic:
        verdict = "not-d-majorized";
        code = kExitNo;
        break;
      case FeasibilityVerdict::Undecided:
        verdict = "undecided";
        code = kExitUndecided;
        break;
    }
  }

  Json report = new_report("check-dmaj", opt.common);
  report["inputs"] = {
      {"a", opt.a_path}, {"b", opt.b_path}, {"d", opt.d_path}, {"n", n}};
  report["method"] = opt.method;
  report["method_used"] = use_qubit ? "qubit" : "feasibility";
  report["verdict"] = verdict;
  if (use_qubit && use_solver) {
    const char* cross = "inconclusive";
    if (*solver_verdict != FeasibilityVerdict::Undecided) {
      cross = (*solver_verdict == FeasibilityVerdict::Feasible) ==
                      *qubit_majorized
                  ? "agrees"
                  : "disagrees";
    }
    report["cross_check"] = cross;
  }
  Json margins;
  if (use_qubit) margins["qubit"] = std::move(qubit_margins);
  if (use_solver) margins["solver"] = std::move(solver_margins);
  report["margins"] = std::move(margins);
  if (use_solver) report["residual_trace"] = std::move(residual_trace);
  if (witness_json.has_value()) report["witness"] = std::move(*witness_json);

  return finish_report(std::move(report), code, opt.common, out);
}

// ---------------------------------------------------------------------------
// check-dvec

struct CheckDvecOptions {
  std::string x_path;
  std::string y_path;
  std::string d_path;
  bool witness = false;
  CommonOptions common;
};

int cmd_check_dvec(const CheckDvecOptions& opt, std::ostream& out) {
  const RealVector x = real_vector_from_json(load_json(opt.x_path));
  const RealVector y = real_vector_from_json(load_json(opt.y_path));
  const WeightVector d(real_vector_from_json(load_json(opt.d_path)));

  const DMajVectorReport check = d_majorization_check(x, y, d, opt.common.tol);

  Json report = new_report("check-dvec", opt.common);
  report["inputs"] = {{"x", opt.x_path}, {"y", opt.y_path}, {"d", opt.d_path}};
  report["verdict"] = check.majorized ? "d-majorized" : "not-d-majorized";
  Json margins = {{"sum_gap", check.sum_gap},
                  {"sums_equal", check.sums_equal},
                  {"worst_positive_part_gap", check.worst_positive_part_gap},
                  {"positive_part_criterion", check.positive_part_criterion},
                  {"worst_trace_norm_gap", check.worst_trace_norm_gap},
                  {"trace_norm_criterion", check.trace_norm_criterion},
                  {"criteria_agree", check.criteria_agree}};

  std::optional<Json> witness_json;
  Json residual_trace;
  if (opt.witness) {
    SolverParams params;
    params.max_iterations = opt.common.max_iter;
    const VectorFeasibilityReport solver = d_stochastic_witness(x, y, d, params);
    margins["witness_solver"] = {{"verdict", to_string(solver.verdict)},
                                 {"residual", solver.residual},
                                 {"iterations", solver.iterations}};
    residual_trace = trace_to_json(solver.residual_trace);
    if (solver.witness.has_value()) {
      witness_json = real_matrix_to_json(solver.witness->entries);
    }
  }
  report["margins"] = std::move(margins);
  if (opt.witness) report["residual_trace"] = std::move(residual_trace);
  if (witness_json.has_value()) report["witness"] = std::move(*witness_json);

  return finish_report(std::move(report),
                       check.majorized ? kExitYes : kExitNo, opt.common, out);
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
  std::string a_path;
  std::string b_path;
  std::string omega_path;
  std::string choi_out;
  CommonOptions common;
};

int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
  const ComplexMatrix a = matrix_from_json(load_json(opt.a_path));
  const ComplexMatrix b = matrix_from_json(load_json(opt.b_path));
  std::optional<ComplexMatrix> omega;
  if (!opt.omega_path.empty()) {
    omega = matrix_from_json(load_json(opt.omega_path));
  }

  const ChoiMatrix choi = construct_channel_pair(a, b, omega, opt.common.tol);

  const CpReport cp = is_cp(choi, opt.common.tol);
  const TpReport tp = is_tp(choi, opt.common.tol);
  const double action_gap = (apply_choi(choi, b) - a).frobenius_norm();
  const double scale =
      std::max(1.0, std::max(a.frobenius_norm(), b.frobenius_norm()));
  const bool verified = cp.completely_positive && tp.trace_preserving &&
                        action_gap <= opt.common.tol * scale;

  Json report = new_report("construct", opt.common);
  report["inputs"] = {{"a", opt.a_path},
                      {"b", opt.b_path},
                      {"omega", opt.omega_path.empty() ? Json() : Json(opt.omega_path)}};
  report["verdict"] = verified ? "constructed" : "construction-failed";
  report["margins"] = {{"choi_min_eigenvalue", cp.min_choi_eigenvalue},
                       {"completely_positive", cp.completely_positive},
                       {"trace_preservation_gap", tp.max_deviation},
                       {"trace_preserving", tp.trace_preserving},
                       {"action_gap", action_gap},
                       {"action_scale", scale}};
  report["witness"] = choi_to_json(choi);
  if (!opt.choi_out.empty()) {
    write_json_file(opt.choi_out, choi_to_json(choi));
  }

  return finish_report(std::move(report), verified ? kExitYes : kExitNo,
                       opt.common, out);
}

// ---------------------------------------------------------------------------
// lift-diag

struct LiftDiagOptions {
  std::string matrix_path;
  std::string d_path;
  std::string choi_out;
  CommonOptions common;
};

int cmd_lift_diag(const LiftDiagOptions& opt, std::ostream& out) {
  const RealMatrix m = real_matrix_from_json(load_json(opt.matrix_path));
  const WeightVector d(real_vector_from_json(load_json(opt.d_path)));

  const StochasticMatrix stochastic =
      StochasticMatrix::checked(m, {}, opt.common.tol);
  const ChoiMatrix choi = lift_diagonal_channel(stochastic, d, opt.common.tol);

  const CpReport cp = is_cp(choi, opt.common.tol);
  const TpReport tp = is_tp(choi, opt.common.tol);
  const StochasticDiagnostics diag = stochastic_diagnostics(m, &d);

  Json report = new_report("lift-diag", opt.common);
  report["inputs"] = {{"matrix", opt.matrix_path}, {"d", opt.d_path}};
  report["verdict"] = "lifted";
  report["margins"] = {{"choi_min_eigenvalue", cp.min_choi_eigenvalue},
                       {"trace_preservation_gap", tp.max_deviation},
                       {"min_entry", diag.min_entry},
                       {"worst_column_sum_gap", diag.worst_column_sum_gap},
                       {"worst_fixed_point_gap", diag.worst_fixed_point_gap}};
  report["witness"] = choi_to_json(choi);
  if (!opt.choi_out.empty()) {
    write_json_file(opt.choi_out, choi_to_json(choi));
  }

  return finish_report(std::move(report), kExitYes, opt.common, out);
}

// ---------------------------------------------------------------------------
// minmax

struct MinmaxOptions {
  std::string d_path;
  CommonOptions common;
};

int cmd_minmax(const MinmaxOptions& opt, std::ostream& out) {
  const WeightVector d(real_vector_from_json(load_json(opt.d_path)));
  const MinMaxReport minmax = minmax_elements(d, opt.common.tol);

  Json report = new_report("minmax", opt.common);
  report["inputs"] = {{"d", opt.d_path}, {"n", d.size()}};
  report["verdict"] = "computed";
  report["margins"] = {{"peak_value", d.sum()},
                       {"maximal_indices", minmax.maximal_indices},
                       {"unique_maximal", minmax.unique_max}};
  report["minimal"] = matrix_to_json(minmax.minimal);
  Json maximal = Json::array();
  for (const ComplexMatrix& peak : minmax.maximal) {
    maximal.push_back(matrix_to_json(peak));
  }
  report["maximal"] = std::move(maximal);
  report["witness"] = choi_to_json(minmax.minimal_witness);

  return finish_report(std::move(report), kExitYes, opt.common, out);
}

// ---------------------------------------------------------------------------
// iterate

struct IterateOptions {
  std::string x_path;
  std::string d_path;
  std::size_t steps = 30;
  CommonOptions common;
};

int cmd_iterate(const IterateOptions& opt, std::ostream& out) {
  const RealVector x = real_vector_from_json(load_json(opt.x_path));
  const WeightVector d(real_vector_from_json(load_json(opt.d_path)));
  const IterationReport run = iterate_majorization(x, d, opt.steps);

  Json report = new_report("iterate", opt.common);
  report["inputs"] = {{"x", opt.x_path}, {"d", opt.d_path}, {"steps", opt.steps}};
  report["verdict"] = "converging";
  report["margins"] = {{"q", run.q},
                       {"pivot", run.pivot},
                       {"mirrored", run.mirrored},
                       {"factor_count", run.factors.size()},
                       {"max_closed_form_gap", run.max_closed_form_gap}};
  report["distances"] = run.distances;
  Json sequence = Json::array();
  for (const RealVector& v : run.sequence) sequence.push_back(v);
  report["sequence"] = std::move(sequence);

  return finish_report(std::move(report), kExitYes, opt.common, out);
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceCliOptions {
  std::string case_name = "all";
  std::string dir = "reproduce-reports";
  CommonOptions common;
};

int cmd_reproduce(const ReproduceCliOptions& opt, std::ostream& out) {
  std::vector<std::string> names;
  if (opt.case_name == "all") {
    names = reproduce_case_names();
  } else {
    const auto& known = reproduce_case_names();
    if (std::find(known.begin(), known.end(), opt.case_name) == known.end()) {
      throw Error("unknown reproduce case: " + opt.case_name);
    }
    names = {opt.case_name};
  }

  std::filesystem::create_directories(opt.dir);
  ReproduceOptions ropts;
  ropts.tol = opt.common.tol;
  ropts.seed = opt.common.seed;
  ropts.max_iterations = opt.common.max_iter;

  Json cases = Json::array();
  bool all_ok = true;
  for (const std::string& name : names) {
    const CaseResult result = run_reproduce_case(name, ropts);
    const std::filesystem::path path =
        std::filesystem::path(opt.dir) / (name + ".json");
    write_json_file(path, result.report);
    cases.push_back({{"case", name},
                     {"verdict", result.report["verdict"]},
                     {"report", path.string()}});
    all_ok = all_ok && result.reproduced;
  }

  Json report = new_report("reproduce", opt.common);
  report["inputs"] = {{"case", opt.case_name}, {"dir", opt.dir}};
  report["verdict"] = all_ok ? "reproduced" : "deviation";
  report["cases"] = std::move(cases);

  return finish_report(std::move(report), all_ok ? kExitYes : kExitNo,
                       opt.common, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision procedures and channel constructions for "
               "d-majorization of hermitian matrices"};
  app.name("dmaj");
  app.require_subcommand(1);

  CheckSpOptions sp_opt;
  CLI::App* sp_cmd = app.add_subcommand(
      "check-sp", "decide strict positivity of a map from its Choi matrix");
  sp_cmd->add_option("--map", sp_opt.map_path, "Choi matrix JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  sp_cmd->add_option("--probes", sp_opt.probes,
                     "positive definite inputs for the heuristic kernel check")
      ->capture_default_str();
  sp_cmd->add_option("--in-dim", sp_opt.in_dim,
                     "input dimension when the file carries no in_dim");
  add_common_options(sp_cmd, &sp_opt.common);

  CheckDmajOptions dmaj_opt;
  CLI::App* dmaj_cmd = app.add_subcommand(
      "check-dmaj", "decide whether a is d-majorized by b");
  dmaj_cmd->add_option("--A,--a", dmaj_opt.a_path, "matrix a (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  dmaj_cmd->add_option("--B,--b", dmaj_opt.b_path, "matrix b (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  dmaj_cmd->add_option("--d", dmaj_opt.d_path,
                       "weights: array, diag shorthand, or a positive "
                       "definite weight matrix")
      ->required()
      ->check(CLI::ExistingFile);
  dmaj_cmd->add_option("--method", dmaj_opt.method,
                       "qubit (exact, n = 2), feasibility (any n), or auto")
      ->check(CLI::IsMember({"qubit", "feasibility", "auto"}))
      ->capture_default_str();
  add_common_options(dmaj_cmd, &dmaj_opt.common);

  CheckDvecOptions dvec_opt;
  CLI::App* dvec_cmd = app.add_subcommand(
      "check-dvec", "decide d-majorization between real vectors");
  dvec_cmd->add_option("--x", dvec_opt.x_path, "target vector (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  dvec_cmd->add_option("--y", dvec_opt.y_path, "source vector (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  dvec_cmd->add_option("--d", dvec_opt.d_path, "weight vector (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  dvec_cmd->add_flag("--witness", dvec_opt.witness,
                     "also search for an explicit d-stochastic matrix");
  add_common_options(dvec_cmd, &dvec_opt.common);

  ConstructOptions construct_opt;
  CLI::App* construct_cmd = app.add_subcommand(
      "construct", "build a channel T with T(b) = a from trace and norm data");
  construct_cmd->add_option("--A,--a", construct_opt.a_path, "target matrix (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  construct_cmd->add_option("--B,--b", construct_opt.b_path, "source matrix (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  construct_cmd->add_option("--omega", construct_opt.omega_path,
                            "state receiving the kernel of b (JSON)")
      ->check(CLI::ExistingFile);
  construct_cmd->add_option("--choi-out", construct_opt.choi_out,
                            "write the bare Choi matrix to this file");
  add_common_options(construct_cmd, &construct_opt.common);

  LiftDiagOptions lift_opt;
  CLI::App* lift_cmd = app.add_subcommand(
      "lift-diag", "lift a column-stochastic matrix fixing d to a channel");
  lift_cmd->add_option("--matrix", lift_opt.matrix_path,
                       "column-stochastic matrix (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  lift_cmd->add_option("--d", lift_opt.d_path, "fixed weight vector (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  lift_cmd->add_option("--choi-out", lift_opt.choi_out,
                       "write the bare Choi matrix to this file");
  add_common_options(lift_cmd, &lift_opt.common);

  MinmaxOptions minmax_opt;
  CLI::App* minmax_cmd = app.add_subcommand(
      "minmax", "minimal and maximal matrices in the d-majorization order");
  minmax_cmd->add_option("--d", minmax_opt.d_path, "weight vector (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  add_common_options(minmax_cmd, &minmax_opt.common);

  IterateOptions iterate_opt;
  CLI::App* iterate_cmd = app.add_subcommand(
      "iterate", "drive a probability vector toward e1 by d-stochastic steps");
  iterate_cmd->add_option("--x", iterate_opt.x_path, "probability vector (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  iterate_cmd->add_option("--d", iterate_opt.d_path, "weight vector (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  iterate_cmd->add_option("--steps", iterate_opt.steps, "macro-steps to run")
      ->capture_default_str();
  add_common_options(iterate_cmd, &iterate_opt.common);

  ReproduceCliOptions repro_opt;
  CLI::App* repro_cmd = app.add_subcommand(
      "reproduce", "re-run the showcase gallery against expected outcomes");
  repro_cmd->add_option("--case", repro_opt.case_name,
                        "case name or \"all\"")
      ->capture_default_str();
  repro_cmd->add_option("--dir", repro_opt.dir, "directory for case reports")
      ->capture_default_str();
  add_common_options(repro_cmd, &repro_opt.common);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dmaj");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (app.got_subcommand(sp_cmd)) return cmd_check_sp(sp_opt, out);
    if (app.got_subcommand(dmaj_cmd)) return cmd_check_dmaj(dmaj_opt, out);
    if (app.got_subcommand(dvec_cmd)) return cmd_check_dvec(dvec_opt, out);
    if (app.got_subcommand(construct_cmd)) return cmd_construct(construct_opt, out);
    if (app.got_subcommand(lift_cmd)) return cmd_lift_diag(lift_opt, out);
    if (app.got_subcommand(minmax_cmd)) return cmd_minmax(minmax_opt, out);
    if (app.got_subcommand(iterate_cmd)) return cmd_iterate(iterate_opt, out);
    if (app.got_subcommand(repro_cmd)) return cmd_reproduce(repro_opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace dmaj::cli
