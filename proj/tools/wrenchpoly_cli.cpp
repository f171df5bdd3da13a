// wrenchpoly: build and query wrench-feasibility polytopes for legged
// stances. Subcommands: compute, check, margin, project, bench.
//
// Exit codes: 0 success / feasible, 1 error, 2 empty result, 3 infeasible
// query.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrenchpoly/bench.hpp"
#include "wrenchpoly/errors.hpp"
#include "wrenchpoly/io.hpp"
#include "wrenchpoly/query.hpp"
#include "wrenchpoly/wrench.hpp"

namespace {

using namespace wrenchpoly;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitInfeasible = 3;

Tolerance resolve_tolerance(const std::optional<double>& flag_eps) {
  if (flag_eps) return Tolerance::from_contain_eps(*flag_eps);
  if (const char* env = std::getenv("WRENCHPOLY_TOL")) {
    char* end = nullptr;
    const double eps = std::strtod(env, &end);
    if (end == env || !(eps > 0.0)) {
      throw InputError("WRENCHPOLY_TOL must be a positive number");
    }
    return Tolerance::from_contain_eps(eps);
  }
  return Tolerance{};
}

Eigen::VectorXd parse_wrench(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InputError("--wrench: cannot parse '" + item + "' as a number");
    }
  }
  Eigen::VectorXd w(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) w(static_cast<int>(i)) = vals[i];
  return w;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      dims.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("--dims: cannot parse '" + item + "' as an index");
    }
  }
  return dims;
}

int run_compute(const std::string& robot_path, const std::string& set_name,
                const std::string& rep, const std::string& out_path,
                const Tolerance& tol, bool lax) {
  const RobotSnapshot robot = load_snapshot(robot_path, lax);

  PolytopeFile file;
  file.dim = 6;
  file.tolerance = tol;
  file.source = set_name + "(" + (robot.name.empty() ? robot_path : robot.name) + ")";
  const bool want_v = rep == "v" || rep == "both";
  const bool want_h = rep == "h" || rep == "both";
  bool empty = false;

  const auto t0 = Clock::now();
  if (set_name == "awp") {
    const VPolytope v = awp(robot, tol);
    if (want_v) file.v_form = v;
    if (want_h) file.h_form = v_to_h(v, tol);
    file.affine_dim = v.affine_dim;
  } else if (set_name == "cwc") {
    const ContactWrenchCone cone = cwc(robot, tol);
    if (want_v) file.v_form = cone.v_form;
    if (want_h) file.h_form = cone.h_form;
    file.affine_dim = cone.v_form.affine_dim;
  } else if (set_name == "fwp") {
    const FwpResult fwp = fwp_intersection(robot, tol);
    empty = fwp.empty;
    if (want_v) file.v_form = fwp.v_form;
    if (want_h) file.h_form = fwp.h_form;
    file.affine_dim = fwp.v_form.affine_dim;
  } else if (set_name == "fwp-perfoot") {
    const VPolytope v = fwp_per_foot(robot, tol);
    empty = v.is_empty();
    if (want_v) file.v_form = v;
    if (want_h) file.h_form = v_to_h(v, tol);
    file.affine_dim = v.affine_dim;
  } else {
    throw InputError("--set must be one of awp|cwc|fwp|fwp-perfoot");
  }
  file.stats.build_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (file.v_form) file.stats.n_vertices = file.v_form->num_vertices();
  if (file.h_form) file.stats.n_facets = file.h_form->num_facets();

  save_polytope(file, out_path);
  return empty ? kExitEmpty : kExitOk;
}

int run_check(const std::string& fwp_path, const std::string& wrench_text,
              const Tolerance& tol) {
  const PolytopeFile file = load_polytope(fwp_path);
  if (!file.h_form) {
    throw InputError(fwp_path +
                     ": no halfspace description; recompute with --rep h or --rep both");
  }
  const Eigen::VectorXd w = parse_wrench(wrench_text);
  if (w.size() != file.dim) {
    throw InputError("--wrench has " + std::to_string(w.size()) +
                     " components but the polytope has dimension " +
                     std::to_string(file.dim));
  }
  const FeasibilityResult res = check_wrench(*file.h_form, w, tol);
  nlohmann::json out = {
      {"feasible", res.feasible},
      {"margin", res.margin},
      {"binding_facets", res.binding_facets},
  };
  std::cout << out.dump() << "\n";
  return res.feasible ? kExitOk : kExitInfeasible;
}

int run_margin(const std::string& fwp_path, const Tolerance& tol) {
  const PolytopeFile file = load_polytope(fwp_path);
  if (!file.h_form) {
    throw InputError(fwp_path +
                     ": no halfspace description; recompute with --rep h or --rep both");
  }
  const ChebyshevResult res = fwp_margin(*file.h_form, tol);
  nlohmann::json out;
  switch (res.status) {
    case ChebyshevResult::Status::kOk: {
      std::vector<double> center(res.center.data(), res.center.data() + res.center.size());
      out = {{"empty", false}, {"unbounded", false}, {"center", center}, {"radius", res.radius}};
      std::cout << out.dump() << "\n";
      return kExitOk;
    }
    case ChebyshevResult::Status::kUnbounded:
      out = {{"empty", false}, {"unbounded", true}};
      std::cout << out.dump() << "\n";
      return kExitOk;
    case ChebyshevResult::Status::kEmpty:
    default:
      out = {{"empty", true}};
      std::cout << out.dump() << "\n";
      return kExitEmpty;
  }
}

int run_project(const std::string& poly_path, const std::string& dims_text,
                const std::string& out_path, const Tolerance& tol) {
  const PolytopeFile file = load_polytope(poly_path);
  if (!file.v_form) {
    throw InputError(poly_path +
                     ": no vertex description to project; recompute with --rep both");
  }
  const std::vector<int> dims = parse_dims(dims_text);
  const auto t0 = Clock::now();
  const VPolytope projected = project(*file.v_form, dims, tol);

  PolytopeFile out;
  out.dim = static_cast<int>(dims.size());
  out.affine_dim = projected.affine_dim;
  out.v_form = projected;
  out.tolerance = tol;
  std::ostringstream src;
  src << "project(" << (file.source.empty() ? poly_path : file.source) << ", dims=";
  for (size_t i = 0; i < dims.size(); ++i) src << (i ? "," : "") << dims[i];
  src << ")";
  out.source = src.str();
  out.stats.n_vertices = projected.num_vertices();
  out.stats.build_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  save_polytope(out, out_path);
  return projected.is_empty() ? kExitEmpty : kExitOk;
}

int run_bench(const std::string& robot_path, const std::string& pipeline_name,
              int repeat, const std::string& out_path, const Tolerance& tol,
              bool lax) {
  const RobotSnapshot robot = load_snapshot(robot_path, lax);
  const bench::Pipeline pipeline = bench::pipeline_from_name(pipeline_name);
  const bench::PipelineResult result =
      bench::run_pipeline(robot, pipeline, repeat, 1000, tol);
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot open output file: " + out_path);
  out << bench::rows_to_csv(result.rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Actuation and contact wrench polytopes for legged stances"};
  app.require_subcommand(1);

  std::optional<double> tol_eps;
  bool lax = false;
  app.add_option("--tol", tol_eps,
                 "containment tolerance; the remaining thresholds scale with it "
                 "(env WRENCHPOLY_TOL)");
  app.add_flag("--lax", lax, "accept unknown keys in snapshot files");

  std::string robot_path, set_name, rep = "v", out_path;
  auto* compute = app.add_subcommand("compute", "build a polytope from a robot snapshot");
  compute->add_option("--robot", robot_path, "snapshot JSON file")->required();
  compute->add_option("--set", set_name, "awp|cwc|fwp|fwp-perfoot")->required();
  compute->add_option("--rep", rep, "v|h|both (default v)")
      ->check(CLI::IsMember({"v", "h", "both"}));
  compute->add_option("--out", out_path, "output polytope JSON file")->required();
  compute->add_option("--tol", tol_eps, "containment tolerance override");

  std::string fwp_path, wrench_text;
  auto* check = app.add_subcommand("check", "test a wrench against a polytope file");
  check->add_option("--fwp", fwp_path, "polytope JSON file (needs halfspaces)")->required();
  check->add_option("--wrench", wrench_text, "fx,fy,fz,tx,ty,tz")->required();
  check->add_option("--tol", tol_eps, "containment tolerance override");

  std::string margin_path;
  auto* margin = app.add_subcommand("margin", "largest inscribed ball of a polytope file");
  margin->add_option("--fwp", margin_path, "polytope JSON file (needs halfspaces)")->required();
  margin->add_option("--tol", tol_eps, "containment tolerance override");

  std::string poly_path, dims_text, project_out;
  auto* proj = app.add_subcommand("project", "project the V-form onto selected coordinates");
  proj->add_option("--poly", poly_path, "polytope JSON file (needs vertices)")->required();
  proj->add_option("--dims", dims_text, "comma-separated coordinate indices, e.g. 0,2,4")
      ->required();
  proj->add_option("--out", project_out, "output polytope JSON file")->required();
  proj->add_option("--tol", tol_eps, "containment tolerance override");

  std::string bench_robot, bench_pipeline, bench_out;
  int bench_repeat = 1;
  auto* bench_cmd = app.add_subcommand("bench", "representation benchmark harness");
  bench_cmd->add_option("--robot", bench_robot, "snapshot JSON file")->required();
  bench_cmd->add_option("--pipeline", bench_pipeline, "v|h|dd")
      ->required()
      ->check(CLI::IsMember({"v", "h", "dd"}));
  bench_cmd->add_option("--repeat", bench_repeat, "timing repetitions (default 1)");
  bench_cmd->add_option("--out", bench_out, "output CSV file")->required();
  bench_cmd->add_option("--tol", tol_eps, "containment tolerance override");

  CLI11_PARSE(app, argc, argv);

  try {
    const Tolerance tol = resolve_tolerance(tol_eps);
    if (compute->parsed()) {
      return run_compute(robot_path, set_name, rep, out_path, tol, lax);
    }
    if (check->parsed()) {
      return run_check(fwp_path, wrench_text, tol);
    }
    if (margin->parsed()) {
      return run_margin(margin_path, tol);
    }
    if (proj->parsed()) {
      return run_project(poly_path, dims_text, project_out, tol);
    }
    if (bench_cmd->parsed()) {
      return run_bench(bench_robot, bench_pipeline, bench_repeat, bench_out, tol, lax);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
