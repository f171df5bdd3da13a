#include "wrenchpoly/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "wrenchpoly/errors.hpp"
#include "wrenchpoly/query.hpp"

namespace wrenchpoly::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

Pipeline pipeline_from_name(const std::string& name) {
  if (name == "v") return Pipeline::kVertex;
  if (name == "h") return Pipeline::kHalfspace;
  if (name == "dd") return Pipeline::kDoubleDescription;
  throw InputError("unknown pipeline '" + name + "' (expected v, h or dd)");
}

std::string pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::kVertex: return "v";
    case Pipeline::kHalfspace: return "h";
    case Pipeline::kDoubleDescription: return "dd";
  }
  return "?";
}

PipelineResult run_pipeline(const RobotSnapshot& robot, Pipeline pipeline,
                            int repeats, int n_queries, const Tolerance& tol) {
  if (repeats < 1) throw InputError("bench: repeats must be >= 1");
  PipelineResult result;
  const std::string pname = pipeline_name(pipeline);

  for (int rep = 0; rep < repeats; ++rep) {
    auto t0 = Clock::now();
    const VPolytope actuation = awp(robot, tol);
    result.rows.push_back({pname, "awp", actuation.num_vertices(), 0, ms_since(t0)});

    t0 = Clock::now();
    const ContactWrenchCone cone = cwc(robot, tol);
    result.rows.push_back({pname, "cwc", static_cast<int>(cone.v_form.rays.rows()),
                           cone.h_form.num_facets(), ms_since(t0)});

    t0 = Clock::now();
    const HPolytope fwp_h = intersect(v_to_h(actuation, tol), cone.h_form, tol);
    result.empty = fwp_h.is_marked_empty();
    VPolytope fwp_v;
    // The halfspace pipeline stops at facets; the other two also enumerate
    // vertices (and the vertex pipeline then drops the facet form).
    if (pipeline != Pipeline::kHalfspace) {
      fwp_v = result.empty ? VPolytope::empty_set(6) : h_to_v(fwp_h, tol);
    }
    const double fwp_ms = ms_since(t0);
    result.rows.push_back({pname, "fwp",
                           pipeline == Pipeline::kHalfspace ? 0 : fwp_v.num_vertices(),
                           fwp_h.num_facets(), fwp_ms});

    result.has_h = pipeline != Pipeline::kVertex;
    result.has_v = pipeline != Pipeline::kHalfspace;
    if (result.has_h) result.fwp_h = fwp_h;
    if (result.has_v) result.fwp_v = fwp_v;

    // Membership workload, identical across pipelines: deterministic samples
    // from the AWP bounding box scaled by 1.5.
    std::mt19937 rng(0x5EEDu);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::VectorXd lo = actuation.vertices.colwise().minCoeff().transpose();
    Eigen::VectorXd hi = actuation.vertices.colwise().maxCoeff().transpose();
    const Eigen::VectorXd mid = 0.5 * (lo + hi);
    const Eigen::VectorXd half = 0.75 * (hi - lo).cwiseMax(1e-6);
    t0 = Clock::now();
    int n_inside = 0;
    for (int q = 0; q < n_queries; ++q) {
      Eigen::VectorXd w(6);
      for (int i = 0; i < 6; ++i) w(i) = mid(i) + (2.0 * unit(rng) - 1.0) * half(i);
      bool inside = false;
      if (result.empty) {
        inside = false;
      } else if (pipeline == Pipeline::kVertex) {
        inside = contains(result.fwp_v, w, tol);
      } else {
        inside = contains(result.fwp_h, w, tol);
      }
      n_inside += inside ? 1 : 0;
    }
    (void)n_inside;
    result.rows.push_back({pname, "queries",
                           result.has_v ? result.fwp_v.num_vertices() : 0,
                           result.has_h ? result.fwp_h.num_facets() : 0,
                           ms_since(t0)});
  }
  return result;
}

std::string rows_to_csv(const std::vector<StageRow>& rows) {
  std::ostringstream out;
  out << "pipeline,stage,n_vertices,n_facets,wall_ms\n";
  for (const StageRow& r : rows) {
    out << r.pipeline << ',' << r.stage << ',' << r.n_vertices << ','
        << r.n_facets << ',' << r.wall_ms << '\n';
  }
  return out.str();
}

}  // namespace wrenchpoly::bench
