#pragma once

#include <string>
#include <vector>

#include "wrenchpoly/wrench.hpp"

namespace wrenchpoly::bench {

/// Representation strategies for building and querying the FWP.
///
/// kVertex keeps only the vertex description and answers membership by LP;
/// kHalfspace converts to facets as early as possible and answers by facet
/// evaluation; kDoubleDescription maintains both forms. All three describe
/// the same set; the timing rows quantify the trade-off.
enum class Pipeline { kVertex, kHalfspace, kDoubleDescription };

Pipeline pipeline_from_name(const std::string& name);
std::string pipeline_name(Pipeline p);

/// One CSV row: `pipeline,stage,n_vertices,n_facets,wall_ms`.
struct StageRow {
  std::string pipeline;
  std::string stage;
  int n_vertices = 0;
  int n_facets = 0;
  double wall_ms = 0.0;
};

struct PipelineResult {
  VPolytope fwp_v;      // populated for kVertex and kDoubleDescription
  HPolytope fwp_h;      // populated for kHalfspace and kDoubleDescription
  bool has_v = false;
  bool has_h = false;
  bool empty = false;
  std::vector<StageRow> rows;
};

/// Runs the chosen pipeline `repeats` times, emitting stage rows for the
/// AWP build, CWC build, FWP build, and `n_queries` membership queries per
/// repeat. Query wrenches are sampled deterministically from the scaled AWP
/// bounding box so every pipeline answers the identical workload.
PipelineResult run_pipeline(const RobotSnapshot& robot, Pipeline pipeline,
                            int repeats, int n_queries, const Tolerance& tol = {});

std::string rows_to_csv(const std::vector<StageRow>& rows);

}  // namespace wrenchpoly::bench
