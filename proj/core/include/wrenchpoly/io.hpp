#pragma once

#include <optional>
#include <string>

#include "wrenchpoly/polytope.hpp"
#include "wrenchpoly/tolerance.hpp"
#include "wrenchpoly/wrench.hpp"

namespace wrenchpoly {

/// Build/size statistics carried in polytope files ("meta.stats").
struct PolytopeStats {
  int n_vertices = 0;
  int n_facets = 0;
  double build_ms = 0.0;
};

/// On-disk polytope document. Either description may be absent.
struct PolytopeFile {
  int dim = 0;
  int affine_dim = -1;
  std::optional<VPolytope> v_form;
  std::optional<HPolytope> h_form;
  std::string source;
  Tolerance tolerance;
  PolytopeStats stats;
};

/// Parses and validates a robot snapshot. Strict mode (default) rejects
/// unknown keys; errors carry the JSON field path that failed. Numeric
/// invariants of the limb/contact types are enforced at load; Jacobian rank
/// is deliberately left to compute time (it is tolerance dependent).
RobotSnapshot load_snapshot(const std::string& path, bool lax = false);
RobotSnapshot snapshot_from_json_text(const std::string& text, bool lax = false);

/// Serialization is full-precision decimal; reading back a written file
/// reproduces the document bit-exactly for canonical polytopes.
void save_polytope(const PolytopeFile& file, const std::string& path);
PolytopeFile load_polytope(const std::string& path);
std::string polytope_to_json_text(const PolytopeFile& file);
PolytopeFile polytope_from_json_text(const std::string& text);

}  // namespace wrenchpoly
