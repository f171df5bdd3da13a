#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "wrenchpoly/polytope.hpp"
#include "wrenchpoly/wrench.hpp"

namespace wrenchpoly {

/// Outcome of a wrench-membership query. For feasible queries `margin` is
/// the smallest normalized facet slack (>= 0); for infeasible ones it is the
/// negative of the largest violation. Mixed force/torque units are combined
/// unweighted unless a per-coordinate characteristic scale is supplied.
struct FeasibilityResult {
  bool feasible = false;
  double margin = 0.0;
  std::vector<int> binding_facets;  // facets active within eps_contain
};

/// Membership and margin of a wrench against an H-form polytope. Equality
/// pairs are enforced as exact-membership constraints (within eps_contain)
/// and excluded from the margin minimum.
FeasibilityResult check_wrench(const HPolytope& fwp, const Eigen::VectorXd& w,
                               const Tolerance& tol = {},
                               const std::optional<Eigen::VectorXd>& scale = {});
FeasibilityResult check_wrench(const HPolytope& fwp, const Wrench& w,
                               const Tolerance& tol = {},
                               const std::optional<Eigen::VectorXd>& scale = {});

/// Largest s >= 0 with w0 + s*d inside the polytope. Requires w0 inside
/// (PreconditionError otherwise, carrying the violated facet). Returns
/// +infinity when no facet bounds the ray (cone-only queries).
double max_scale(const HPolytope& fwp, const Eigen::VectorXd& w0,
                 const Eigen::VectorXd& direction, const Tolerance& tol = {});

/// Wrench of maximal uniform slack (Chebyshev center) and its radius, an
/// overall stance-quality scalar. Optional diagonal scale weights the
/// coordinates before the ball is inscribed.
ChebyshevResult fwp_margin(const HPolytope& fwp, const Tolerance& tol = {},
                           const std::optional<Eigen::VectorXd>& scale = {});

}  // namespace wrenchpoly
