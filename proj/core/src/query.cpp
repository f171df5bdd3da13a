#include "wrenchpoly/query.hpp"

#include <cmath>
#include <limits>

#include "wrenchpoly/errors.hpp"

namespace wrenchpoly {

namespace {

Eigen::VectorXd effective_scale(int dim, const std::optional<Eigen::VectorXd>& scale) {
  if (!scale) return Eigen::VectorXd::Ones(dim);
  if (scale->size() != dim) {
    throw InputError("characteristic scale length must match the polytope dimension");
  }
  if ((scale->array() <= 0.0).any()) {
    throw InputError("characteristic scale entries must be positive");
  }
  return *scale;
}

}  // namespace

FeasibilityResult check_wrench(const HPolytope& fwp, const Eigen::VectorXd& w,
                               const Tolerance& tol,
                               const std::optional<Eigen::VectorXd>& scale) {
  if (w.size() != fwp.dim) {
    throw InputError("check_wrench: wrench dimension mismatch");
  }
  FeasibilityResult res;
  if (fwp.is_marked_empty()) {
    res.feasible = false;
    res.margin = -1.0;
    return res;
  }
  const Eigen::VectorXd s = effective_scale(fwp.dim, scale);
  const std::vector<bool> eq = equality_pair_rows(fwp, tol);

  double min_slack = std::numeric_limits<double>::infinity();
  double worst_violation = 0.0;
  for (int i = 0; i < fwp.normals.rows(); ++i) {
    const Eigen::VectorXd weighted = fwp.normals.row(i).transpose().cwiseProduct(s);
    const double denom = std::max(weighted.norm(), 1e-30);
    const double slack = (fwp.offsets(i) - fwp.normals.row(i).dot(w)) / denom;
    if (eq[i]) {
      // Equality rows: membership constraint, not a margin contributor.
      if (slack < -tol.eps_contain) {
        worst_violation = std::max(worst_violation, -slack);
      }
      if (std::abs(slack) <= tol.eps_contain) res.binding_facets.push_back(i);
      continue;
    }
    if (slack < -tol.eps_contain) {
      worst_violation = std::max(worst_violation, -slack);
    }
    if (std::abs(slack) <= tol.eps_contain) res.binding_facets.push_back(i);
    min_slack = std::min(min_slack, slack);
  }

  if (worst_violation > 0.0) {
    res.feasible = false;
    res.margin = -worst_violation;
    return res;
  }
  res.feasible = true;
  if (!std::isfinite(min_slack)) min_slack = 0.0;  // pure-equality system
  res.margin = std::max(0.0, min_slack);
  return res;
}

FeasibilityResult check_wrench(const HPolytope& fwp, const Wrench& w,
                               const Tolerance& tol,
                               const std::optional<Eigen::VectorXd>& scale) {
  return check_wrench(fwp, Eigen::VectorXd(w.to_vector()), tol, scale);
}

double max_scale(const HPolytope& fwp, const Eigen::VectorXd& w0,
                 const Eigen::VectorXd& direction, const Tolerance& tol) {
  if (w0.size() != fwp.dim || direction.size() != fwp.dim) {
    throw InputError("max_scale: dimension mismatch");
  }
  if (direction.norm() <= 0.0) {
    throw InputError("max_scale: zero direction");
  }
  if (fwp.is_marked_empty()) {
    throw PreconditionError("max_scale: polytope is empty", 0);
  }
  const std::vector<bool> eq = equality_pair_rows(fwp, tol);

  // Precondition: w0 inside.
  for (int i = 0; i < fwp.normals.rows(); ++i) {
    const double nrm = std::max(fwp.normals.row(i).norm(), 1e-30);
    const double slack = (fwp.offsets(i) - fwp.normals.row(i).dot(w0)) / nrm;
    if (slack < -tol.eps_contain) {
      throw PreconditionError("max_scale: base wrench violates facet " +
                                  std::to_string(i),
                              i);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < fwp.normals.rows(); ++i) {
    const double along = fwp.normals.row(i).dot(direction);
    const double slack =
        std::max(0.0, fwp.offsets(i) - fwp.normals.row(i).dot(w0));
    if (eq[i]) {
      // Leaving the affine hull stops the ray immediately.
      const double nrm = std::max(fwp.normals.row(i).norm(), 1e-30);
      if (std::abs(along) / nrm > tol.eps_contain) return 0.0;
      continue;
    }
    if (along > 1e-30) {
      best = std::min(best, slack / along);
    }
  }
  return best;
}

ChebyshevResult fwp_margin(const HPolytope& fwp, const Tolerance& tol,
                           const std::optional<Eigen::VectorXd>& scale) {
  if (!scale) return chebyshev_center(fwp, tol);
  const Eigen::VectorXd s = effective_scale(fwp.dim, scale);
  // Inscribe the ball in scaled coordinates u = x / s, then map back.
  HPolytope scaled = fwp;
  for (int i = 0; i < scaled.normals.rows(); ++i) {
    scaled.normals.row(i) = scaled.normals.row(i).cwiseProduct(s.transpose());
  }
  ChebyshevResult res = chebyshev_center(scaled, tol);
  if (res.status == ChebyshevResult::Status::kOk) {
    res.center = res.center.cwiseProduct(s);
  }
  return res;
}

}  // namespace wrenchpoly
