#include "wrenchpoly/limb.hpp"

#include <cmath>

#include "wrenchpoly/errors.hpp"

namespace wrenchpoly {

namespace {
constexpr int kMaxJointsPerLimb = 12;  // guards the 2^n corner enumeration
}

void LimbModel::validate() const {
  const int n = num_joints();
  if (jacobian.rows() != 3) {
    throw InputError("limb '" + id + "': jacobian must have 3 rows");
  }
  if (n < 1) {
    throw InputError("limb '" + id + "': jacobian must have at least one column");
  }
  if (n > kMaxJointsPerLimb) {
    throw InputError("limb '" + id + "': joint count " + std::to_string(n) +
                     " exceeds the enumeration cap of " +
                     std::to_string(kMaxJointsPerLimb));
  }
  if (tau_min.size() != n || tau_max.size() != n) {
    throw InputError("limb '" + id + "': torque bound length must match joint count");
  }
  for (int j = 0; j < n; ++j) {
    if (!(tau_min(j) < tau_max(j))) {
      throw InputError("limb '" + id + "': tau_min[" + std::to_string(j) +
                       "] must be strictly below tau_max[" + std::to_string(j) + "]");
    }
  }
  if (!jacobian.allFinite() || !tau_min.allFinite() || !tau_max.allFinite() ||
      !bias.allFinite() || !foot_position.allFinite()) {
    throw InputError("limb '" + id + "': non-finite value");
  }
}

void ContactSpec::validate() const {
  if (std::abs(normal.norm() - 1.0) > 1e-9) {
    throw InputError("contact: normal must be a unit vector");
  }
  if (!(mu > 0.0)) {
    throw InputError("contact: friction coefficient must be positive");
  }
  if (num_edges < 3) {
    throw InputError("contact: friction pyramid needs at least 3 edges");
  }
  if (!normal.allFinite() || !foot_position.allFinite() || !std::isfinite(mu)) {
    throw InputError("contact: non-finite value");
  }
}

Eigen::MatrixXd transpose_pseudoinverse(const Eigen::MatrixXd& jacobian,
                                        const Tolerance& tol,
                                        const std::string& context) {
  const int m = static_cast<int>(jacobian.rows());
  const int n = static_cast<int>(jacobian.cols());
  if (m < 1 || n < m) {
    throw InputError("transpose_pseudoinverse: need rows <= cols");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jacobian, 0);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv(m - 1) <= tol.eps_rank * std::max(1.0, sv(0))) {
    const std::string who = context.empty() ? "jacobian" : "limb '" + context + "'";
    throw SingularityError(who + ": jacobian is row-rank deficient (singular configuration)");
  }
  const Eigen::MatrixXd gram = jacobian * jacobian.transpose();
  return gram.ldlt().solve(jacobian);
}

VPolytope force_polytope(const LimbModel& limb, const Tolerance& tol) {
  limb.validate();
  const int n = limb.num_joints();
  const Eigen::MatrixXd jt_pinv = transpose_pseudoinverse(limb.jacobian, tol, limb.id);

  const int corners = 1 << n;
  Eigen::MatrixXd forces(corners, 3);
  Eigen::VectorXd tau(n);
  for (int mask = 0; mask < corners; ++mask) {
    for (int j = 0; j < n; ++j) {
      tau(j) = (mask >> j) & 1 ? limb.tau_max(j) : limb.tau_min(j);
    }
    forces.row(mask) = (jt_pinv * (limb.bias - tau)).transpose();
  }
  return convex_hull(forces, tol);
}

Eigen::MatrixXd friction_cone_rays(const ContactSpec& contact) {
  contact.validate();
  const Eigen::Vector3d n = contact.normal;
  const Eigen::Vector3d a = std::abs(n.z()) > 0.99 ? Eigen::Vector3d::UnitX()
                                                   : Eigen::Vector3d::UnitZ();
  const Eigen::Vector3d t1 = n.cross(a).normalized();
  const Eigen::Vector3d t2 = n.cross(t1);

  Eigen::MatrixXd rays(contact.num_edges, 3);
  for (int j = 0; j < contact.num_edges; ++j) {
    const double theta = 2.0 * M_PI * j / contact.num_edges;
    const Eigen::Vector3d edge =
        n + contact.mu * (std::cos(theta) * t1 + std::sin(theta) * t2);
    rays.row(j) = edge.normalized().transpose();
  }
  return rays;
}

HPolytope friction_cone_halfspaces(const ContactSpec& contact) {
  contact.validate();
  const Eigen::Vector3d n = contact.normal;
  const Eigen::Vector3d a = std::abs(n.z()) > 0.99 ? Eigen::Vector3d::UnitX()
                                                   : Eigen::Vector3d::UnitZ();
  const Eigen::Vector3d t1 = n.cross(a).normalized();
  const Eigen::Vector3d t2 = n.cross(t1);

  // Facet between adjacent edges j, j+1 in the local (t1, t2, n) frame:
  // normal (cos phi, sin phi, -mu cos(pi/k)) at the mid-angle phi.
  const int k = contact.num_edges;
  const double half = M_PI / k;
  Eigen::MatrixXd normals(k, 3);
  for (int j = 0; j < k; ++j) {
    const double phi = 2.0 * M_PI * j / k + half;
    Eigen::Vector3d local(std::cos(phi), std::sin(phi), -contact.mu * std::cos(half));
    const Eigen::Vector3d world = local.x() * t1 + local.y() * t2 + local.z() * n;
    normals.row(j) = world.normalized().transpose();
  }

  const Eigen::MatrixXd packed = canonical_rows(normals, Tolerance{}.eps_canon);
  HPolytope cone;
  cone.dim = 3;
  cone.normals = packed;
  cone.offsets = Eigen::VectorXd::Zero(packed.rows());
  return cone;
}

VPolytope friction_force_polytope(const LimbModel& limb, const ContactSpec& contact,
                                  const Tolerance& tol) {
  const VPolytope forces = force_polytope(limb, tol);
  const HPolytope clipped =
      intersect(v_to_h(forces, tol), friction_cone_halfspaces(contact), tol);
  if (clipped.is_marked_empty()) return VPolytope::empty_set(3);
  return h_to_v(clipped, tol);
}

}  // namespace wrenchpoly
