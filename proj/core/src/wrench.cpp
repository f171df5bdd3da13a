#include "wrenchpoly/wrench.hpp"

#include "wrenchpoly/errors.hpp"

namespace wrenchpoly {

namespace {

// Lift a set of 3D force points at lever arm p into wrench space. The map
// f -> (f, p x f) is linear and injective, so extreme points map to extreme
// points and only the canonical order needs refreshing.
VPolytope lift_polytope(const VPolytope& forces, const Eigen::Vector3d& p,
                        const Tolerance& tol) {
  if (forces.is_empty()) return VPolytope::empty_set(6);
  Eigen::MatrixXd lifted(forces.vertices.rows(), 6);
  for (int i = 0; i < forces.vertices.rows(); ++i) {
    const Eigen::Vector3d f = forces.vertices.row(i).transpose();
    lifted.row(i).head<3>() = f.transpose();
    lifted.row(i).tail<3>() = p.cross(f).transpose();
  }
  VPolytope out;
  out.dim = 6;
  out.vertices = canonical_rows(lifted, tol.eps_canon);
  out.rays = Eigen::MatrixXd(0, 6);
  out.affine_dim = forces.affine_dim;
  return out;
}

LimbModel com_relative(const LimbModel& limb, const Eigen::Vector3d& com) {
  LimbModel shifted = limb;
  shifted.foot_position -= com;
  return shifted;
}

}  // namespace

void RobotSnapshot::validate() const {
  if (limbs.empty()) {
    throw InputError("snapshot '" + name + "': at least one limb required");
  }
  if (limbs.size() != contacts.size()) {
    throw InputError("snapshot '" + name + "': limbs and contacts must be index-aligned");
  }
  for (const LimbModel& limb : limbs) limb.validate();
  for (size_t i = 0; i < contacts.size(); ++i) {
    contacts[i].validate();
    if ((contacts[i].foot_position - limbs[i].foot_position).norm() > 1e-9) {
      throw InputError("snapshot '" + name + "': contact " + std::to_string(i) +
                       " foot position disagrees with its limb");
    }
  }
  if (!com_position.allFinite()) {
    throw InputError("snapshot '" + name + "': non-finite CoM");
  }
}

Wrench lift_force_to_wrench(const Eigen::Vector3d& f, const Eigen::Vector3d& p) {
  return Wrench{f, p.cross(f)};
}

VPolytope limb_wrench_polytope(const LimbModel& limb, const Tolerance& tol) {
  return lift_polytope(force_polytope(limb, tol), limb.foot_position, tol);
}

VPolytope awp(const RobotSnapshot& robot, const Tolerance& tol) {
  robot.validate();
  VPolytope acc;
  bool first = true;
  for (const LimbModel& limb : robot.limbs) {
    const VPolytope w = limb_wrench_polytope(com_relative(limb, robot.com_position), tol);
    acc = first ? w : minkowski_sum(acc, w, tol);
    first = false;
  }
  return acc;
}

ContactWrenchCone cwc(const RobotSnapshot& robot, const Tolerance& tol) {
  robot.validate();
  std::vector<Eigen::Matrix<double, 6, 1>> lifted;
  for (size_t i = 0; i < robot.contacts.size(); ++i) {
    const Eigen::Vector3d p = robot.contacts[i].foot_position - robot.com_position;
    const Eigen::MatrixXd edges = friction_cone_rays(robot.contacts[i]);
    for (int j = 0; j < edges.rows(); ++j) {
      const Wrench w = lift_force_to_wrench(edges.row(j).transpose(), p);
      Eigen::Matrix<double, 6, 1> v = w.to_vector();
      lifted.push_back(v / v.norm());
    }
  }
  Eigen::MatrixXd rays(static_cast<int>(lifted.size()), 6);
  for (size_t i = 0; i < lifted.size(); ++i) rays.row(static_cast<int>(i)) = lifted[i].transpose();

  ContactWrenchCone cone;
  cone.v_form.dim = 6;
  cone.v_form.vertices = Eigen::MatrixXd::Zero(1, 6);
  cone.v_form.rays = canonical_rows(rays, tol.eps_canon);
  cone.v_form.affine_dim = affine_dimension(cone.v_form.vertices, cone.v_form.rays, tol.eps_rank);
  cone.h_form = v_to_h(cone.v_form, tol);
  return cone;
}

FwpResult fwp_intersection(const RobotSnapshot& robot, const Tolerance& tol) {
  const VPolytope actuation = awp(robot, tol);
  const ContactWrenchCone cone = cwc(robot, tol);
  FwpResult fwp;
  fwp.h_form = intersect(v_to_h(actuation, tol), cone.h_form, tol);
  if (fwp.h_form.is_marked_empty()) {
    fwp.v_form = VPolytope::empty_set(6);
    fwp.empty = true;
    return fwp;
  }
  fwp.v_form = h_to_v(fwp.h_form, tol);
  fwp.empty = fwp.v_form.is_empty();
  return fwp;
}

VPolytope fwp_per_foot(const RobotSnapshot& robot, const Tolerance& tol) {
  robot.validate();
  VPolytope acc;
  bool first = true;
  for (size_t i = 0; i < robot.limbs.size(); ++i) {
    const VPolytope friction =
        friction_force_polytope(robot.limbs[i], robot.contacts[i], tol);
    if (friction.is_empty()) {
      // One foot admits no force at all, so no stance-wide assignment exists.
      return VPolytope::empty_set(6);
    }
    const Eigen::Vector3d p = robot.limbs[i].foot_position - robot.com_position;
    const VPolytope lifted = lift_polytope(friction, p, tol);
    acc = first ? lifted : minkowski_sum(acc, lifted, tol);
    first = false;
  }
  return acc;
}

}  // namespace wrenchpoly
