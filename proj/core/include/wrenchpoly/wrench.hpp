#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "wrenchpoly/limb.hpp"
#include "wrenchpoly/polytope.hpp"

namespace wrenchpoly {

/// 6D force/torque pair expressed at the CoM frame.
struct Wrench {
  Eigen::Vector3d force = Eigen::Vector3d::Zero();
  Eigen::Vector3d torque = Eigen::Vector3d::Zero();

  Eigen::Matrix<double, 6, 1> to_vector() const {
    Eigen::Matrix<double, 6, 1> w;
    w << force, torque;
    return w;
  }
  static Wrench from_vector(const Eigen::Matrix<double, 6, 1>& w) {
    return Wrench{w.head<3>(), w.tail<3>()};
  }
};

/// A stance snapshot: limbs with their contacts (index-aligned), and the
/// CoM position the wrench frame is anchored to. Foot positions are stored
/// in the same frame as the CoM and made CoM-relative inside the pipeline.
struct RobotSnapshot {
  std::string name;
  Eigen::Vector3d com_position = Eigen::Vector3d::Zero();
  std::vector<LimbModel> limbs;
  std::vector<ContactSpec> contacts;

  void validate() const;
};

/// Lifts a contact force at CoM-relative position p to a 6D wrench:
/// w = (f, p x f).
Wrench lift_force_to_wrench(const Eigen::Vector3d& f, const Eigen::Vector3d& p);

/// 6D wrench polytope of one limb: the force polytope lifted through
/// w = (f, p x f) with p = limb.foot_position (CoM-relative). The result is
/// flat (affine dimension <= 3), which the kernel tracks rather than
/// rejecting.
VPolytope limb_wrench_polytope(const LimbModel& limb, const Tolerance& tol = {});

/// Actuation-consistent wrench polytope: Minkowski sum of the per-limb 6D
/// wrench polytopes, canonical and bounded.
VPolytope awp(const RobotSnapshot& robot, const Tolerance& tol = {});

/// Contact wrench cone in both descriptions. The V-form keeps one lifted
/// (normalized) ray per pyramid edge per contact; the H-form is its
/// conversion, a cone with all offsets zero.
struct ContactWrenchCone {
  VPolytope v_form;
  HPolytope h_form;
};
ContactWrenchCone cwc(const RobotSnapshot& robot, const Tolerance& tol = {});

/// Feasible wrench polytope as the AWP/CWC intersection, in both
/// descriptions. `empty` flags an infeasible stance (a valid outcome).
struct FwpResult {
  HPolytope h_form;
  VPolytope v_form;
  bool empty = false;
};
FwpResult fwp_intersection(const RobotSnapshot& robot, const Tolerance& tol = {});

/// Per-foot-coupled feasible polytope: Minkowski sum of each limb's lifted
/// bounded friction polytope. Always a subset of fwp_intersection; empty as
/// soon as any limb's friction polytope is empty.
VPolytope fwp_per_foot(const RobotSnapshot& robot, const Tolerance& tol = {});

}  // namespace wrenchpoly
