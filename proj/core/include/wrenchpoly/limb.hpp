#pragma once

#include <Eigen/Dense>
#include <string>

#include "wrenchpoly/polytope.hpp"
#include "wrenchpoly/tolerance.hpp"

namespace wrenchpoly {

/// One kinematic branch: the contact-point Jacobian, joint torque bounds,
/// the aggregate dynamic bias (gravity, Coriolis and acceleration terms
/// folded into a single 3-vector, zero in the quasi-static case), and the
/// foot position in the CoM frame.
struct LimbModel {
  std::string id;
  Eigen::MatrixXd jacobian;     // 3 x n
  Eigen::VectorXd tau_min;      // n
  Eigen::VectorXd tau_max;      // n
  Eigen::Vector3d bias = Eigen::Vector3d::Zero();
  Eigen::Vector3d foot_position = Eigen::Vector3d::Zero();

  int num_joints() const { return static_cast<int>(jacobian.cols()); }
  void validate() const;
};

/// Contact surface description: unit normal, friction coefficient, and the
/// edge count of the linearized cone.
struct ContactSpec {
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
  double mu = 0.5;
  int num_edges = 4;
  Eigen::Vector3d foot_position = Eigen::Vector3d::Zero();

  void validate() const;
};

/// (J J^T)^{-1} J, the Moore-Penrose pseudoinverse of J^T for a full
/// row-rank J (rows m <= cols n). Throws SingularityError when J loses row
/// rank within tol.eps_rank; `context` names the limb in that message.
Eigen::MatrixXd transpose_pseudoinverse(const Eigen::MatrixXd& jacobian,
                                        const Tolerance& tol = {},
                                        const std::string& context = {});

/// Achievable quasi-static contact forces: the convex hull of
/// f = J^{T#} (bias - tau) over all 2^n torque-box corners.
VPolytope force_polytope(const LimbModel& limb, const Tolerance& tol = {});

/// k unit edge rays of the inscribed friction pyramid, evenly spaced around
/// the contact normal. The tangent frame is fixed deterministically from the
/// normal, with the first edge aligned to t1.
Eigen::MatrixXd friction_cone_rays(const ContactSpec& contact);

/// Halfspace form (homogeneous, offsets zero) of the same pyramid. The
/// unilateral constraint f.n >= 0 is implied by the facets and is not
/// emitted as an extra row.
HPolytope friction_cone_halfspaces(const ContactSpec& contact);

/// Per-foot bounded friction polytope: force_polytope(limb) clipped by the
/// friction pyramid. May be empty (the limb cannot press within friction)
/// or lower-dimensional.
VPolytope friction_force_polytope(const LimbModel& limb, const ContactSpec& contact,
                                  const Tolerance& tol = {});

}  // namespace wrenchpoly
