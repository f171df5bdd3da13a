#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wrenchpoly/errors.hpp"
#include "wrenchpoly/tolerance.hpp"

namespace wrenchpoly {

/// Convex polytope in vertex description. Rows of `vertices` are extreme
/// points, rows of `rays` are unit recession directions (empty iff bounded).
/// Operations in this kernel return canonical values: extreme points only,
/// sorted lexicographically by coordinates rounded to eps_canon, so equal
/// sets compare equal. A cone is stored as the single vertex 0 plus rays.
struct VPolytope {
  int dim = 0;
  Eigen::MatrixXd vertices;  // n x dim
  Eigen::MatrixXd rays;      // q x dim
  int affine_dim = -1;       // -1 marks the empty set

  bool is_empty() const { return vertices.rows() == 0 && rays.rows() == 0; }
  bool is_bounded() const { return rays.rows() == 0; }
  bool is_cone() const {
    return rays.rows() > 0 && vertices.rows() == 1 &&
           vertices.row(0).norm() == 0.0;
  }
  int num_vertices() const { return static_cast<int>(vertices.rows()); }

  static VPolytope empty_set(int dim) {
    VPolytope p;
    p.dim = dim;
    p.vertices.resize(0, dim);
    p.rays.resize(0, dim);
    p.affine_dim = -1;
    return p;
  }
};

/// Convex polyhedron in halfspace description: {x : normals x <= offsets}.
/// Normals are unit rows, sorted canonically; a cone has all offsets zero.
/// The empty set is carried as the canonical infeasible row 0.x <= -1.
struct HPolytope {
  int dim = 0;
  Eigen::MatrixXd normals;   // m x dim
  Eigen::VectorXd offsets;   // m

  int num_facets() const { return static_cast<int>(normals.rows()); }
  bool is_cone(double eps = 1e-12) const {
    return offsets.size() > 0 && offsets.cwiseAbs().maxCoeff() <= eps;
  }
  bool is_marked_empty() const {
    return normals.rows() == 1 && normals.row(0).norm() == 0.0 &&
           offsets(0) < 0.0;
  }

  static HPolytope empty_set(int dim) {
    HPolytope p;
    p.dim = dim;
    p.normals = Eigen::MatrixXd::Zero(1, dim);
    p.offsets = Eigen::VectorXd::Constant(1, -1.0);
    return p;
  }
};

/// Chebyshev-center query outcome.
struct ChebyshevResult {
  enum class Status { kOk, kEmpty, kUnbounded };
  Status status = Status::kEmpty;
  Eigen::VectorXd center;
  double radius = 0.0;
};

/// Rank of the affine hull of the given points (plus span of rays).
int affine_dimension(const Eigen::MatrixXd& points, const Eigen::MatrixXd& rays,
                     double eps_rank);

/// Lexicographic canonical sort (by coordinates rounded to quantum), with
/// exact-duplicate rows merged. Returns the row order applied.
Eigen::MatrixXd canonical_rows(const Eigen::MatrixXd& rows, double quantum);

/// Extreme points of conv(points), canonically ordered, with the affine
/// hull detected so flat inputs embedded in higher dimension work.
VPolytope convex_hull(const Eigen::MatrixXd& points, const Tolerance& tol = {});

/// Irredundant halfspace description of a bounded polytope or a cone.
/// Flat inputs produce paired halfspaces (a.x <= b and -a.x <= -b) encoding
/// the affine-hull equalities.
HPolytope v_to_h(const VPolytope& p, const Tolerance& tol = {});

/// Vertex (and extreme-ray) description of {x : normals x <= offsets}.
/// Infeasible input yields the distinguished empty VPolytope. Polyhedra
/// containing a full line raise DegenerateGeometryError.
VPolytope h_to_v(const HPolytope& p, const Tolerance& tol = {});

/// conv{a + b : a in A, b in B}, canonical.
VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b,
                        const Tolerance& tol = {});

/// Concatenated halfspaces with LP redundancy removal; empty intersections
/// come back as the marked-empty HPolytope.
HPolytope intersect(const HPolytope& a, const HPolytope& b,
                    const Tolerance& tol = {});

/// Membership within tol.eps_contain slack.
bool contains(const HPolytope& p, const Eigen::VectorXd& x,
              const Tolerance& tol = {});
bool contains(const VPolytope& p, const Eigen::VectorXd& x,
              const Tolerance& tol = {});

/// Support function max_{v in P} d.v (bounded polytopes only).
double support(const VPolytope& p, const Eigen::VectorXd& direction);

/// Center and radius of the largest inscribed ball. Equality pairs are held
/// as equalities and excluded from the ball constraint, so flat polytopes
/// get the largest ball within their affine hull.
ChebyshevResult chebyshev_center(const HPolytope& p, const Tolerance& tol = {});

/// Orthogonal projection of the V-form onto the selected coordinates,
/// re-hulled canonically.
VPolytope project(const VPolytope& p, const std::vector<int>& dims,
                  const Tolerance& tol = {});

/// Rows of `p` that participate in an equality pair (a.x <= b, -a.x <= -b).
std::vector<bool> equality_pair_rows(const HPolytope& p, const Tolerance& tol = {});

}  // namespace wrenchpoly
