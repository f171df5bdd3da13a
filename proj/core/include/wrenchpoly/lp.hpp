#pragma once

#include <Eigen/Dense>

namespace wrenchpoly::lp {

enum class Status {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
};

struct Options {
  double eps_pivot = 1e-11;      ///< reduced-cost entering threshold
  double eps_zero = 1e-12;       ///< pivot-magnitude / ratio-test floor
  double eps_feasible = 1e-9;    ///< phase-1 residual accepted as feasible
  int max_iterations = 50000;
};

struct Solution {
  Status status = Status::kIterationLimit;
  double objective = 0.0;       ///< c.y at the returned point
  double infeasibility = 0.0;   ///< phase-1 residual (only meaningful when infeasible)
  Eigen::VectorXd y;            ///< column values, size n
  Eigen::VectorXd dual;         ///< row multipliers, size r
};

/// Solves  min c.y  subject to  M y = g,  y >= 0   (M is r x n).
///
/// Two-phase revised simplex with Bland fallback; the basis is refactorized
/// every iteration, which is cheap for the small row counts (r <= ~64) this
/// kernel produces. The dual vector solves  max g.pi  s.t.  M^T pi <= c,
/// so callers can pose inequality-form problems through their dual.
Solution solve_equality_form(const Eigen::MatrixXd& M, const Eigen::VectorXd& g,
                             const Eigen::VectorXd& c, const Options& opt = {});

/// max objective.x  subject to  normals x <= offsets  (normals is m x d).
/// Solved through the equality-form dual. `known_feasible` disambiguates the
/// dual-infeasible outcome (primal unbounded vs primal empty).
struct MaxResult {
  Status status = Status::kIterationLimit;
  double value = 0.0;
  Eigen::VectorXd x;
};
MaxResult maximize_over_halfspaces(const Eigen::MatrixXd& normals,
                                   const Eigen::VectorXd& offsets,
                                   const Eigen::VectorXd& objective,
                                   bool known_feasible,
                                   const Options& opt = {});

/// Farkas feasibility test for {x : normals x <= offsets}.
bool halfspaces_feasible(const Eigen::MatrixXd& normals,
                         const Eigen::VectorXd& offsets,
                         const Options& opt = {});

/// Separation margin of point x against conv(vertices) + cone(rays):
///
///   sigma = max { w.x - c :  w.v_i <= c,  w.r_j <= 0,  |w|_inf <= 1 }
///
/// sigma is 0 when x is inside and positive when a hyperplane separates x
/// from the set. vertices is n x d (n >= 1), rays is q x d (may be empty).
double separation_margin(const Eigen::MatrixXd& vertices,
                         const Eigen::MatrixXd& rays,
                         const Eigen::VectorXd& x,
                         const Options& opt = {});

}  // namespace wrenchpoly::lp
