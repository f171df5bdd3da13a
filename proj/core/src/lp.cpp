#include "wrenchpoly/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace wrenchpoly::lp {

namespace {

// Revised simplex over the column set [M | I]; columns >= n are the
// artificials introduced for phase 1.
class Simplex {
 public:
  Simplex(const Eigen::MatrixXd& M, const Eigen::VectorXd& g, const Options& opt)
      : m_(M), g_(g), opt_(opt), r_(static_cast<int>(M.rows())),
        n_(static_cast<int>(M.cols())) {
    // Flip rows so the artificial basis starts feasible (g >= 0).
    row_sign_ = Eigen::VectorXd::Ones(r_);
    for (int i = 0; i < r_; ++i) {
      if (g_(i) < 0.0) {
        row_sign_(i) = -1.0;
        g_(i) = -g_(i);
        m_.row(i) = -m_.row(i);
      }
    }
    basis_.resize(r_);
    for (int i = 0; i < r_; ++i) basis_[i] = n_ + i;
  }

  Solution run(const Eigen::VectorXd& cost) {
    Solution sol;

    // Phase 1: minimize the sum of artificials.
    Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n_ + r_);
    phase1_cost.tail(r_).setOnes();
    const Status s1 = iterate(phase1_cost, /*allow_artificial_entering=*/false,
                              /*phase1=*/true);
    if (s1 == Status::kIterationLimit) {
      sol.status = Status::kIterationLimit;
      return sol;
    }
    refresh_basis_values();
    double residual = 0.0;
    for (int i = 0; i < r_; ++i) {
      if (basis_[i] >= n_) residual += std::max(0.0, yb_(i));
    }
    if (residual > opt_.eps_feasible) {
      sol.status = Status::kInfeasible;
      sol.infeasibility = residual;
      return sol;
    }
    drive_out_artificials();

    // Phase 2: minimize the caller's objective.
    Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n_ + r_);
    phase2_cost.head(n_) = cost;
    const Status s2 = iterate(phase2_cost, /*allow_artificial_entering=*/false,
                              /*phase1=*/false);
    if (s2 != Status::kOptimal) {
      sol.status = s2;
      return sol;
    }

    refresh_basis_values();
    sol.status = Status::kOptimal;
    sol.y = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < r_; ++i) {
      if (basis_[i] < n_) sol.y(basis_[i]) = yb_(i);
    }
    sol.objective = cost.dot(sol.y);
    // Row multipliers for the original (unflipped) system.
    Eigen::VectorXd cb(r_);
    for (int i = 0; i < r_; ++i) cb(i) = phase2_cost(basis_[i]);
    Eigen::VectorXd pi = blu_.transpose().solve(cb);
    sol.dual = pi.cwiseProduct(row_sign_);
    return sol;
  }

 private:
  Eigen::VectorXd column(int j) const {
    if (j < n_) return m_.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(r_);
    e(j - n_) = 1.0;
    return e;
  }

  void factorize() {
    Eigen::MatrixXd B(r_, r_);
    for (int i = 0; i < r_; ++i) B.col(i) = column(basis_[i]);
    blu_.compute(B);
  }

  void refresh_basis_values() {
    factorize();
    yb_ = blu_.solve(g_);
  }

  // One simplex loop over the given cost vector. Dantzig pricing with a
  // permanent switch to Bland's rule once the objective stalls.
  Status iterate(const Eigen::VectorXd& cost, bool allow_artificial_entering,
                 bool phase1) {
    bool bland = false;
    int stall = 0;
    double last_obj = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < opt_.max_iterations; ++iter) {
      refresh_basis_values();

      Eigen::VectorXd cb(r_);
      for (int i = 0; i < r_; ++i) cb(i) = cost(basis_[i]);
      const Eigen::VectorXd pi = blu_.transpose().solve(cb);

      const double obj = cb.dot(yb_);
      if (obj < last_obj - 1e-13 * (1.0 + std::abs(last_obj))) {
        last_obj = obj;
        stall = 0;
      } else if (++stall > 40) {
        bland = true;
      }

      // Pricing.
      const int limit = allow_artificial_entering ? n_ + r_ : n_;
      int enter = -1;
      double best = -opt_.eps_pivot;
      std::vector<bool> in_basis(n_ + r_, false);
      for (int i = 0; i < r_; ++i) in_basis[basis_[i]] = true;
      for (int j = 0; j < limit; ++j) {
        if (in_basis[j]) continue;
        const double rc = cost(j) - (j < n_ ? m_.col(j).dot(pi) : pi(j - n_));
        if (rc < best) {
          if (bland) {
            enter = j;
            break;
          }
          best = rc;
          enter = j;
        }
      }
      if (enter < 0) return Status::kOptimal;

      // Ratio test.
      const Eigen::VectorXd dir = blu_.solve(column(enter));
      int leave = -1;
      double theta = std::numeric_limits<double>::infinity();
      for (int i = 0; i < r_; ++i) {
        if (dir(i) > opt_.eps_zero) {
          const double t = std::max(0.0, yb_(i)) / dir(i);
          if (t < theta - opt_.eps_zero ||
              (t < theta + opt_.eps_zero &&
               (leave < 0 ||
                (bland ? basis_[i] < basis_[leave]
                       : std::abs(dir(i)) > std::abs(dir(leave)))))) {
            theta = t;
            leave = i;
          }
        }
      }
      if (leave < 0) {
        // No blocking basic variable: the objective is unbounded below.
        // Phase 1 is bounded below by zero, so this cannot happen there.
        return phase1 ? Status::kIterationLimit : Status::kUnbounded;
      }
      basis_[leave] = enter;
    }
    return Status::kIterationLimit;
  }

  // Pivot artificials that finished phase 1 at level zero out of the basis
  // wherever a structural column can replace them. Rows where none can are
  // degenerate; their artificial stays basic at zero and never re-enters.
  void drive_out_artificials() {
    refresh_basis_values();
    for (int i = 0; i < r_; ++i) {
      if (basis_[i] < n_) continue;
      std::vector<bool> in_basis(n_ + r_, false);
      for (int k = 0; k < r_; ++k) in_basis[basis_[k]] = true;
      for (int j = 0; j < n_; ++j) {
        if (in_basis[j]) continue;
        const Eigen::VectorXd dir = blu_.solve(m_.col(j));
        if (std::abs(dir(i)) > 1e-9) {
          basis_[i] = j;
          refresh_basis_values();
          break;
        }
      }
    }
  }

  Eigen::MatrixXd m_;
  Eigen::VectorXd g_;
  Options opt_;
  int r_;
  int n_;
  Eigen::VectorXd row_sign_;
  std::vector<int> basis_;
  Eigen::PartialPivLU<Eigen::MatrixXd> blu_;
  Eigen::VectorXd yb_;
};

}  // namespace

Solution solve_equality_form(const Eigen::MatrixXd& M, const Eigen::VectorXd& g,
                             const Eigen::VectorXd& c, const Options& opt) {
  const int r = static_cast<int>(M.rows());
  const int n = static_cast<int>(M.cols());
  if (g.size() != r || c.size() != n) {
    throw std::invalid_argument("solve_equality_form: inconsistent sizes");
  }
  if (r == 0) {
    Solution sol;
    sol.status = Status::kOptimal;
    sol.y = Eigen::VectorXd::Zero(n);
    // min c.y over y >= 0 with no equality rows: unbounded iff some c_j < 0.
    for (int j = 0; j < n; ++j) {
      if (c(j) < -opt.eps_pivot) {
        sol.status = Status::kUnbounded;
        return sol;
      }
    }
    sol.dual = Eigen::VectorXd::Zero(0);
    return sol;
  }
  Simplex s(M, g, opt);
  return s.run(c);
}

MaxResult maximize_over_halfspaces(const Eigen::MatrixXd& normals,
                                   const Eigen::VectorXd& offsets,
                                   const Eigen::VectorXd& objective,
                                   bool known_feasible,
                                   const Options& opt) {
  MaxResult res;
  const int m = static_cast<int>(normals.rows());
  const int d = static_cast<int>(normals.cols());
  if (offsets.size() != m || objective.size() != d) {
    throw std::invalid_argument("maximize_over_halfspaces: inconsistent sizes");
  }
  if (m == 0) {
    // No constraints at all: unbounded unless the objective is zero.
    res.status = objective.isZero(0.0) ? Status::kOptimal : Status::kUnbounded;
    res.x = Eigen::VectorXd::Zero(d);
    return res;
  }
  // Dual:  min offsets.y  s.t.  normals^T y = objective,  y >= 0.
  const Solution dual = solve_equality_form(normals.transpose(), objective,
                                            offsets, opt);
  switch (dual.status) {
    case Status::kOptimal:
      res.status = Status::kOptimal;
      res.value = dual.objective;
      res.x = dual.dual;  // primal point via strong duality
      break;
    case Status::kInfeasible:
      // No dual certificate bounding the objective.
      res.status = known_feasible ? Status::kUnbounded : Status::kInfeasible;
      break;
    case Status::kUnbounded:
      // Farkas certificate: the primal halfspace system is empty.
      res.status = Status::kInfeasible;
      break;
    default:
      res.status = dual.status;
  }
  return res;
}

bool halfspaces_feasible(const Eigen::MatrixXd& normals,
                         const Eigen::VectorXd& offsets,
                         const Options& opt) {
  const int m = static_cast<int>(normals.rows());
  if (m == 0) return true;
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(normals.cols());
  const Solution sol = solve_equality_form(normals.transpose(), zero, offsets, opt);
  return sol.status == Status::kOptimal;
}

double separation_margin(const Eigen::MatrixXd& vertices,
                         const Eigen::MatrixXd& rays,
                         const Eigen::VectorXd& x,
                         const Options& opt) {
  const int n = static_cast<int>(vertices.rows());
  const int q = static_cast<int>(rays.rows());
  const int d = static_cast<int>(vertices.cols());
  if (n == 0) throw std::invalid_argument("separation_margin: no vertices");
  if (x.size() != d) {
    throw std::invalid_argument("separation_margin: dimension mismatch");
  }

  // Variables pi = (w, c). Columns of M are the constraint normals of
  //   w.v_i - c <= 0,  w.r_j <= 0,  +-w_k <= 1.
  const int cols = n + q + 2 * d;
  Eigen::MatrixXd M(d + 1, cols);
  Eigen::VectorXd cost(cols);
  for (int i = 0; i < n; ++i) {
    M.col(i).head(d) = vertices.row(i).transpose();
    M(d, i) = -1.0;
    cost(i) = 0.0;
  }
  for (int j = 0; j < q; ++j) {
    M.col(n + j).head(d) = rays.row(j).transpose();
    M(d, n + j) = 0.0;
    cost(n + j) = 0.0;
  }
  for (int k = 0; k < d; ++k) {
    M.col(n + q + 2 * k).setZero();
    M(k, n + q + 2 * k) = 1.0;
    cost(n + q + 2 * k) = 1.0;
    M.col(n + q + 2 * k + 1).setZero();
    M(k, n + q + 2 * k + 1) = -1.0;
    cost(n + q + 2 * k + 1) = 1.0;
  }
  Eigen::VectorXd g(d + 1);
  g.head(d) = x;
  g(d) = -1.0;

  const Solution sol = solve_equality_form(M, g, cost, opt);
  if (sol.status != Status::kOptimal) {
    // The separation program is always feasible and bounded; anything else
    // is a numerical breakdown worth surfacing loudly.
    throw std::runtime_error("separation_margin: LP did not converge");
  }
  return sol.objective;
}

}  // namespace wrenchpoly::lp
