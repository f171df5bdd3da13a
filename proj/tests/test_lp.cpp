#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "wrenchpoly/lp.hpp"

using namespace wrenchpoly;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("equality-form simplex solves a textbook LP") {
  // min -x1 - 2 x2  s.t.  x1 + x2 + s1 = 4,  x1 + 3 x2 + s2 = 6,  all >= 0.
  MatrixXd M(2, 4);
  M << 1, 1, 1, 0,
       1, 3, 0, 1;
  VectorXd g(2);
  g << 4, 6;
  VectorXd c(4);
  c << -1, -2, 0, 0;
  const auto sol = lp::solve_equality_form(M, g, c);
  REQUIRE(sol.status == lp::Status::kOptimal);
  CHECK(sol.objective == doctest::Approx(-5.0).epsilon(1e-9));  // y = (3, 1)
  CHECK(sol.y(0) == doctest::Approx(3.0));
  CHECK(sol.y(1) == doctest::Approx(1.0));
}

TEST_CASE("infeasible and unbounded cases are classified") {
  MatrixXd M(1, 1);
  M << 1;
  VectorXd g(1);
  g << -1;  // y >= 0 with y = -1: infeasible
  VectorXd c(1);
  c << 1;
  CHECK(lp::solve_equality_form(M, g, c).status == lp::Status::kInfeasible);

  // min -y2 s.t. y1 - y2 = 0: y1 = y2 -> objective unbounded below.
  MatrixXd M2(1, 2);
  M2 << 1, -1;
  VectorXd g2(1);
  g2 << 0;
  VectorXd c2(2);
  c2 << 0, -1;
  CHECK(lp::solve_equality_form(M2, g2, c2).status == lp::Status::kUnbounded);
}

TEST_CASE("maximize over a box") {
  MatrixXd N(6, 3);
  N << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
  VectorXd b = VectorXd::Ones(6);
  VectorXd obj(3);
  obj << 1, 1, 1;
  const auto res = lp::maximize_over_halfspaces(N, b, obj, true);
  REQUIRE(res.status == lp::Status::kOptimal);
  CHECK(res.value == doctest::Approx(3.0));
  CHECK(res.x.isApprox(Eigen::Vector3d(1, 1, 1), 1e-9));
}

TEST_CASE("maximize detects unbounded and empty systems") {
  MatrixXd N(1, 2);
  N << 1, 0;  // x <= 1, y free
  VectorXd b(1);
  b << 1;
  VectorXd obj(2);
  obj << 0, 1;
  CHECK(lp::maximize_over_halfspaces(N, b, obj, true).status == lp::Status::kUnbounded);

  MatrixXd N2(2, 1);
  N2 << 1, -1;  // x <= -2 and -x <= 0: empty
  VectorXd b2(2);
  b2 << -2, 0;
  VectorXd obj2(1);
  obj2 << 1;
  CHECK(lp::maximize_over_halfspaces(N2, b2, obj2, false).status ==
        lp::Status::kInfeasible);
  CHECK_FALSE(lp::halfspaces_feasible(N2, b2));
  CHECK(lp::halfspaces_feasible(N, b));
}

TEST_CASE("separation margin: inside, boundary, outside") {
  MatrixXd square(4, 2);
  square << 0, 0, 1, 0, 0, 1, 1, 1;
  MatrixXd no_rays(0, 2);
  CHECK(lp::separation_margin(square, no_rays, Eigen::Vector2d(0.5, 0.5)) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(lp::separation_margin(square, no_rays, Eigen::Vector2d(1.0, 1.0)) ==
        doctest::Approx(0.0).epsilon(1e-9));
  // (2, 0.5) sits 1.0 beyond the x <= 1 face; the box |w|_inf <= 1 admits
  // exactly that separation.
  CHECK(lp::separation_margin(square, no_rays, Eigen::Vector2d(2.0, 0.5)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("separation margin respects rays") {
  MatrixXd apex(1, 2);
  apex << 0, 0;
  MatrixXd rays(2, 2);
  rays << 1, 0, 0, 1;  // first quadrant
  CHECK(lp::separation_margin(apex, rays, Eigen::Vector2d(5.0, 7.0)) ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(lp::separation_margin(apex, rays, Eigen::Vector2d(-1.0, 0.0)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("random LPs satisfy strong duality") {
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.1, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + trial % 6;
    const int n = r + 1 + trial % 9;
    MatrixXd M(r, n);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < n; ++j) M(i, j) = gauss(rng);
    }
    // Feasible by construction: g = M y0 with y0 >= 0.
    VectorXd y0(n);
    for (int j = 0; j < n; ++j) y0(j) = unif(rng);
    const VectorXd g = M * y0;
    VectorXd c(n);
    for (int j = 0; j < n; ++j) c(j) = gauss(rng);

    const auto sol = lp::solve_equality_form(M, g, c);
    REQUIRE(sol.status != lp::Status::kInfeasible);
    if (sol.status != lp::Status::kOptimal) continue;  // unbounded is fine
    // Primal feasibility.
    CHECK((M * sol.y - g).cwiseAbs().maxCoeff() <= 1e-7);
    CHECK(sol.y.minCoeff() >= -1e-9);
    // Optimality no worse than the known feasible point, and strong duality.
    CHECK(sol.objective <= c.dot(y0) + 1e-7);
    CHECK(std::abs(sol.objective - g.dot(sol.dual)) <= 1e-6 * (1.0 + std::abs(sol.objective)));
    // Dual feasibility M^T pi <= c.
    CHECK(((M.transpose() * sol.dual) - c).maxCoeff() <= 1e-7);
  }
}
