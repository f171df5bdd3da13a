#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "support/generators.hpp"
#include "wrenchpoly/polytope.hpp"

using namespace wrenchpoly;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd cube_vertices(int d, double half = 1.0) {
  const int n = 1 << d;
  MatrixXd v(n, d);
  for (int mask = 0; mask < n; ++mask) {
    for (int j = 0; j < d; ++j) v(mask, j) = (mask >> j) & 1 ? half : -half;
  }
  return v;
}

bool same_vertex_set(const MatrixXd& a, const MatrixXd& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const MatrixXd ca = canonical_rows(a, 1e-8);
  const MatrixXd cb = canonical_rows(b, 1e-8);
  if (ca.rows() != cb.rows()) return false;
  return (ca - cb).cwiseAbs().maxCoeff() <= eps;
}

}  // namespace

TEST_CASE("convex_hull removes the interior point of the unit square") {
  MatrixXd pts(5, 2);
  pts << 0, 0, 1, 0, 0, 1, 1, 1, 0.5, 0.5;
  const VPolytope hull = convex_hull(pts);
  CHECK(hull.num_vertices() == 4);
  CHECK(hull.affine_dim == 2);
  MatrixXd expect(4, 2);
  expect << 0, 0, 1, 0, 0, 1, 1, 1;
  CHECK(same_vertex_set(hull.vertices, expect, 1e-12));
}

TEST_CASE("convex_hull keeps the 6D cross-polytope and drops the origin") {
  MatrixXd pts(13, 6);
  pts.setZero();
  for (int i = 0; i < 6; ++i) {
    pts(2 * i, i) = 1.0;
    pts(2 * i + 1, i) = -1.0;
  }
  const VPolytope hull = convex_hull(pts);
  CHECK(hull.num_vertices() == 12);
  CHECK(hull.affine_dim == 6);
}

TEST_CASE("convex_hull detects a planar square embedded in 3D") {
  MatrixXd pts(8, 3);
  int k = 0;
  for (double x : {-1.0, 1.0}) {
    for (double y : {-1.0, 1.0}) {
      pts.row(k++) << x, y, 0.5;
      pts.row(k++) << 0.5 * x, 0.5 * y, 0.5;
    }
  }
  const VPolytope hull = convex_hull(pts);
  CHECK(hull.num_vertices() == 4);
  CHECK(hull.affine_dim == 2);
}

TEST_CASE("convex_hull rejects empty input") {
  CHECK_THROWS_AS(convex_hull(MatrixXd(0, 3)), InputError);
}

TEST_CASE("hull is idempotent and canonical order ignores input order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 2 + trial % 3;
    const MatrixXd pts = testgen::random_points(rng, 12 + trial, d);
    const VPolytope h1 = convex_hull(pts);
    const VPolytope h2 = convex_hull(h1.vertices);
    REQUIRE(h1.num_vertices() == h2.num_vertices());
    CHECK((h1.vertices - h2.vertices).cwiseAbs().maxCoeff() == 0.0);

    // Permuted input gives bit-identical canonical output.
    std::vector<int> perm(pts.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MatrixXd shuffled(pts.rows(), d);
    for (size_t i = 0; i < perm.size(); ++i) shuffled.row(static_cast<int>(i)) = pts.row(perm[i]);
    const VPolytope h3 = convex_hull(shuffled);
    REQUIRE(h3.num_vertices() == h1.num_vertices());
    CHECK((h3.vertices - h1.vertices).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("v_to_h of the cube gives the six axis facets") {
  const VPolytope cube = convex_hull(cube_vertices(3));
  const HPolytope h = v_to_h(cube);
  REQUIRE(h.num_facets() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(h.offsets(i) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(h.normals.row(i).cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("v_to_h of a segment emits one slab and one equality pair") {
  MatrixXd pts(2, 2);
  pts << 0, 0, 1, 0;
  const HPolytope h = v_to_h(convex_hull(pts));
  REQUIRE(h.num_facets() == 4);
  const std::vector<bool> eq = equality_pair_rows(h);
  int n_eq = 0;
  for (bool b : eq) n_eq += b ? 1 : 0;
  CHECK(n_eq == 2);  // y = 0 as a pair
  // Inequality rows describe 0 <= x <= 1.
  for (int i = 0; i < 4; ++i) {
    if (eq[i]) continue;
    CHECK(std::abs(h.normals(i, 0)) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("v_to_h validated by mutual containment on random 3D hulls") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixXd pts = testgen::random_points(rng, 20, 3);
    const VPolytope hull = convex_hull(pts);
    const HPolytope h = v_to_h(hull);
    // Every input point inside the H-form.
    for (int i = 0; i < pts.rows(); ++i) {
      CHECK(contains(h, pts.row(i).transpose()));
    }
    // Every facet supported by at least 3 affinely independent vertices.
    for (int f = 0; f < h.num_facets(); ++f) {
      std::vector<int> tight;
      for (int i = 0; i < hull.num_vertices(); ++i) {
        const double g = h.normals.row(f).dot(hull.vertices.row(i)) - h.offsets(f);
        if (std::abs(g) <= 1e-7) tight.push_back(i);
      }
      CHECK(tight.size() >= 3);
    }
  }
}

TEST_CASE("h_to_v recovers the cube from its facets") {
  HPolytope h;
  h.dim = 3;
  h.normals.resize(6, 3);
  h.offsets.resize(6);
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    for (double s : {1.0, -1.0}) {
      h.normals.row(k).setZero();
      h.normals(k, i) = s;
      h.offsets(k) = 1.0;
      ++k;
    }
  }
  const VPolytope v = h_to_v(h);
  CHECK(v.num_vertices() == 8);
  CHECK(v.affine_dim == 3);
  CHECK(same_vertex_set(v.vertices, cube_vertices(3), 1e-10));
}

TEST_CASE("h_to_v reports infeasible systems as the empty value") {
  HPolytope h;
  h.dim = 2;
  h.normals.resize(3, 2);
  h.normals << -1, 0, 0, -1, 1, 1;
  h.offsets.resize(3);
  h.offsets << 0, 0, -1;  // x >= 0, y >= 0, x + y <= -1
  const VPolytope v = h_to_v(h);
  CHECK(v.is_empty());
  CHECK(v.affine_dim == -1);
}

TEST_CASE("h_to_v raises on polyhedra containing lines") {
  HPolytope h;
  h.dim = 2;
  h.normals.resize(1, 2);
  h.normals << 1, 0;
  h.offsets.resize(1);
  h.offsets << 1;  // x <= 1, y free
  CHECK_THROWS_AS(h_to_v(h), DegenerateGeometryError);
}

TEST_CASE("round trip: h_to_v(v_to_h(Q)) reproduces random polytopes") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 6);
    const int n = 5 + trial;
    MatrixXd pts = (trial % 4 == 3)
                       ? testgen::random_flat_points(rng, n, std::max(1, d - 2), d)
                       : testgen::random_points(rng, n, d);
    const VPolytope q = convex_hull(pts);
    const VPolytope back = h_to_v(v_to_h(q));
    REQUIRE(back.num_vertices() == q.num_vertices());
    CHECK((canonical_rows(back.vertices, 1e-8) - canonical_rows(q.vertices, 1e-8))
              .cwiseAbs()
              .maxCoeff() <= 1e-8);
    CHECK(back.affine_dim == q.affine_dim);
  }
}

TEST_CASE("minkowski_sum of orthogonal segments is the unit square") {
  MatrixXd s1(2, 2), s2(2, 2);
  s1 << 0, 0, 1, 0;
  s2 << 0, 0, 0, 1;
  const VPolytope sum = minkowski_sum(convex_hull(s1), convex_hull(s2));
  CHECK(sum.num_vertices() == 4);
  MatrixXd expect(4, 2);
  expect << 0, 0, 0, 1, 1, 0, 1, 1;
  CHECK(same_vertex_set(sum.vertices, expect, 1e-12));
}

TEST_CASE("minkowski_sum doubles a cube summed with itself") {
  const VPolytope cube = convex_hull(cube_vertices(3));
  const VPolytope sum = minkowski_sum(cube, cube);
  CHECK(sum.num_vertices() == 8);
  CHECK(same_vertex_set(sum.vertices, cube_vertices(3, 2.0), 1e-12));
}

TEST_CASE("minkowski_sum satisfies support additivity on random 6D pairs") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const VPolytope a = convex_hull(testgen::random_points(rng, 10, 6));
    const VPolytope b = convex_hull(testgen::random_points(rng, 9, 6));
    const VPolytope sum = minkowski_sum(a, b);
    CHECK(sum.num_vertices() <= a.num_vertices() * b.num_vertices());
    for (int k = 0; k < 200; ++k) {
      const VectorXd dir = testgen::random_direction(rng, 6);
      const double lhs = support(sum, dir);
      const double rhs = support(a, dir) + support(b, dir);
      CHECK(std::abs(lhs - rhs) <=
            1e-9 * (1.0 + std::abs(support(a, dir)) + std::abs(support(b, dir))));
    }
  }
}

TEST_CASE("minkowski_sum rejects dimension mismatch") {
  const VPolytope a = convex_hull(cube_vertices(2));
  const VPolytope b = convex_hull(cube_vertices(3));
  CHECK_THROWS_AS(minkowski_sum(a, b), InputError);
}

TEST_CASE("intersect of overlapping cubes is the overlap box") {
  const VPolytope cube = convex_hull(cube_vertices(3));
  const HPolytope a = v_to_h(cube);
  VPolytope shifted = cube;
  shifted.vertices.col(0).array() += 1.0;
  shifted.vertices = canonical_rows(shifted.vertices, 1e-8);
  const HPolytope b = v_to_h(shifted);
  const HPolytope both = intersect(a, b);
  CHECK(both.num_facets() == 6);
  const VPolytope v = h_to_v(both);
  CHECK(v.num_vertices() == 8);
  CHECK(v.vertices.col(0).minCoeff() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(v.vertices.col(0).maxCoeff() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("intersect drops redundant halfspaces") {
  const HPolytope cube = v_to_h(convex_hull(cube_vertices(3)));
  HPolytope loose;
  loose.dim = 3;
  loose.normals.resize(1, 3);
  loose.normals << 1, 0, 0;
  loose.offsets.resize(1);
  loose.offsets << 5;
  const HPolytope both = intersect(cube, loose);
  CHECK(both.num_facets() == 6);
}

TEST_CASE("intersect reports empty intersections explicitly") {
  HPolytope a, b;
  a.dim = b.dim = 1;
  a.normals.resize(1, 1);
  a.normals << 1;
  a.offsets.resize(1);
  a.offsets << 0;  // x <= 0
  b.normals.resize(1, 1);
  b.normals << -1;
  b.offsets.resize(1);
  b.offsets << -1;  // x >= 1
  const HPolytope both = intersect(a, b);
  CHECK(both.is_marked_empty());
  CHECK(h_to_v(both).is_empty());
}

TEST_CASE("intersection soundness on random points") {
  std::mt19937 rng(53);
  const HPolytope a = v_to_h(convex_hull(testgen::random_points(rng, 15, 3)));
  const HPolytope b = v_to_h(convex_hull(testgen::random_points(rng, 15, 3)));
  const HPolytope both = intersect(a, b);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < 300; ++k) {
    Eigen::Vector3d x(gauss(rng), gauss(rng), gauss(rng));
    const bool in_both = contains(a, x) && contains(b, x);
    const bool in_isect = contains(both, x);
    // Tolerance slack can flip razor-thin cases; require agreement when the
    // point is clearly classified by both operands.
    const bool clearly_in = contains(a, x, Tolerance{.eps_contain = 1e-9}) &&
                            contains(b, x, Tolerance{.eps_contain = 1e-9});
    if (clearly_in) CHECK(in_isect);
    if (!in_both) CHECK_FALSE(in_isect);
  }
}

TEST_CASE("contains on cube V and H forms") {
  const VPolytope cube = convex_hull(cube_vertices(3));
  const HPolytope h = v_to_h(cube);
  const Eigen::Vector3d origin(0, 0, 0);
  CHECK(contains(cube, origin));
  CHECK(contains(h, origin));
  const Eigen::Vector3d outside(1.0 + 2e-7, 0, 0);
  CHECK_FALSE(contains(cube, outside));
  CHECK_FALSE(contains(h, outside));
}

TEST_CASE("support of the cube") {
  const VPolytope cube = convex_hull(cube_vertices(3));
  CHECK(support(cube, Eigen::Vector3d(1, 0, 0)) == doctest::Approx(1.0));
  CHECK(support(cube, Eigen::Vector3d(1, 1, 1)) == doctest::Approx(3.0));
  CHECK_THROWS_AS(support(cube, Eigen::Vector3d(0, 0, 0)), InputError);
}

TEST_CASE("chebyshev center of cube and slab-limited box") {
  const HPolytope cube = v_to_h(convex_hull(cube_vertices(3)));
  const ChebyshevResult c = chebyshev_center(cube);
  REQUIRE(c.status == ChebyshevResult::Status::kOk);
  CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(c.center.norm() <= 1e-7);

  // Box [0,1] x [-2,2]: the x slab governs.
  MatrixXd pts(4, 2);
  pts << 0, -2, 0, 2, 1, -2, 1, 2;
  const ChebyshevResult b = chebyshev_center(v_to_h(convex_hull(pts)));
  REQUIRE(b.status == ChebyshevResult::Status::kOk);
  CHECK(b.radius == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(b.center(0) == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(b.center(1) >= -1.5 - 1e-7);
  CHECK(b.center(1) <= 1.5 + 1e-7);
}

TEST_CASE("chebyshev center flags empty and unbounded inputs") {
  CHECK(chebyshev_center(HPolytope::empty_set(3)).status ==
        ChebyshevResult::Status::kEmpty);
  HPolytope half;
  half.dim = 2;
  half.normals.resize(1, 2);
  half.normals << 1, 0;
  half.offsets.resize(1);
  half.offsets << 0;
  CHECK(chebyshev_center(half).status == ChebyshevResult::Status::kUnbounded);
}

TEST_CASE("project flattens a 6D cube onto three axes") {
  const VPolytope cube6 = convex_hull(cube_vertices(6));
  const VPolytope p = project(cube6, {0, 2, 4});
  CHECK(p.dim == 3);
  CHECK(p.num_vertices() == 8);
  CHECK(same_vertex_set(p.vertices, cube_vertices(3), 1e-12));

  // Projection of a projection equals the direct projection.
  const VPolytope p2 = project(p, {0, 1});
  const VPolytope direct = project(cube6, {0, 2});
  CHECK(same_vertex_set(p2.vertices, direct.vertices, 1e-12));
}

TEST_CASE("project validates dimension selections") {
  const VPolytope cube = convex_hull(cube_vertices(3));
  CHECK_THROWS_AS(project(cube, {0, 0}), InputError);
  CHECK_THROWS_AS(project(cube, {0, 7}), InputError);
  CHECK_THROWS_AS(project(cube, {}), InputError);
}
