#include "wrenchpoly/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "dd.hpp"
#include "wrenchpoly/lp.hpp"

namespace wrenchpoly {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd rounding_key(const VectorXd& v, double quantum) {
  VectorXd key(v.size());
  for (int i = 0; i < v.size(); ++i) {
    key(i) = std::floor(v(i) / quantum + 0.5);
  }
  return key;
}

bool lex_less(const VectorXd& a, const VectorXd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

// Sorts rows lexicographically by rounded coordinates and merges rows that
// share a rounding key, keeping the lexicographically smallest original.
MatrixXd canonical_sort_rows(const MatrixXd& rows, double quantum) {
  const int n = static_cast<int>(rows.rows());
  if (n <= 1) return rows;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<VectorXd> keys(n);
  for (int i = 0; i < n; ++i) keys[i] = rounding_key(rows.row(i), quantum);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lex_less(keys[a], keys[b])) return true;
    if (lex_less(keys[b], keys[a])) return false;
    return lex_less(rows.row(a).transpose(), rows.row(b).transpose());
  });
  std::vector<int> kept;
  kept.reserve(n);
  for (int idx : order) {
    if (!kept.empty() && keys[kept.back()] == keys[idx]) continue;
    kept.push_back(idx);
  }
  MatrixXd out(static_cast<int>(kept.size()), rows.cols());
  for (size_t i = 0; i < kept.size(); ++i) out.row(static_cast<int>(i)) = rows.row(kept[i]);
  return out;
}

struct AffineHull {
  int rank = 0;
  VectorXd centroid;   // of the points
  MatrixXd basis;      // d x rank, orthonormal columns spanning the hull
  MatrixXd complement; // d x (d - rank), orthonormal complement
};

AffineHull affine_hull(const MatrixXd& points, const MatrixXd& rays,
                       double eps_rank) {
  const int d = static_cast<int>(points.cols() > 0 ? points.cols() : rays.cols());
  AffineHull hull;
  hull.centroid = points.rows() > 0 ? VectorXd(points.colwise().mean())
                                    : VectorXd(VectorXd::Zero(d));
  MatrixXd diffs(points.rows() + rays.rows(), d);
  for (int i = 0; i < points.rows(); ++i) {
    diffs.row(i) = points.row(i) - hull.centroid.transpose();
  }
  for (int i = 0; i < rays.rows(); ++i) diffs.row(points.rows() + i) = rays.row(i);
  if (diffs.rows() == 0) {
    hull.rank = 0;
    hull.basis = MatrixXd::Zero(d, 0);
    hull.complement = MatrixXd::Identity(d, d);
    return hull;
  }
  Eigen::JacobiSVD<MatrixXd> svd(diffs, Eigen::ComputeFullV);
  const VectorXd sv = svd.singularValues();
  const double scale = sv.size() > 0 ? std::max(1.0, sv(0)) : 1.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > eps_rank * scale) ++rank;
  }
  hull.rank = rank;
  hull.basis = svd.matrixV().leftCols(rank);
  hull.complement = svd.matrixV().rightCols(d - rank);
  return hull;
}

// Canonicalized halfspace rows: unit normals, rounded-lex sorted, deduped.
// Trivially-true rows (0.x <= b, b >= 0) are dropped; a trivially false row
// marks the whole set empty.
struct CanonicalH {
  MatrixXd normals;
  VectorXd offsets;
  bool empty = false;
};

CanonicalH canonicalize_halfspaces(const MatrixXd& normals, const VectorXd& offsets,
                                   double quantum) {
  const int d = static_cast<int>(normals.cols());
  std::vector<VectorXd> rows;
  for (int i = 0; i < normals.rows(); ++i) {
    const double nrm = normals.row(i).norm();
    if (nrm <= 1e-14) {
      if (offsets(i) < 0.0) {
        CanonicalH res;
        res.normals = MatrixXd::Zero(1, d);
        res.offsets = VectorXd::Constant(1, -1.0);
        res.empty = true;
        return res;
      }
      continue;
    }
    VectorXd row(d + 1);
    row.head(d) = normals.row(i).transpose() / nrm;
    row(d) = offsets(i) / nrm;
    rows.push_back(row);
  }
  MatrixXd packed(static_cast<int>(rows.size()), d + 1);
  for (size_t i = 0; i < rows.size(); ++i) packed.row(static_cast<int>(i)) = rows[i];
  packed = canonical_sort_rows(packed, quantum);
  CanonicalH res;
  res.normals = packed.leftCols(d);
  res.offsets = packed.col(d);
  return res;
}

CanonicalH canonicalize_halfspaces(const HPolytope& p, double quantum) {
  return canonicalize_halfspaces(p.normals, p.offsets, quantum);
}

lp::Options lp_options_for(const Tolerance& tol) {
  lp::Options opt;
  opt.eps_feasible = std::min(1e-9, tol.eps_contain);
  return opt;
}

// Indices of the extreme points of the (full-dimensional) point set,
// determined by separating-hyperplane LPs. `rays` extends the hull conically.
std::vector<int> extreme_point_indices(const MatrixXd& points, const MatrixXd& rays,
                                       const Tolerance& tol) {
  const int n = static_cast<int>(points.rows());
  if (n == 1) return {0};
  const lp::Options opt = lp_options_for(tol);

  // Support certificates: a point that is the unique maximizer of some
  // direction is extreme and skips its LP.
  std::vector<bool> certified(n, false);
  if (rays.rows() == 0) {
    const int d = static_cast<int>(points.cols());
    std::vector<VectorXd> dirs;
    for (int i = 0; i < d; ++i) {
      dirs.push_back(VectorXd::Unit(d, i));
      dirs.push_back(-VectorXd::Unit(d, i));
    }
    std::mt19937 rng(0xC0FFEE);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 6 * d; ++i) {
      VectorXd dir(d);
      for (int j = 0; j < d; ++j) dir(j) = gauss(rng);
      if (dir.norm() > 1e-9) dirs.push_back(dir.normalized());
    }
    const double gap = 1e-9 * (1.0 + points.cwiseAbs().maxCoeff());
    for (const VectorXd& dir : dirs) {
      const VectorXd vals = points * dir;
      int best = 0;
      for (int i = 1; i < n; ++i) {
        if (vals(i) > vals(best)) best = i;
      }
      bool unique = true;
      for (int i = 0; i < n && unique; ++i) {
        if (i != best && vals(i) > vals(best) - gap) unique = false;
      }
      if (unique) certified[best] = true;
    }
  }

  std::vector<bool> alive(n, true);
  for (int p = 0; p < n; ++p) {
    if (certified[p]) continue;
    int others = 0;
    for (int i = 0; i < n; ++i) {
      if (alive[i] && i != p) ++others;
    }
    if (others == 0) continue;
    MatrixXd rest(others, points.cols());
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (alive[i] && i != p) rest.row(k++) = points.row(i);
    }
    const double sigma = lp::separation_margin(rest, rays, points.row(p), opt);
    if (sigma <= tol.eps_hull) alive[p] = false;
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (alive[i]) out.push_back(i);
  }
  return out;
}

// Shared hull path: dedupe, detect the affine hull, extract extreme points
// in hull coordinates, return original coordinates canonically ordered.
VPolytope hull_of_points(const MatrixXd& raw_points, const MatrixXd& raw_rays,
                         const Tolerance& tol) {
  tol.validate();
  if (raw_points.rows() == 0) {
    throw InputError("convex_hull: at least one point required");
  }
  const int d = static_cast<int>(raw_points.cols());
  const MatrixXd points = canonical_sort_rows(raw_points, tol.eps_canon);
  MatrixXd rays(0, d);
  if (raw_rays.rows() > 0) {
    MatrixXd unit = raw_rays;
    for (int i = 0; i < unit.rows(); ++i) {
      const double nrm = unit.row(i).norm();
      if (nrm <= 1e-14) throw InputError("convex_hull: zero ray");
      unit.row(i) /= nrm;
    }
    rays = canonical_sort_rows(unit, tol.eps_canon);
  }

  const AffineHull hull = affine_hull(points, rays, tol.eps_rank);
  VPolytope out;
  out.dim = d;
  out.rays = rays;
  out.affine_dim = hull.rank;
  if (hull.rank == 0 && rays.rows() == 0) {
    out.vertices = points.topRows(1);
    return out;
  }

  MatrixXd proj = (points.rowwise() - hull.centroid.transpose()) * hull.basis;
  MatrixXd proj_rays = rays * hull.basis;
  const std::vector<int> keep = extreme_point_indices(proj, proj_rays, tol);
  MatrixXd verts(static_cast<int>(keep.size()), d);
  for (size_t i = 0; i < keep.size(); ++i) verts.row(static_cast<int>(i)) = points.row(keep[i]);
  out.vertices = canonical_sort_rows(verts, tol.eps_canon);
  return out;
}

// ---------------------------------------------------------------------------
// H -> V conversion through the homogenization cone.

struct HtoVRaw {
  MatrixXd vertices;
  MatrixXd rays;
};

// Least-squares refinement of a vertex onto its tight constraint set.
VectorXd polish_vertex(const VectorXd& v, const MatrixXd& normals,
                       const VectorXd& offsets, const Tolerance& tol) {
  const int m = static_cast<int>(normals.rows());
  const double band = std::max(tol.eps_contain, 1e-9 * (1.0 + v.cwiseAbs().maxCoeff()));
  std::vector<int> tight;
  for (int i = 0; i < m; ++i) {
    if (std::abs(normals.row(i).dot(v) - offsets(i)) <= band) tight.push_back(i);
  }
  if (static_cast<int>(tight.size()) < v.size()) return v;
  MatrixXd at(static_cast<int>(tight.size()), v.size());
  VectorXd bt(static_cast<int>(tight.size()));
  for (size_t i = 0; i < tight.size(); ++i) {
    at.row(static_cast<int>(i)) = normals.row(tight[i]);
    bt(static_cast<int>(i)) = offsets(tight[i]);
  }
  const VectorXd refined = at.colPivHouseholderQr().solve(bt);
  if (!refined.allFinite()) return v;
  if ((refined - v).norm() > 1e-3 * (1.0 + v.norm())) return v;
  const double worst_new = (normals * refined - offsets).maxCoeff();
  if (worst_new > tol.eps_contain) return v;
  return refined;
}

HtoVRaw h_to_v_core(const CanonicalH& ch, int d, const Tolerance& tol) {
  const int m = static_cast<int>(ch.normals.rows());

  // A nonempty polyhedron contains a line iff its normal matrix is rank
  // deficient; vertex enumeration is undefined there.
  {
    Eigen::JacobiSVD<MatrixXd> svd(ch.normals, 0);
    const VectorXd sv = svd.singularValues();
    const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) > tol.eps_rank * scale) ++rank;
    }
    if (rank < d) {
      throw DegenerateGeometryError(
          "h_to_v: polyhedron contains a line; no extreme points exist");
    }
  }

  // Homogenization cone {(x,t) : A x - b t <= 0, -t <= 0}.
  MatrixXd hom(m + 1, d + 1);
  for (int i = 0; i < m; ++i) {
    hom.row(i).head(d) = ch.normals.row(i);
    hom(i, d) = -ch.offsets(i);
    hom.row(i) /= hom.row(i).norm();
  }
  hom.row(m).setZero();
  hom(m, d) = -1.0;
  hom = canonical_sort_rows(hom, tol.eps_canon);

  const MatrixXd dd_rays = detail::double_description(hom, tol.eps_hull);

  std::vector<VectorXd> verts, rays;
  const double t_eps = 10.0 * tol.eps_hull;
  for (int i = 0; i < dd_rays.rows(); ++i) {
    const double t = dd_rays(i, d);
    if (t < -t_eps) {
      throw DegenerateGeometryError("h_to_v: negative homogenization weight");
    }
    if (t > t_eps) {
      VectorXd v = dd_rays.row(i).head(d).transpose() / t;
      verts.push_back(polish_vertex(v, ch.normals, ch.offsets, tol));
    } else {
      VectorXd r = dd_rays.row(i).head(d).transpose();
      const double nrm = r.norm();
      if (nrm > 1e-12) rays.push_back(r / nrm);
    }
  }

  HtoVRaw out;
  out.vertices.resize(static_cast<int>(verts.size()), d);
  for (size_t i = 0; i < verts.size(); ++i) out.vertices.row(static_cast<int>(i)) = verts[i];
  out.rays.resize(static_cast<int>(rays.size()), d);
  for (size_t i = 0; i < rays.size(); ++i) out.rays.row(static_cast<int>(i)) = rays[i];
  return out;
}

void verify_enclosure(const MatrixXd& vertices, const MatrixXd& rays,
                      const MatrixXd& normals, const VectorXd& offsets,
                      const Tolerance& tol, const char* who) {
  for (int i = 0; i < vertices.rows(); ++i) {
    const VectorXd slack = offsets - normals * vertices.row(i).transpose();
    if (slack.minCoeff() < -tol.eps_contain) {
      throw DegenerateGeometryError(std::string(who) +
                                    ": vertex escapes a halfspace beyond tolerance");
    }
  }
  for (int i = 0; i < rays.rows(); ++i) {
    const VectorXd val = normals * rays.row(i).transpose();
    if (val.maxCoeff() > tol.eps_contain) {
      throw DegenerateGeometryError(std::string(who) +
                                    ": ray escapes a halfspace beyond tolerance");
    }
  }
}

}  // namespace

int affine_dimension(const MatrixXd& points, const MatrixXd& rays, double eps_rank) {
  if (points.rows() == 0 && rays.rows() == 0) return -1;
  return affine_hull(points, rays, eps_rank).rank;
}

MatrixXd canonical_rows(const MatrixXd& rows, double quantum) {
  return canonical_sort_rows(rows, quantum);
}

VPolytope convex_hull(const MatrixXd& points, const Tolerance& tol) {
  return hull_of_points(points, MatrixXd(0, points.cols()), tol);
}

VPolytope h_to_v(const HPolytope& p, const Tolerance& tol) {
  tol.validate();
  if (p.is_marked_empty()) return VPolytope::empty_set(p.dim);
  const CanonicalH ch = canonicalize_halfspaces(p, tol.eps_canon);
  if (ch.empty) return VPolytope::empty_set(p.dim);
  if (ch.normals.rows() == 0) {
    throw DegenerateGeometryError("h_to_v: unconstrained space has no vertices");
  }
  if (!lp::halfspaces_feasible(ch.normals, ch.offsets, lp_options_for(tol))) {
    return VPolytope::empty_set(p.dim);
  }

  const HtoVRaw raw = h_to_v_core(ch, p.dim, tol);
  if (raw.vertices.rows() == 0) {
    throw DegenerateGeometryError("h_to_v: feasible polyhedron produced no vertex");
  }
  VPolytope out;
  out.dim = p.dim;
  out.vertices = canonical_sort_rows(raw.vertices, tol.eps_canon);
  out.rays = raw.rays.rows() > 0 ? canonical_sort_rows(raw.rays, tol.eps_canon)
                                 : MatrixXd(0, p.dim);
  out.affine_dim = affine_dimension(out.vertices, out.rays, tol.eps_rank);
  verify_enclosure(out.vertices, out.rays, ch.normals, ch.offsets, tol, "h_to_v");
  return out;
}

HPolytope v_to_h(const VPolytope& p, const Tolerance& tol) {
  tol.validate();
  const int d = p.dim;
  if (p.is_empty()) return HPolytope::empty_set(d);
  const bool cone = p.rays.rows() > 0;
  if (cone && !p.is_cone()) {
    throw InputError("v_to_h: input must be bounded or a cone");
  }

  const MatrixXd& generators = cone ? p.rays : p.vertices;
  const AffineHull hull = cone
      ? affine_hull(MatrixXd::Zero(1, d), p.rays, tol.eps_rank)
      : affine_hull(p.vertices, MatrixXd(0, d), tol.eps_rank);
  const VectorXd center = cone ? VectorXd(VectorXd::Zero(d)) : hull.centroid;
  const int k = hull.rank;

  std::vector<VectorXd> rows;  // (normal, offset) rows, unit normals
  // Affine-hull equalities as paired halfspaces.
  for (int j = 0; j < hull.complement.cols(); ++j) {
    const VectorXd q = hull.complement.col(j);
    const double b = q.dot(center);
    VectorXd r1(d + 1), r2(d + 1);
    r1.head(d) = q;
    r1(d) = b;
    r2.head(d) = -q;
    r2(d) = -b;
    rows.push_back(r1);
    rows.push_back(r2);
  }

  if (k > 0) {
    // Facets within the hull via polarity: project, take the polar, and read
    // facets off the polar's extreme points (bounded case) or rays (cone).
    MatrixXd proj = (generators.rowwise() - center.transpose()) * hull.basis;
    HPolytope polar;
    polar.dim = k;
    polar.normals = proj;
    polar.offsets = cone ? VectorXd(VectorXd::Zero(proj.rows()))
                         : VectorXd(VectorXd::Ones(proj.rows()));
    const VPolytope polar_v = h_to_v(polar, tol);
    const MatrixXd& polar_gens = cone ? polar_v.rays : polar_v.vertices;
    if (!cone && polar_v.rays.rows() > 0) {
      throw DegenerateGeometryError("v_to_h: polar of a bounded polytope is unbounded");
    }
    for (int i = 0; i < polar_gens.rows(); ++i) {
      const VectorXd u = polar_gens.row(i).transpose();
      const double nrm = u.norm();
      if (nrm <= 1e-12) continue;  // polar vertex at the origin carries no facet
      VectorXd row(d + 1);
      row.head(d) = (hull.basis * u) / nrm;
      row(d) = cone ? 0.0 : (1.0 + u.dot(hull.basis.transpose() * center)) / nrm;
      rows.push_back(row);
    }
  }

  MatrixXd packed(static_cast<int>(rows.size()), d + 1);
  for (size_t i = 0; i < rows.size(); ++i) packed.row(static_cast<int>(i)) = rows[i];
  packed = canonical_sort_rows(packed, tol.eps_canon);

  HPolytope out;
  out.dim = d;
  out.normals = packed.leftCols(d);
  out.offsets = packed.col(d);
  verify_enclosure(p.vertices, p.rays, out.normals, out.offsets, tol, "v_to_h");

  // Every inequality facet must be supported by the input set.
  if (!cone && p.vertices.rows() > 0) {
    const std::vector<bool> eq = equality_pair_rows(out, tol);
    for (int i = 0; i < out.normals.rows(); ++i) {
      if (eq[i]) continue;
      const double reach = (p.vertices * out.normals.row(i).transpose()).maxCoeff();
      if (reach < out.offsets(i) - tol.eps_contain) {
        throw DegenerateGeometryError("v_to_h: unsupported facet detected");
      }
    }
  }
  return out;
}

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b, const Tolerance& tol) {
  tol.validate();
  if (a.dim != b.dim) {
    throw InputError("minkowski_sum: ambient dimension mismatch");
  }
  if (a.is_empty() || b.is_empty()) return VPolytope::empty_set(a.dim);

  MatrixXd sums(a.vertices.rows() * b.vertices.rows(), a.dim);
  int k = 0;
  for (int i = 0; i < a.vertices.rows(); ++i) {
    for (int j = 0; j < b.vertices.rows(); ++j) {
      sums.row(k++) = a.vertices.row(i) + b.vertices.row(j);
    }
  }
  MatrixXd rays(a.rays.rows() + b.rays.rows(), a.dim);
  rays.topRows(a.rays.rows()) = a.rays;
  rays.bottomRows(b.rays.rows()) = b.rays;
  return hull_of_points(sums, rays, tol);
}

HPolytope intersect(const HPolytope& a, const HPolytope& b, const Tolerance& tol) {
  tol.validate();
  if (a.dim != b.dim) {
    throw InputError("intersect: ambient dimension mismatch");
  }
  if (a.is_marked_empty() || b.is_marked_empty()) return HPolytope::empty_set(a.dim);

  MatrixXd normals(a.normals.rows() + b.normals.rows(), a.dim);
  VectorXd offsets(a.offsets.size() + b.offsets.size());
  normals.topRows(a.normals.rows()) = a.normals;
  normals.bottomRows(b.normals.rows()) = b.normals;
  offsets.head(a.offsets.size()) = a.offsets;
  offsets.tail(b.offsets.size()) = b.offsets;

  CanonicalH ch = canonicalize_halfspaces(normals, offsets, tol.eps_canon);
  if (ch.empty) return HPolytope::empty_set(a.dim);
  const lp::Options opt = lp_options_for(tol);
  if (!lp::halfspaces_feasible(ch.normals, ch.offsets, opt)) {
    return HPolytope::empty_set(a.dim);
  }

  // LP redundancy sweep: a retained row stays only if dropping it would
  // enlarge the set by more than eps_hull.
  const int m = static_cast<int>(ch.normals.rows());
  std::vector<bool> alive(m, true);
  for (int i = 0; i < m; ++i) {
    int others = 0;
    for (int j = 0; j < m; ++j) {
      if (alive[j] && j != i) ++others;
    }
    MatrixXd rest(others + 1, a.dim);
    VectorXd roff(others + 1);
    int k = 0;
    for (int j = 0; j < m; ++j) {
      if (alive[j] && j != i) {
        rest.row(k) = ch.normals.row(j);
        roff(k) = ch.offsets(j);
        ++k;
      }
    }
    // Cap keeps the LP bounded in the probed direction (cones included).
    rest.row(k) = ch.normals.row(i);
    roff(k) = ch.offsets(i) + 1.0;
    const lp::MaxResult res = lp::maximize_over_halfspaces(
        rest, roff, ch.normals.row(i).transpose(), /*known_feasible=*/true, opt);
    if (res.status == lp::Status::kOptimal && res.value <= ch.offsets(i) + tol.eps_hull) {
      alive[i] = false;
    }
  }

  int kept = 0;
  for (int i = 0; i < m; ++i) kept += alive[i] ? 1 : 0;
  HPolytope out;
  out.dim = a.dim;
  out.normals.resize(kept, a.dim);
  out.offsets.resize(kept);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    if (alive[i]) {
      out.normals.row(k) = ch.normals.row(i);
      out.offsets(k) = ch.offsets(i);
      ++k;
    }
  }
  return out;
}

bool contains(const HPolytope& p, const VectorXd& x, const Tolerance& tol) {
  if (x.size() != p.dim) {
    throw InputError("contains: point dimension mismatch");
  }
  for (int i = 0; i < p.normals.rows(); ++i) {
    const double nrm = p.normals.row(i).norm();
    if (nrm <= 1e-30) {
      if (p.offsets(i) < 0.0) return false;  // canonical empty marker
      continue;                              // trivially true row
    }
    if (p.normals.row(i).dot(x) - p.offsets(i) > tol.eps_contain * nrm) {
      return false;
    }
  }
  return true;
}

bool contains(const VPolytope& p, const VectorXd& x, const Tolerance& tol) {
  if (x.size() != p.dim) {
    throw InputError("contains: point dimension mismatch");
  }
  if (p.is_empty()) return false;
  const double sigma = lp::separation_margin(p.vertices, p.rays, x, lp_options_for(tol));
  return sigma <= tol.eps_contain;
}

double support(const VPolytope& p, const VectorXd& direction) {
  if (direction.size() != p.dim) {
    throw InputError("support: direction dimension mismatch");
  }
  if (direction.norm() <= 0.0) {
    throw InputError("support: zero direction");
  }
  if (!p.is_bounded()) {
    throw InputError("support: polytope must be bounded");
  }
  if (p.is_empty()) {
    throw InputError("support: empty polytope");
  }
  return (p.vertices * direction).maxCoeff();
}

std::vector<bool> equality_pair_rows(const HPolytope& p, const Tolerance& tol) {
  const int m = static_cast<int>(p.normals.rows());
  std::vector<bool> eq(m, false);
  for (int i = 0; i < m; ++i) {
    if (eq[i]) continue;
    for (int j = i + 1; j < m; ++j) {
      const double ndist = (p.normals.row(i) + p.normals.row(j)).norm();
      const double odist = std::abs(p.offsets(i) + p.offsets(j));
      if (ndist <= 10.0 * tol.eps_canon &&
          odist <= 10.0 * tol.eps_canon * (1.0 + std::abs(p.offsets(i)))) {
        eq[i] = true;
        eq[j] = true;
      }
    }
  }
  return eq;
}

ChebyshevResult chebyshev_center(const HPolytope& p, const Tolerance& tol) {
  tol.validate();
  ChebyshevResult res;
  if (p.is_marked_empty()) {
    res.status = ChebyshevResult::Status::kEmpty;
    return res;
  }
  const CanonicalH ch = canonicalize_halfspaces(p, tol.eps_canon);
  if (ch.empty) {
    res.status = ChebyshevResult::Status::kEmpty;
    return res;
  }
  const int d = p.dim;
  const int m = static_cast<int>(ch.normals.rows());
  if (m == 0) {
    res.status = ChebyshevResult::Status::kUnbounded;
    return res;
  }
  const lp::Options opt = lp_options_for(tol);
  if (!lp::halfspaces_feasible(ch.normals, ch.offsets, opt)) {
    res.status = ChebyshevResult::Status::kEmpty;
    return res;
  }

  HPolytope canon;
  canon.dim = d;
  canon.normals = ch.normals;
  canon.offsets = ch.offsets;
  const std::vector<bool> eq = equality_pair_rows(canon, tol);
  bool any_inequality = false;
  for (int i = 0; i < m; ++i) any_inequality |= !eq[i];
  if (!any_inequality) {
    // Pure equality system: the set is a single affine point (or flat);
    // the inscribed ball is degenerate.
    const VectorXd center =
        ch.normals.colPivHouseholderQr().solve(ch.offsets);
    res.status = ChebyshevResult::Status::kOk;
    res.center = center;
    res.radius = 0.0;
    return res;
  }

  // max r  s.t.  a_i.x + r <= b_i (inequality rows),  a_e.x <= b_e (pairs).
  MatrixXd M(d + 1, m);
  for (int i = 0; i < m; ++i) {
    M.col(i).head(d) = ch.normals.row(i).transpose();
    M(d, i) = eq[i] ? 0.0 : 1.0;
  }
  VectorXd g = VectorXd::Zero(d + 1);
  g(d) = 1.0;
  const lp::Solution sol = lp::solve_equality_form(M, g, ch.offsets, opt);
  switch (sol.status) {
    case lp::Status::kOptimal:
      res.status = ChebyshevResult::Status::kOk;
      res.center = sol.dual.head(d);
      res.radius = std::max(0.0, sol.objective);
      break;
    case lp::Status::kInfeasible:
      res.status = ChebyshevResult::Status::kUnbounded;
      break;
    default:
      res.status = ChebyshevResult::Status::kEmpty;
      break;
  }
  return res;
}

VPolytope project(const VPolytope& p, const std::vector<int>& dims,
                  const Tolerance& tol) {
  tol.validate();
  if (dims.empty()) {
    throw InputError("project: no target dimensions given");
  }
  std::vector<int> seen;
  for (int d : dims) {
    if (d < 0 || d >= p.dim) {
      throw InputError("project: dimension index out of range");
    }
    if (std::find(seen.begin(), seen.end(), d) != seen.end()) {
      throw InputError("project: duplicate dimension index");
    }
    seen.push_back(d);
  }
  if (p.is_empty()) return VPolytope::empty_set(static_cast<int>(dims.size()));

  MatrixXd pts(p.vertices.rows(), static_cast<int>(dims.size()));
  for (size_t j = 0; j < dims.size(); ++j) pts.col(static_cast<int>(j)) = p.vertices.col(dims[j]);
  MatrixXd rays(p.rays.rows(), static_cast<int>(dims.size()));
  for (size_t j = 0; j < dims.size(); ++j) rays.col(static_cast<int>(j)) = p.rays.col(dims[j]);
  // Projected rays can collapse to zero; drop those.
  std::vector<int> keep;
  for (int i = 0; i < rays.rows(); ++i) {
    if (rays.row(i).norm() > 1e-12) keep.push_back(i);
  }
  MatrixXd kept_rays(static_cast<int>(keep.size()), static_cast<int>(dims.size()));
  for (size_t i = 0; i < keep.size(); ++i) kept_rays.row(static_cast<int>(i)) = rays.row(keep[i]);
  return hull_of_points(pts, kept_rays, tol);
}

}  // namespace wrenchpoly
