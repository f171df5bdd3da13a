#include "dd.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wrenchpoly/errors.hpp"

namespace wrenchpoly::detail {

namespace {

// Incidence bitset over constraint rows.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int nbits) : w((nbits + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  static Bits intersect(const Bits& a, const Bits& b) {
    Bits r(0);
    r.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  bool subset_of(const Bits& other) const {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] & ~other.w[i]) return false;
    }
    return true;
  }
};

struct Ray {
  Eigen::VectorXd dir;  // unit
  Bits zero;            // rows incident on this ray (processed rows only)

  Ray(Eigen::VectorXd d, Bits z) : dir(std::move(d)), zero(std::move(z)) {}
};

Bits incidence(const Eigen::MatrixXd& A, const std::vector<int>& processed,
               const Eigen::VectorXd& r, double zero_eps) {
  Bits z(static_cast<int>(A.rows()));
  for (int row : processed) {
    if (std::abs(A.row(row).dot(r)) <= zero_eps) z.set(row);
  }
  return z;
}

}  // namespace

Eigen::MatrixXd double_description(const Eigen::MatrixXd& A, double zero_eps) {
  const int m = static_cast<int>(A.rows());
  const int k = static_cast<int>(A.cols());
  if (m < k) {
    throw DegenerateGeometryError(
        "double_description: cone is not pointed (too few constraints)");
  }

  // Greedy selection of k independent rows for the initial simplicial cone.
  std::vector<int> basis_rows;
  {
    Eigen::MatrixXd q(k, 0);
    for (int i = 0; i < m && static_cast<int>(basis_rows.size()) < k; ++i) {
      Eigen::VectorXd v = A.row(i).transpose();
      Eigen::VectorXd res = v;
      if (q.cols() > 0) res -= q * (q.transpose() * v);
      const double nrm = res.norm();
      if (nrm > 1e-10) {
        q.conservativeResize(Eigen::NoChange, q.cols() + 1);
        q.col(q.cols() - 1) = res / nrm;
        basis_rows.push_back(i);
      }
    }
  }
  if (static_cast<int>(basis_rows.size()) < k) {
    throw DegenerateGeometryError(
        "double_description: constraint matrix is rank deficient "
        "(cone contains a line)");
  }

  Eigen::MatrixXd b0(k, k);
  for (int i = 0; i < k; ++i) b0.row(i) = A.row(basis_rows[i]);
  const Eigen::MatrixXd r0 = -b0.partialPivLu().solve(Eigen::MatrixXd::Identity(k, k));

  std::vector<int> processed = basis_rows;
  std::vector<Ray> rays;
  rays.reserve(64);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXd d = r0.col(j);
    const double nrm = d.norm();
    if (nrm <= zero_eps) {
      throw DegenerateGeometryError("double_description: degenerate initial cone");
    }
    d /= nrm;
    rays.emplace_back(d, incidence(A, processed, d, zero_eps));
  }

  std::vector<bool> is_basis_row(m, false);
  for (int i : basis_rows) is_basis_row[i] = true;

  for (int row = 0; row < m; ++row) {
    if (is_basis_row[row]) continue;

    const Eigen::VectorXd a = A.row(row).transpose();
    const int nr = static_cast<int>(rays.size());
    Eigen::VectorXd s(nr);
    for (int i = 0; i < nr; ++i) s(i) = a.dot(rays[i].dir);

    std::vector<int> pos, neg;
    for (int i = 0; i < nr; ++i) {
      if (s(i) > zero_eps) {
        pos.push_back(i);
      } else if (s(i) < -zero_eps) {
        neg.push_back(i);
      }
    }

    processed.push_back(row);
    if (pos.empty()) {
      // Nothing cut off; just refresh incidence of rays lying on the plane.
      for (int i = 0; i < nr; ++i) {
        if (std::abs(s(i)) <= zero_eps) rays[i].zero.set(row);
      }
      continue;
    }

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (int i = 0; i < nr; ++i) {
      if (s(i) <= zero_eps) {
        Ray r = rays[i];
        if (std::abs(s(i)) <= zero_eps) r.zero.set(row);
        next.push_back(std::move(r));
      }
    }

    // Combine adjacent (violating, satisfying) pairs into boundary rays.
    for (int p : pos) {
      for (int n : neg) {
        const Bits common = Bits::intersect(rays[p].zero, rays[n].zero);
        if (common.count() < k - 2) continue;
        bool adjacent = true;
        for (int t = 0; t < nr && adjacent; ++t) {
          if (t == p || t == n) continue;
          if (common.subset_of(rays[t].zero)) adjacent = false;
        }
        if (!adjacent) continue;

        Eigen::VectorXd d = s(p) * rays[n].dir - s(n) * rays[p].dir;
        const double nrm = d.norm();
        if (nrm <= zero_eps) continue;
        d /= nrm;
        next.emplace_back(d, incidence(A, processed, d, zero_eps));
      }
    }
    rays = std::move(next);
    if (rays.empty()) break;  // cone collapsed to {0}
  }

  Eigen::MatrixXd out(static_cast<int>(rays.size()), k);
  for (size_t i = 0; i < rays.size(); ++i) out.row(static_cast<int>(i)) = rays[i].dir;
  return out;
}

}  // namespace wrenchpoly::detail
