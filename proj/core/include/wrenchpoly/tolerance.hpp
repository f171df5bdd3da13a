#pragma once

#include <stdexcept>

namespace wrenchpoly {

/// Numerical thresholds used throughout the geometry kernel.
///
/// All values are strictly positive; eps_contain must not be tighter than
/// eps_hull (containment queries allow at least as much slack as hull
/// construction introduces).
struct Tolerance {
  double eps_rank = 1e-9;     ///< rank threshold for affine-dimension tests
  double eps_hull = 1e-9;     ///< coplanarity threshold in hull construction
  double eps_contain = 1e-7;  ///< slack allowed in containment tests
  double eps_canon = 1e-8;    ///< vertex rounding quantum for canonical order

  void validate() const {
    if (!(eps_rank > 0.0) || !(eps_hull > 0.0) || !(eps_contain > 0.0) ||
        !(eps_canon > 0.0)) {
      throw std::invalid_argument("Tolerance: all thresholds must be > 0");
    }
    if (eps_contain < eps_hull) {
      throw std::invalid_argument("Tolerance: eps_contain must be >= eps_hull");
    }
  }

  /// Derives a full Tolerance record from a single containment threshold,
  /// keeping the default ratios between the four fields.
  static Tolerance from_contain_eps(double eps) {
    Tolerance t;
    t.eps_contain = eps;
    t.eps_hull = eps * 1e-2;
    t.eps_rank = eps * 1e-2;
    t.eps_canon = eps * 1e-1;
    t.validate();
    return t;
  }
};

}  // namespace wrenchpoly
