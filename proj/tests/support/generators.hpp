#pragma once

#include <Eigen/Dense>
#include <random>

#include "wrenchpoly/polytope.hpp"

namespace testgen {

/// Random point cloud with n points in d dimensions, coordinates O(1).
inline Eigen::MatrixXd random_points(std::mt19937& rng, int n, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd pts(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) pts(i, j) = gauss(rng);
  }
  return pts;
}

/// Random flat point cloud: points generated in a k-dimensional space and
/// embedded into d dimensions by a random orthonormal map plus offset.
inline Eigen::MatrixXd random_flat_points(std::mt19937& rng, int n, int k, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd low = random_points(rng, n, k);
  Eigen::MatrixXd raw(d, k);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) raw(i, j) = gauss(rng);
  }
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(raw)
                                .householderQ() *
                            Eigen::MatrixXd::Identity(d, k);
  Eigen::VectorXd shift(d);
  for (int i = 0; i < d; ++i) shift(i) = gauss(rng);
  Eigen::MatrixXd out = low * q.transpose();
  out.rowwise() += shift.transpose();
  return out;
}

/// Unit direction sample.
inline Eigen::VectorXd random_direction(std::mt19937& rng, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(d);
  do {
    for (int i = 0; i < d; ++i) v(i) = gauss(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

}  // namespace testgen
