#pragma once

#include <Eigen/Dense>

namespace wrenchpoly::detail {

/// Extreme rays of the pointed polyhedral cone {y : A y <= 0}, one unit ray
/// per row of the result. A must have full column rank (pointedness); rows
/// are processed in the order given, so callers sort them canonically first.
/// zero_eps classifies incidence of rays on constraint hyperplanes.
Eigen::MatrixXd double_description(const Eigen::MatrixXd& A, double zero_eps);

}  // namespace wrenchpoly::detail
