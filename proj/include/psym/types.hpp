// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file types.hpp
 * @brief Shared numeric aliases, tolerances and error types.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace psym {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance for algebraic identities (brackets, Clifford relations, pseudo-symmetries).
inline constexpr double kAlgTol = 1e-10;
/// Tolerance for orthonormalization residuals.
inline constexpr double kOrthoTol = 1e-12;
/// Singular-value threshold below which a spanning set counts as rank deficient.
inline constexpr double kRankTol = 1e-10;

/// Malformed input: dimension mismatch, schema violation, bad parameter.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical precondition or postcondition failed.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sup-norm of a complex matrix.
[[nodiscard]] inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace psym
