// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file planes.hpp
 * @brief Subspaces of Nambu space stored as orthonormal frames.
 */

#pragma once

#include <vector>

#include "psym/nambu.hpp"

namespace psym {

/**
 * @brief A subspace A of C^{2n}.
 *
 * Frames F and F*V (V unitary) describe the same plane; compare planes
 * through their projectors.
 */
class Plane {
 public:
  Plane() = default;
  /// Wraps a frame that is already orthonormal (checked to kOrthoTol).
  Plane(NambuSpace space, Mat frame);

  [[nodiscard]] const NambuSpace& space() const noexcept { return space_; }
  [[nodiscard]] const Mat& frame() const noexcept { return frame_; }
  [[nodiscard]] const Mat& projector() const noexcept { return proj_; }
  [[nodiscard]] int rank() const noexcept { return static_cast<int>(frame_.cols()); }

 private:
  NambuSpace space_;
  Mat frame_;
  Mat proj_;
};

/// Orthonormalized span of linearly independent vectors (columns of `vectors`).
[[nodiscard]] Plane plane_from_vectors(const NambuSpace& space, const Mat& vectors);
[[nodiscard]] Plane plane_from_vectors(const NambuSpace& space, const std::vector<Vec>& vectors);

/// Span of possibly dependent columns, truncated to the given rank.
[[nodiscard]] Plane plane_from_span(const NambuSpace& space, const Mat& vectors, int rank);

/// Range of a Hermitian projector (eigenvalues near 1).
[[nodiscard]] Plane plane_from_projector(const NambuSpace& space, const Mat& projector);

[[nodiscard]] Plane complement(const Plane& a);

/// J(A) = i(Pi_A - Pi_{A^c}): multiplies by i on A and by -i on A^c.
[[nodiscard]] Mat j_of(const Plane& a);

/// max |F^T B F'|; below kAlgTol certifies {A, A'} = 0.
[[nodiscard]] double fermi_check(const Plane& a, const Plane& b);

/// max |J Pi_A J^dag - (1 - Pi_A)|; below kAlgTol certifies J A = A^c.
[[nodiscard]] double pseudo_check(const Mat& j, const Plane& a);
[[nodiscard]] double pseudo_check(const Generator& j, const Plane& a);

/// Bracket annihilator A^perp = B conj(A^c), the unique rank-n plane with {A^perp, A} = 0.
[[nodiscard]] Plane fermi_perp(const Plane& a);

/// Spectral-norm distance between projectors.
[[nodiscard]] double plane_distance(const Plane& a, const Plane& b);
[[nodiscard]] double projector_distance(const Mat& pa, const Mat& pb);

/// U * A.
[[nodiscard]] Plane transform(const Mat& u, const Plane& a);

}  // namespace psym
