// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file nambu.hpp
 * @brief Nambu space C^{2n}, its anti-commutator bracket, particle-hole
 *        conjugation and Clifford generators.
 *
 * Basis order is (c_1..c_n, c_1^dag..c_n^dag). A space obtained by (1,1)
 * doubling is the direct sum of two copies of the parent space; its bracket
 * matrix is block-diagonal rather than canonical.
 */

#pragma once

#include <string>
#include <vector>

#include "psym/types.hpp"

namespace psym {

/**
 * @brief Ambient single-fermion operator space.
 *
 * The bracket is {v,w} = v^T B w, gamma(v) = G conj(v), and Omega maps
 * (c, c^dag) coordinates to Majorana coordinates.
 */
struct NambuSpace {
  int n = 0;          ///< Band count (rank of a fiber).
  int doublings = 0;  ///< Number of (1,1) doublings applied to a canonical base space.
  Mat B;              ///< Bracket matrix.
  Mat G;              ///< gamma = G * conj.
  Mat Omega;          ///< Majorana transform.

  [[nodiscard]] int dim() const noexcept { return 2 * n; }
  [[nodiscard]] cplx bracket(const Vec& v, const Vec& w) const;
  [[nodiscard]] bool same_as(const NambuSpace& o) const noexcept {
    return n == o.n && doublings == o.doublings;
  }
  /// Basis vector c_i (0-based); in a doubled space band i lives in block i / (n >> doublings).
  [[nodiscard]] Vec c(int i) const;
  /// Basis vector c_i^dag (0-based).
  [[nodiscard]] Vec cdag(int i) const;
};

/// Canonical space with B = [[0,1],[1,0]], G = B, Omega = [[1,1],[i,-i]]/sqrt(2).
[[nodiscard]] NambuSpace make_nambu(int n);

/// Direct sum of two copies of `base` (block-diagonal B, G, Omega).
[[nodiscard]] NambuSpace doubled(const NambuSpace& base);

/// Rebuild a space from its serialized fields (n, doublings).
[[nodiscard]] NambuSpace make_nambu(int n, int doublings);

/// gamma(v) = G conj(v).
[[nodiscard]] Vec apply_gamma(const NambuSpace& space, const Vec& v);

enum class Parity { real, imaginary };
enum class GeneratorKind { real, imaginary, neither, not_unitary };

[[nodiscard]] const char* to_string(Parity p) noexcept;
[[nodiscard]] const char* to_string(GeneratorKind k) noexcept;

/// Bracket-only classification: U^T B U = +B (real) or -B (imaginary).
[[nodiscard]] GeneratorKind classify_generator(const NambuSpace& space, const Mat& U,
                                               double tol = kAlgTol);

/// Unitary with square -1, tagged by its bracket parity.
struct Generator {
  Mat matrix;
  Parity parity = Parity::real;
};

/**
 * @brief Classify and validate a candidate generator.
 * @throws NumericError if U is not unitary, U^2 != -1, or U is neither real nor imaginary.
 */
[[nodiscard]] Generator make_generator(const NambuSpace& space, const Mat& U,
                                       double tol = kAlgTol);

/// Ordered list of anti-commuting generators on one space.
struct CliffordSet {
  NambuSpace space;
  std::vector<Generator> generators;

  [[nodiscard]] std::size_t size() const noexcept { return generators.size(); }
  /// (count_real, count_imaginary).
  [[nodiscard]] std::pair<int, int> signature() const noexcept;
};

/// One violated relation of J_l J_m + J_m J_l = -2 delta_lm.
struct CliffordViolation {
  int l = 0;
  int m = 0;
  double deviation = 0.0;
};

/// Empty iff all squares and pairwise anti-commutators hold to `tol`.
[[nodiscard]] std::vector<CliffordViolation> check_clifford(const CliffordSet& set,
                                                            double tol = kAlgTol);

}  // namespace psym
