// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file symmetry.hpp
 * @brief True symmetries (T, Q, C, spin), the Kitaev sequence of
 *        pseudo-symmetries, and (1,1) doubling.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psym/planes.hpp"

namespace psym {

/// v -> matrix * (conj ? conj(v) : v).
struct AntiUnitary {
  Mat matrix;
  bool conj = false;

  [[nodiscard]] Vec apply(const Vec& v) const;
};

/// (a o b)(v) = a(b(v)).
[[nodiscard]] AntiUnitary compose(const AntiUnitary& a, const AntiUnitary& b);

/// gamma as an anti-unitary operator.
[[nodiscard]] AntiUnitary gamma_op(const NambuSpace& space);

/// Linear part of an operator with an even number of conjugations.
[[nodiscard]] Mat linear_part(const AntiUnitary& op);

/**
 * @brief True-symmetry operators on a canonical space.
 *
 * Spinful band index is 2*orbital + spin. Spin generators use the
 * angular-momentum normalization S = sigma/2 on annihilators.
 */
struct TrueSymmetries {
  std::optional<AntiUnitary> T_minus;        ///< (i sigma_y on spin) * conj, T^2 = -1. Spinful only.
  AntiUnitary T_plus;                        ///< plain conjugation, T^2 = +1.
  Mat Q;                                     ///< diag(1_n, -1_n).
  std::optional<AntiUnitary> C;              ///< p/h band swap composed with c <-> c^dag and conj. Even n.
  std::optional<std::array<Mat, 3>> S;       ///< Spin rotation generators. Spinful only.
};

[[nodiscard]] TrueSymmetries true_symmetries(const NambuSpace& space, bool spinful);

enum class ClassLabel { D, DIII, AII, CII, C, CI, AI, BDI, A, AIII };

/// Row of the periodic-table summary.
struct ClassInfo {
  ClassLabel label;
  std::string_view name;
  int s;
  bool complex;
  std::string_view true_symmetries;
  std::string_view pseudo_symmetries;
};

[[nodiscard]] const std::array<ClassInfo, 10>& class_table() noexcept;
[[nodiscard]] const ClassInfo& class_info(ClassLabel label);
[[nodiscard]] std::string_view to_string(ClassLabel label);
/// Case-insensitive parse; throws InputError on unknown labels.
[[nodiscard]] ClassLabel parse_class_label(std::string_view text);
/// Class reached by one suspension: s -> s+1 (mod 8 real, mod 2 complex).
[[nodiscard]] ClassLabel next_class(ClassLabel label);

/// A class label together with the generator set that realizes it.
struct SymmetryClass {
  ClassLabel label = ClassLabel::D;
  int s = 0;
  CliffordSet realization;
};

/**
 * @brief Pseudo-symmetry generators of the Kitaev sequence.
 *
 * For s >= 4 the set lives on doubled(space) (spin embedding).
 * @throws InputError if n cannot host the class.
 */
[[nodiscard]] CliffordSet kitaev_generators(const NambuSpace& space, ClassLabel label);

/// BDI: {K1 = i gamma T}; AI: {K1, K2 = i Q K1}, both imaginary.
[[nodiscard]] CliffordSet imaginary_realization(const NambuSpace& space, ClassLabel label);

/// Block operators I = [[0,1],[-1,0]] and K = i diag(1,-1) on doubled(space).
[[nodiscard]] Mat doubling_I(const NambuSpace& space);
[[nodiscard]] Mat doubling_K(const NambuSpace& space);

/// {J~_1..J~_s, I, K} on doubled(set.space), J~ = [[0,J],[J,0]].
[[nodiscard]] CliffordSet double_one_one(const CliffordSet& set);

/// A~ = {(w + w', w - w') / sqrt 2 : w in A, w' in A^c}. Requires rank(A) = n.
[[nodiscard]] Plane lift_plane(const Plane& a);

/// Inverse of lift_plane: reads A from the symmetric part.
[[nodiscard]] Plane unlift_plane(const Plane& lifted);

/**
 * @brief Spin embedding on doubled(base).
 *
 * Returns {diag(iS'_l, -iS'_l) (l = 1..3), I, [[0,J],[J,0]] for J in inner}
 * with S'_l = 2 S_l so that each block squares to -1.
 * @throws InputError if some S_l fails to commute with some inner generator.
 */
[[nodiscard]] CliffordSet spin_embed(const NambuSpace& base, const std::array<Mat, 3>& S,
                                     const CliffordSet& inner);

}  // namespace psym
