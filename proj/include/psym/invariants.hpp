// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file invariants.hpp
 * @brief Pfaffians and topological indices of ground-state bundles.
 */

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "psym/bundle.hpp"

namespace psym {

enum class InvariantKind { parity_bit, z2_bit, winding_int, chern_int, component_index };

[[nodiscard]] const char* to_string(InvariantKind k) noexcept;

struct InvariantResult {
  InvariantKind kind = InvariantKind::parity_bit;
  long long value = 0;
  nlohmann::json diagnostics = nlohmann::json::object();
  /// Columns record,index,k,t,a,b; meaning of a and b depends on the record type.
  std::string csv;

  [[nodiscard]] nlohmann::json to_json() const;
};

/// Largest phase step accepted between neighbouring grid points.
inline constexpr double kMaxPhaseStep = 0.75 * kPi;

/**
 * @brief Pfaffian by skew tridiagonalization with partial pivoting.
 * @throws InputError if X is not square or not skew-symmetric to 1e-10.
 * Odd dimension returns 0 and prints a warning to std::clog.
 */
[[nodiscard]] cplx pfaffian(const Mat& X);

/// Majorana-basis matrix i conj(Omega) (2 Pi - 1) Omega^T; real antisymmetric orthogonal
/// for Lagrangian planes.
[[nodiscard]] Mat majorana_form(const Plane& a);

/**
 * @brief 0 if A lies in the component of span{c_1..c_n}, 1 otherwise.
 * @throws InputError unless rank(A) = n and A is Lagrangian to 1e-10.
 * @throws NumericError if the Majorana form is not real antisymmetric orthogonal.
 */
[[nodiscard]] int fermion_parity(const Plane& a);

/// parity(A_0) xor parity(A_pi) over S^0 or S^1.
[[nodiscard]] InvariantResult class_d_z2(const Bundle& b);

/// W_ab = (J1 e_a)^T B e_b.
[[nodiscard]] Mat omega_form(const NambuSpace& space, const Generator& J1);

/// Pf(F_k^T W F_k) per grid point in the stored frame gauge.
[[nodiscard]] std::vector<cplx> omega_pfaffians(const Bundle& b, const Generator& J1);

/**
 * @brief Parity of the number of antipodal pairs of zeros of Pf(omega_k) on S^2.
 *
 * Zeros are located by the gauge-corrected phase winding of Pf around each plaquette.
 * @throws NumericError if Pf vanishes at a grid point, a phase step is ambiguous,
 *         a plaquette winding is not quantized, or a zero has no antipodal partner.
 */
[[nodiscard]] InvariantResult kane_mele_z2(const Bundle& b, const Generator& J1);

/**
 * @brief Winding of det U(k) with Pi(k) = [[1, U], [U^dag, 1]] / 2 in the E_{+i}(K1) + E_{-i}(K1)
 *        splitting, +i block first.
 * @throws InputError if K1 is not a pseudo-symmetry of some fiber.
 * @throws NumericError if U is not unitary or the grid is too coarse.
 */
[[nodiscard]] InvariantResult chiral_winding(const Bundle& b, const Generator& K1);

/// Plaquette Chern number over S^2; residual below 0.05 required.
[[nodiscard]] InvariantResult chern_number(const Bundle& b);

/// Number of creation operators in a charge-conserving plane: trace(Pi (1 - Q) / 2).
/// @throws InputError unless Q A = A to 1e-10.
[[nodiscard]] InvariantResult component_index_ai(const Plane& a, const Mat& Q);

/**
 * @brief Pair amplitude g of a single-band fiber span{u c^dag + v c}: g = -u / v.
 *
 * The ground state reads exp(1/2 sum_k g_k c_k^dag c_{-k}^dag)|vac> when g is odd in k.
 * @throws InputError unless n = 1 and rank 1.
 * @throws NumericError if |v| < 1e-12 (fully occupied mode).
 */
[[nodiscard]] cplx bcs_coefficient(const Plane& a);

}  // namespace psym
