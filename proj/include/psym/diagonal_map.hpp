// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file diagonal_map.hpp
 * @brief Suspension of ground-state bundles along the diagonal (d, s) -> (d+1, s+1),
 *        and the worked examples built from it.
 */

#pragma once

#include <optional>

#include "psym/bundle.hpp"

namespace psym {

/**
 * @brief exp((t/2) K J(A)) in closed form cos(t/2) + sin(t/2) K J(A).
 * @throws InputError if K is not a pseudo-symmetry of A.
 * @throws NumericError if (K J(A))^2 != -1.
 */
[[nodiscard]] Mat rotor(const Generator& K, const Plane& a, double t);

struct SuspensionInput {
  Bundle bundle;
  int k_index = 0;                 ///< Imaginary generator consumed by the suspension.
  std::optional<int> i_index;      ///< Real generator moved to the end of the output set.
};

struct SuspendOptions {
  int N = 64;  ///< Circle resolution when d = 0.
  int M = 33;  ///< Latitude count when d = 1; must be odd.
};

/**
 * @brief A_{k,t} = rotor(K, A_k, t) A_k.
 *
 * d = 0: the point k = 0 covers |theta| <= pi/2 with t = theta; the point pi covers the
 * other half with t = +-pi - theta. d = 1: t is the polar angle and the equator is the input.
 * @throws InputError naming the fiber for every precondition failure.
 */
[[nodiscard]] Bundle suspend(const SuspensionInput& in, const SuspendOptions& opt = {});

/// Eigenplane of K for eigenvalue lambda = +-i.
[[nodiscard]] Plane eigenplane(const NambuSpace& space, const Mat& K, cplx lambda);

/// Class D circle bundle from span{c^dag} at k = 0 and span{c} at k = pi (or span{c} at both).
[[nodiscard]] Bundle example_majorana(bool occupied_at_zero = true, int N = 64);

/// Class DIII sphere bundle from the (1,1)-doubled Majorana chain, n = 2, generator J1 = I.
[[nodiscard]] Bundle example_dIII(int N = 64, int M = 33);

/// Class BDI circle bundle from class AI data with n_plus occupied bands at k = 0.
/// @throws InputError unless 0 <= n_plus <= n.
[[nodiscard]] Bundle example_kitaev_chain(int n, int n_plus, int N = 64);

}  // namespace psym
