// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bundle.hpp
 * @brief Discretized momentum spheres and bundles of planes over them.
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "psym/symmetry.hpp"

namespace psym {

/// d=1: k is the circle angle. d=2: k is the equator angle, t the polar angle.
struct GridPoint {
  double k = 0.0;
  double t = 0.0;
};

/**
 * @brief Sampled S^d with the involution k -> -k.
 *
 * d=2 layout: interior point (i, j) at index j*N + i with k_i = -pi + 2 pi i / N
 * and t_j = -pi/2 + pi (j+1)/(M+1); then the north pole (t = pi/2) and the
 * south pole (t = -pi/2).
 */
struct MomentumGrid {
  int d = 0;
  int N = 0;
  int M = 0;
  std::vector<GridPoint> points;
  std::vector<int> antipode;
  std::vector<std::pair<int, int>> adjacency;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(points.size()); }
  [[nodiscard]] int index(int i, int j) const;  ///< d=2 interior point.
  [[nodiscard]] int north() const;              ///< d=2 only.
  [[nodiscard]] int south() const;              ///< d=2 only.
  /// Indices with antipode(i) == i.
  [[nodiscard]] std::vector<int> self_antipodal() const;
  /// Index of the point at angle 0 (d <= 1), or the equator point k = 0 (d = 2).
  [[nodiscard]] int origin() const;
  /// Index of the point at angle pi (d <= 1), or the equator point k = pi (d = 2).
  [[nodiscard]] int antiorigin() const;
  /// Counter-clockwise cells in the (k, t) chart, d=2 only.
  [[nodiscard]] std::vector<std::vector<int>> plaquettes() const;
};

/// @throws InputError on odd N, N < 4, or M < 1 (where used).
[[nodiscard]] MomentumGrid make_sphere_grid(int d, int N = 0, int M = 0);

/// Fibers over a grid, one plane of rank n per point.
struct Bundle {
  MomentumGrid grid;
  ClassLabel label = ClassLabel::D;
  CliffordSet clifford;
  std::vector<Plane> fibers;

  [[nodiscard]] const NambuSpace& space() const noexcept { return clifford.space; }
  [[nodiscard]] SymmetryClass symmetry_class() const;
};

struct PseudoViolation {
  int index;
  int generator;
  double magnitude;
};
struct FermiViolation {
  int index;
  int partner;
  double magnitude;
};
struct ContinuityViolation {
  int a;
  int b;
  double distance;
};
struct RankViolation {
  int index;
  int rank;
};

struct ValidationReport {
  std::vector<RankViolation> rank;
  std::vector<PseudoViolation> pseudo;
  std::vector<FermiViolation> fermi;
  std::vector<ContinuityViolation> continuity;

  [[nodiscard]] bool ok() const noexcept {
    return rank.empty() && pseudo.empty() && fermi.empty() && continuity.empty();
  }
};

struct ValidationOptions {
  double tol = kAlgTol;
  double continuity = 0.5;
};

[[nodiscard]] ValidationReport validate_bundle(const Bundle& b, const ValidationOptions& opt = {});

/// Human-readable three-part report.
[[nodiscard]] std::string format_report(const ValidationReport& r);

/// Row-major [[ [re, im], ... ], ...].
[[nodiscard]] nlohmann::json matrix_to_json(const Mat& m);
/// @throws InputError naming `path` on malformed input.
[[nodiscard]] Mat matrix_from_json(const nlohmann::json& j, const std::string& path);

[[nodiscard]] nlohmann::json serialize_bundle(const Bundle& b);
/// @throws InputError with a JSON path on schema or dimension errors.
[[nodiscard]] Bundle deserialize_bundle(const nlohmann::json& doc);

/// CSV columns: index,k,t,pseudo_max,fermi_max.
[[nodiscard]] std::string diagnostics_csv(const Bundle& b);

}  // namespace psym
