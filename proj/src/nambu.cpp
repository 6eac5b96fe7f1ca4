// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "psym/nambu.hpp"

#include <cmath>

namespace psym {

namespace {

Mat block_diag(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

void require_dim(const NambuSpace& space, Eigen::Index rows, Eigen::Index cols,
                 const char* what) {
  if (rows != space.dim() || cols != space.dim()) {
    throw InputError(std::string(what) + ": expected " + std::to_string(space.dim()) + "x" +
                     std::to_string(space.dim()) + " matrix");
  }
}

}  // namespace

cplx NambuSpace::bracket(const Vec& v, const Vec& w) const {
  if (v.size() != dim() || w.size() != dim()) throw InputError("bracket: dimension mismatch");
  return (v.transpose() * B * w)(0, 0);
}

Vec NambuSpace::c(int i) const {
  if (i < 0 || i >= n) throw InputError("c: index out of range");
  const int n0 = n >> doublings;
  return Vec::Unit(dim(), (i / n0) * 2 * n0 + i % n0);
}

Vec NambuSpace::cdag(int i) const {
  if (i < 0 || i >= n) throw InputError("cdag: index out of range");
  const int n0 = n >> doublings;
  return Vec::Unit(dim(), (i / n0) * 2 * n0 + n0 + i % n0);
}

NambuSpace make_nambu(int n) {
  if (n < 1) throw InputError("make_nambu: n must be positive");
  NambuSpace s;
  s.n = n;
  const Mat id = Mat::Identity(n, n);
  s.B = Mat::Zero(2 * n, 2 * n);
  s.B.topRightCorner(n, n) = id;
  s.B.bottomLeftCorner(n, n) = id;
  s.G = s.B;
  const double r = 1.0 / std::sqrt(2.0);
  s.Omega.resize(2 * n, 2 * n);
  s.Omega << r * id, r * id, kI * r * id, -kI * r * id;
  return s;
}

NambuSpace doubled(const NambuSpace& base) {
  NambuSpace s;
  s.n = 2 * base.n;
  s.doublings = base.doublings + 1;
  s.B = block_diag(base.B, base.B);
  s.G = block_diag(base.G, base.G);
  s.Omega = block_diag(base.Omega, base.Omega);
  return s;
}

NambuSpace make_nambu(int n, int doublings) {
  if (doublings < 0) throw InputError("make_nambu: negative doubling count");
  if (n < 1 || n % (1 << doublings) != 0) {
    throw InputError("make_nambu: n=" + std::to_string(n) + " incompatible with " +
                     std::to_string(doublings) + " doublings");
  }
  NambuSpace s = make_nambu(n >> doublings);
  for (int k = 0; k < doublings; ++k) s = doubled(s);
  return s;
}

Vec apply_gamma(const NambuSpace& space, const Vec& v) {
  if (v.size() != space.dim()) throw InputError("apply_gamma: dimension mismatch");
  return space.G * v.conjugate();
}

const char* to_string(Parity p) noexcept { return p == Parity::real ? "real" : "imaginary"; }

const char* to_string(GeneratorKind k) noexcept {
  switch (k) {
    case GeneratorKind::real: return "real";
    case GeneratorKind::imaginary: return "imaginary";
    case GeneratorKind::neither: return "neither";
    case GeneratorKind::not_unitary: return "not_unitary";
  }
  return "?";
}

GeneratorKind classify_generator(const NambuSpace& space, const Mat& U, double tol) {
  require_dim(space, U.rows(), U.cols(), "classify_generator");
  const Mat id = Mat::Identity(space.dim(), space.dim());
  if (max_abs(U.adjoint() * U - id) > tol) return GeneratorKind::not_unitary;
  const Mat pulled = U.transpose() * space.B * U;
  if (max_abs(pulled - space.B) <= tol) return GeneratorKind::real;
  if (max_abs(pulled + space.B) <= tol) return GeneratorKind::imaginary;
  return GeneratorKind::neither;
}

Generator make_generator(const NambuSpace& space, const Mat& U, double tol) {
  const GeneratorKind kind = classify_generator(space, U, tol);
  if (kind == GeneratorKind::not_unitary) throw NumericError("generator is not unitary");
  if (kind == GeneratorKind::neither) {
    throw NumericError("generator neither preserves nor reverses the bracket");
  }
  const Mat id = Mat::Identity(space.dim(), space.dim());
  if (max_abs(U * U + id) > tol) throw NumericError("generator does not square to -1");
  return {U, kind == GeneratorKind::real ? Parity::real : Parity::imaginary};
}

std::pair<int, int> CliffordSet::signature() const noexcept {
  int r = 0;
  for (const auto& g : generators) r += g.parity == Parity::real ? 1 : 0;
  return {r, static_cast<int>(generators.size()) - r};
}

std::vector<CliffordViolation> check_clifford(const CliffordSet& set, double tol) {
  std::vector<CliffordViolation> out;
  const int dim = set.space.dim();
  const Mat id = Mat::Identity(dim, dim);
  const auto& gs = set.generators;
  for (std::size_t l = 0; l < gs.size(); ++l) {
    for (std::size_t m = l; m < gs.size(); ++m) {
      const Mat& a = gs[l].matrix;
      const Mat& b = gs[m].matrix;
      if (a.rows() != dim || b.rows() != dim) {
        throw InputError("check_clifford: generator dimension mismatch");
      }
      const Mat target = l == m ? Mat(-2.0 * id) : Mat::Zero(dim, dim);
      const double dev = max_abs(a * b + b * a - target);
      if (dev > tol) out.push_back({static_cast<int>(l), static_cast<int>(m), dev});
    }
  }
  return out;
}

}  // namespace psym
