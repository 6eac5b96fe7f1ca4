// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "psym/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace psym {

namespace {

Mat kron(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

Mat block_diag2(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Mat off_diag2(const Mat& a) {
  const Eigen::Index d = a.rows();
  Mat out = Mat::Zero(2 * d, 2 * d);
  out.topRightCorner(d, d) = a;
  out.bottomLeftCorner(d, d) = a;
  return out;
}

Mat pauli(int l) {
  Mat p(2, 2);
  switch (l) {
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -kI, kI, 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

void require_canonical(const NambuSpace& space, const char* what) {
  if (space.doublings != 0) {
    throw InputError(std::string(what) + ": requires a canonical (undoubled) space");
  }
}

void require_bands(const NambuSpace& space, int multiple, std::string_view cls) {
  if (space.n % multiple != 0) {
    throw InputError("class " + std::string(cls) + " needs n divisible by " +
                     std::to_string(multiple) + ", got n=" + std::to_string(space.n));
  }
}

Generator to_generator(const NambuSpace& space, const Mat& m) { return make_generator(space, m); }

// J1 = gamma T_minus.
Mat j1_matrix(const NambuSpace& space) {
  const auto ts = true_symmetries(space, true);
  return linear_part(compose(gamma_op(space), *ts.T_minus));
}

// J2 = i Q J1.
Mat j2_matrix(const NambuSpace& space) {
  return kI * true_symmetries(space, false).Q * j1_matrix(space);
}

// J3 = i gamma C Q.
Mat j3_matrix(const NambuSpace& space) {
  const auto ts = true_symmetries(space, true);
  return kI * linear_part(compose(gamma_op(space), *ts.C)) * ts.Q;
}

constexpr std::array<ClassInfo, 10> kTable{{
    {ClassLabel::D, "D", 0, false, "none", "Fermi constraint"},
    {ClassLabel::DIII, "DIII", 1, false, "T (time reversal)", "J1 = gamma T"},
    {ClassLabel::AII, "AII", 2, false, "T, Q (charge)", "J2 = i gamma T Q"},
    {ClassLabel::CII, "CII", 3, false, "T, Q, C (ph-conj.)", "J3 = i gamma C Q"},
    {ClassLabel::C, "C", 4, false, "S1, S2, S3 (spin rot.)", "see text"},
    {ClassLabel::CI, "CI", 5, false, "S1, S2, S3, T", ""},
    {ClassLabel::AI, "AI", 6, false, "S1, S2, S3, T, Q", ""},
    {ClassLabel::BDI, "BDI", 7, false, "S1, S2, S3, T, Q, C", ""},
    {ClassLabel::A, "A", 0, true, "Q", "none"},
    {ClassLabel::AIII, "AIII", 1, true, "Q, C", "J1 = i gamma C"},
}};

}  // namespace

Vec AntiUnitary::apply(const Vec& v) const {
  if (v.size() != matrix.cols()) throw InputError("AntiUnitary::apply: dimension mismatch");
  return conj ? Vec(matrix * v.conjugate()) : Vec(matrix * v);
}

AntiUnitary compose(const AntiUnitary& a, const AntiUnitary& b) {
  if (a.matrix.cols() != b.matrix.rows()) throw InputError("compose: dimension mismatch");
  const Mat inner = a.conj ? Mat(b.matrix.conjugate()) : b.matrix;
  return {a.matrix * inner, a.conj != b.conj};
}

AntiUnitary gamma_op(const NambuSpace& space) { return {space.G, true}; }

Mat linear_part(const AntiUnitary& op) {
  if (op.conj) throw InputError("linear_part: operator is anti-linear");
  return op.matrix;
}

TrueSymmetries true_symmetries(const NambuSpace& space, bool spinful) {
  require_canonical(space, "true_symmetries");
  const int n = space.n;
  if (spinful && n % 2 != 0) throw InputError("true_symmetries: spinful space needs even n");
  TrueSymmetries ts;
  const Mat id_n = Mat::Identity(n, n);
  ts.T_plus = {Mat::Identity(2 * n, 2 * n), true};
  ts.Q = block_diag2(id_n, -id_n);
  if (n % 2 == 0) {
    // Swap the first and second half of the bands, and c with c^dag.
    Mat swap_half = kron(pauli(1), Mat::Identity(n / 2, n / 2));
    ts.C = AntiUnitary{kron(pauli(1), swap_half), true};
  }
  if (spinful) {
    Mat isy(2, 2);
    isy << 0, 1, -1, 0;
    const Mat w = kron(Mat::Identity(n / 2, n / 2), isy);
    ts.T_minus = AntiUnitary{block_diag2(w, w), true};
    std::array<Mat, 3> s;
    for (int l = 0; l < 3; ++l) {
      const Mat half = kron(Mat::Identity(n / 2, n / 2), 0.5 * pauli(l + 1));
      s[static_cast<std::size_t>(l)] = block_diag2(half, -half.conjugate());
    }
    ts.S = s;
  }
  return ts;
}

const std::array<ClassInfo, 10>& class_table() noexcept { return kTable; }

const ClassInfo& class_info(ClassLabel label) {
  for (const auto& row : kTable) {
    if (row.label == label) return row;
  }
  throw InputError("class_info: unknown label");
}

std::string_view to_string(ClassLabel label) { return class_info(label).name; }

ClassLabel parse_class_label(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (const auto& row : kTable) {
    if (row.name == up) return row.label;
  }
  throw InputError("unknown class label '" + std::string(text) + "'");
}

ClassLabel next_class(ClassLabel label) {
  const ClassInfo& info = class_info(label);
  const int period = info.complex ? 2 : 8;
  const int s = (info.s + 1) % period;
  for (const auto& row : kTable) {
    if (row.complex == info.complex && row.s == s) return row.label;
  }
  throw InputError("next_class: table incomplete");
}

CliffordSet kitaev_generators(const NambuSpace& space, ClassLabel label) {
  require_canonical(space, "kitaev_generators");
  CliffordSet set{space, {}};
  const auto name = to_string(label);
  switch (label) {
    case ClassLabel::D:
    case ClassLabel::A:
      return set;
    case ClassLabel::DIII:
      require_bands(space, 2, name);
      set.generators = {to_generator(space, j1_matrix(space))};
      return set;
    case ClassLabel::AII:
      require_bands(space, 2, name);
      set.generators = {to_generator(space, j1_matrix(space)),
                        to_generator(space, j2_matrix(space))};
      return set;
    case ClassLabel::CII:
      // The p/h band swap must commute with spin, so n is a multiple of 4.
      require_bands(space, 4, name);
      set.generators = {to_generator(space, j1_matrix(space)),
                        to_generator(space, j2_matrix(space)),
                        to_generator(space, j3_matrix(space))};
      return set;
    case ClassLabel::C:
    case ClassLabel::CI:
    case ClassLabel::AI:
    case ClassLabel::BDI: {
      // BDI embeds CII, which needs a multiple of 4.
      require_bands(space, label == ClassLabel::BDI ? 4 : 2, name);
      const ClassLabel inner_label = std::array{ClassLabel::D, ClassLabel::DIII, ClassLabel::AII,
                                                ClassLabel::CII}[static_cast<std::size_t>(
          class_info(label).s - 4)];
      const CliffordSet inner = kitaev_generators(space, inner_label);
      return spin_embed(space, *true_symmetries(space, true).S, inner);
    }
    case ClassLabel::AIII: {
      require_bands(space, 2, name);
      const auto ts = true_symmetries(space, false);
      set.generators = {to_generator(space, kI * linear_part(compose(gamma_op(space), *ts.C)))};
      return set;
    }
  }
  throw InputError("kitaev_generators: unknown label");
}

CliffordSet imaginary_realization(const NambuSpace& space, ClassLabel label) {
  require_canonical(space, "imaginary_realization");
  const auto ts = true_symmetries(space, false);
  CliffordSet set{space, {}};
  if (label == ClassLabel::BDI) {
    set.generators = {to_generator(space, kI * linear_part(compose(gamma_op(space), ts.T_plus)))};
    return set;
  }
  if (label == ClassLabel::AI) {
    // Time reversal dressed by the charge phase i^Q, so that K2 = -i B.
    const AntiUnitary t_rot{kI * ts.Q, true};
    const Mat k1 = kI * linear_part(compose(gamma_op(space), t_rot));
    const Mat k2 = kI * ts.Q * k1;
    set.generators = {to_generator(space, k1), to_generator(space, k2)};
    return set;
  }
  throw InputError("imaginary_realization: only BDI and AI are supported");
}

Mat doubling_I(const NambuSpace& space) {
  const int d = space.dim();
  Mat out = Mat::Zero(2 * d, 2 * d);
  out.topRightCorner(d, d) = Mat::Identity(d, d);
  out.bottomLeftCorner(d, d) = -Mat::Identity(d, d);
  return out;
}

Mat doubling_K(const NambuSpace& space) {
  const int d = space.dim();
  return kI * block_diag2(Mat::Identity(d, d), -Mat::Identity(d, d));
}

CliffordSet double_one_one(const CliffordSet& set) {
  const NambuSpace big = doubled(set.space);
  CliffordSet out{big, {}};
  for (const auto& g : set.generators) out.generators.push_back(to_generator(big, off_diag2(g.matrix)));
  out.generators.push_back(to_generator(big, doubling_I(set.space)));
  out.generators.push_back(to_generator(big, doubling_K(set.space)));
  return out;
}

Plane lift_plane(const Plane& a) {
  const NambuSpace& space = a.space();
  if (a.rank() != space.n) throw InputError("lift_plane: rank must equal n");
  const Plane ac = complement(a);
  const int d = space.dim();
  const double r = 1.0 / std::sqrt(2.0);
  Mat f(2 * d, d);
  f.topLeftCorner(d, space.n) = r * a.frame();
  f.bottomLeftCorner(d, space.n) = r * a.frame();
  f.topRightCorner(d, space.n) = r * ac.frame();
  f.bottomRightCorner(d, space.n) = -r * ac.frame();
  return Plane(doubled(space), f);
}

Plane unlift_plane(const Plane& lifted) {
  const NambuSpace& big = lifted.space();
  if (big.doublings < 1) throw InputError("unlift_plane: plane is not in a doubled space");
  if (lifted.rank() != big.n) throw InputError("unlift_plane: rank must equal n");
  const NambuSpace base = make_nambu(big.n / 2, big.doublings - 1);
  const int d = base.dim();
  const Mat sym = 0.5 * (lifted.frame().topRows(d) + lifted.frame().bottomRows(d));
  return plane_from_span(base, sym, base.n);
}

CliffordSet spin_embed(const NambuSpace& base, const std::array<Mat, 3>& S,
                       const CliffordSet& inner) {
  if (!inner.space.same_as(base)) throw InputError("spin_embed: inner set lives on another space");
  const int d = base.dim();
  std::array<Mat, 3> pauli_norm;
  for (std::size_t l = 0; l < 3; ++l) {
    if (S[l].rows() != d || S[l].cols() != d) throw InputError("spin_embed: spin generator dimension");
    pauli_norm[l] = 2.0 * S[l];
    for (std::size_t m = 0; m < inner.size(); ++m) {
      const Mat& j = inner.generators[m].matrix;
      const double dev = max_abs(pauli_norm[l] * j - j * pauli_norm[l]);
      if (dev > kAlgTol) {
        throw InputError("spin_embed: S" + std::to_string(l + 1) + " does not commute with J" +
                         std::to_string(m + 5) + " (deviation " + std::to_string(dev) + ")");
      }
    }
  }
  const NambuSpace big = doubled(base);
  CliffordSet out{big, {}};
  for (std::size_t l = 0; l < 3; ++l) {
    out.generators.push_back(to_generator(big, block_diag2(kI * pauli_norm[l], -kI * pauli_norm[l])));
  }
  out.generators.push_back(to_generator(big, doubling_I(base)));
  for (const auto& g : inner.generators) out.generators.push_back(to_generator(big, off_diag2(g.matrix)));
  return out;
}

}  // namespace psym
