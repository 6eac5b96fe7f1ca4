// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "psym/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

namespace psym {

using nlohmann::json;

namespace {

constexpr double kPfZeroTol = 1e-8;
constexpr double kOverlapTol = 1e-8;
constexpr double kQuantTol = 0.05;

std::string csv_row(const char* record, int index, const GridPoint& p, double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << record << ',' << index << ',' << p.k << ',' << p.t << ',' << a << ',' << b << '\n';
  return os.str();
}

constexpr const char* kCsvHeader = "record,index,k,t,a,b\n";

void require_rank(const Bundle& b, const char* what) {
  for (int i = 0; i < b.grid.size(); ++i) {
    const Plane& f = b.fibers[static_cast<std::size_t>(i)];
    if (f.rank() != b.space().n) {
      throw InputError(std::string(what) + ": fiber " + std::to_string(i) + " has rank " +
                       std::to_string(f.rank()));
    }
  }
}

cplx link(const Plane& a, const Plane& b) { return (a.frame().adjoint() * b.frame()).determinant(); }

GridPoint centroid(const MomentumGrid& g, const std::vector<int>& cell) {
  // The first corner fixes the chart; k is unwrapped relative to it.
  const GridPoint& p0 = g.points[static_cast<std::size_t>(cell.front())];
  double k = 0.0;
  double t = 0.0;
  int interior = 0;
  for (int v : cell) {
    const GridPoint& p = g.points[static_cast<std::size_t>(v)];
    t += p.t;
    if (std::abs(std::abs(p.t) - kPi / 2) < 1e-15) continue;
    double dk = p.k - p0.k;
    if (dk > kPi) dk -= 2 * kPi;
    if (dk < -kPi) dk += 2 * kPi;
    k += p0.k + dk;
    ++interior;
  }
  return {interior > 0 ? k / interior : p0.k, t / static_cast<double>(cell.size())};
}

}  // namespace

const char* to_string(InvariantKind k) noexcept {
  switch (k) {
    case InvariantKind::parity_bit: return "parity_bit";
    case InvariantKind::z2_bit: return "z2_bit";
    case InvariantKind::winding_int: return "winding_int";
    case InvariantKind::chern_int: return "chern_int";
    case InvariantKind::component_index: return "component_index";
  }
  return "unknown";
}

json InvariantResult::to_json() const {
  return {{"kind", to_string(kind)}, {"value", value}, {"diagnostics", diagnostics}};
}

cplx pfaffian(const Mat& X) {
  if (X.rows() != X.cols()) throw InputError("pfaffian: matrix is not square");
  const Eigen::Index n = X.rows();
  if (n > 0 && max_abs(X + X.transpose()) >= kAlgTol) {
    throw InputError("pfaffian: matrix is not skew-symmetric");
  }
  if (n % 2 == 1) {
    std::clog << "warning: pfaffian of odd dimension " << n << " is 0\n";
    return {0.0, 0.0};
  }
  Mat a = X;
  cplx pf(1.0, 0.0);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = 0;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == cplx(0.0, 0.0)) return {0.0, 0.0};
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index m = n - k - 2;
      const Vec tau = a.row(k).tail(m).transpose() / a(k, k + 1);
      const Vec col = a.col(k + 1).tail(m);
      a.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

Mat majorana_form(const Plane& a) {
  const NambuSpace& s = a.space();
  const Mat id = Mat::Identity(s.dim(), s.dim());
  return kI * s.Omega.conjugate() * (2.0 * a.projector() - id) * s.Omega.transpose();
}

int fermion_parity(const Plane& a) {
  const NambuSpace& s = a.space();
  if (a.rank() != s.n) throw InputError("fermion_parity: rank must equal n");
  const double lag = fermi_check(a, a);
  if (lag >= kAlgTol) {
    throw InputError("fermion_parity: plane is not Lagrangian (deviation " + std::to_string(lag) + ")");
  }
  const Mat x = majorana_form(a);
  const Mat id = Mat::Identity(s.dim(), s.dim());
  const double imag = x.imag().cwiseAbs().maxCoeff();
  const double skew = max_abs(x + x.transpose());
  const double orth = max_abs(x * x.adjoint() - id);
  if (imag > 1e-9 || skew > 1e-9 || orth > 1e-9) {
    throw NumericError("fermion_parity: Majorana form is not real antisymmetric orthogonal");
  }
  Mat vac(s.dim(), s.n);
  for (int i = 0; i < s.n; ++i) vac.col(i) = s.c(i);
  const double ref = pfaffian(majorana_form(plane_from_vectors(s, vac))).real();
  const double pf = pfaffian(Mat(x.real().cast<cplx>())).real();
  return (pf > 0) == (ref > 0) ? 0 : 1;
}

InvariantResult class_d_z2(const Bundle& b) {
  if (b.grid.d > 1) throw InputError("class_d_z2: bundle must live over S^0 or S^1");
  const int i0 = b.grid.origin();
  const int ipi = b.grid.antiorigin();
  int p0 = 0;
  int ppi = 0;
  try {
    p0 = fermion_parity(b.fibers[static_cast<std::size_t>(i0)]);
    ppi = fermion_parity(b.fibers[static_cast<std::size_t>(ipi)]);
  } catch (const InputError& e) {
    throw InputError(std::string("class_d_z2: ") + e.what());
  }
  InvariantResult r;
  r.kind = InvariantKind::z2_bit;
  r.value = p0 ^ ppi;
  r.diagnostics = {{"parity_k0", p0}, {"parity_kpi", ppi}, {"index_k0", i0}, {"index_kpi", ipi}};
  r.csv = kCsvHeader;
  r.csv += csv_row("parity", i0, b.grid.points[static_cast<std::size_t>(i0)], p0, 0);
  r.csv += csv_row("parity", ipi, b.grid.points[static_cast<std::size_t>(ipi)], ppi, 0);
  return r;
}

Mat omega_form(const NambuSpace& space, const Generator& J1) {
  if (J1.parity != Parity::real) throw InputError("omega_form: J1 must be real");
  return J1.matrix.transpose() * space.B;
}

std::vector<cplx> omega_pfaffians(const Bundle& b, const Generator& J1) {
  require_rank(b, "omega_pfaffians");
  const Mat w = omega_form(b.space(), J1);
  if (max_abs(w + w.transpose()) >= kAlgTol) throw NumericError("omega_pfaffians: omega is not skew");
  std::vector<cplx> out;
  out.reserve(b.fibers.size());
  for (const auto& f : b.fibers) {
    Mat wk = f.frame().transpose() * w * f.frame();
    wk = 0.5 * (wk - wk.transpose()).eval();
    out.push_back(pfaffian(wk));
  }
  return out;
}

InvariantResult kane_mele_z2(const Bundle& b, const Generator& J1) {
  if (b.grid.d != 2) throw InputError("kane_mele_z2: bundle must live over S^2");
  const MomentumGrid& g = b.grid;
  const std::vector<cplx> pf = omega_pfaffians(b, J1);

  InvariantResult r;
  r.kind = InvariantKind::z2_bit;
  r.csv = kCsvHeader;
  for (int i = 0; i < g.size(); ++i) {
    const auto& p = g.points[static_cast<std::size_t>(i)];
    r.csv += csv_row("point", i, p, std::abs(pf[static_cast<std::size_t>(i)]),
                     std::arg(pf[static_cast<std::size_t>(i)]));
    if (std::abs(pf[static_cast<std::size_t>(i)]) < kPfZeroTol) {
      std::ostringstream os;
      os << "kane_mele_z2: Pf(omega_k) vanishes at grid point " << i << " (k=" << p.k << ", t=" << p.t
         << "); retry with a jittered resolution";
      throw NumericError(os.str());
    }
  }

  const auto cells = g.plaquettes();
  std::map<std::vector<int>, int> cell_of;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto key = cells[c];
    std::sort(key.begin(), key.end());
    cell_of[key] = static_cast<int>(c);
  }

  std::vector<int> vort(cells.size(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    double total = 0.0;
    for (std::size_t e = 0; e < cell.size(); ++e) {
      const auto a = static_cast<std::size_t>(cell[e]);
      const auto bb = static_cast<std::size_t>(cell[(e + 1) % cell.size()]);
      const cplx l = link(b.fibers[a], b.fibers[bb]);
      if (std::abs(l) < kOverlapTol) throw NumericError("kane_mele_z2: singular overlap; refine the grid");
      const double step = std::arg(pf[bb] / (pf[a] * l / std::abs(l)));
      if (std::abs(step) > kMaxPhaseStep) {
        std::ostringstream os;
        const auto& p = g.points[a];
        os << "kane_mele_z2: ambiguous Pfaffian phase step " << step << " between grid points "
           << a << " and " << bb << " (k=" << p.k << ", t=" << p.t << ")";
        throw NumericError(os.str());
      }
      total += step;
    }
    const double w = total / (2 * kPi);
    const double rounded = std::round(w);
    if (std::abs(w - rounded) > kQuantTol) {
      throw NumericError("kane_mele_z2: non-quantized winding " + std::to_string(w) + " in plaquette " +
                         std::to_string(c));
    }
    vort[c] = static_cast<int>(rounded);
    const GridPoint ctr = centroid(g, cell);
    r.csv += csv_row("plaquette", static_cast<int>(c), ctr, w, 0);
  }

  json zeros = json::array();
  int count = 0;
  int total_vorticity = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (vort[c] == 0) continue;
    std::vector<int> image;
    for (int v : cells[c]) image.push_back(g.antipode[static_cast<std::size_t>(v)]);
    std::sort(image.begin(), image.end());
    const auto it = cell_of.find(image);
    if (it == cell_of.end() || vort[static_cast<std::size_t>(it->second)] == 0) {
      throw NumericError("kane_mele_z2: zero in plaquette " + std::to_string(c) +
                         " has no antipodal partner");
    }
    const GridPoint ctr = centroid(g, cells[c]);
    double inversion = 1.0;
    for (int v : cells[c]) {
      const Plane& fk = b.fibers[static_cast<std::size_t>(v)];
      const Plane& fm = b.fibers[static_cast<std::size_t>(g.antipode[static_cast<std::size_t>(v)])];
      inversion = std::min(inversion, plane_distance(complement(fk), fm));
    }
    zeros.push_back({{"plaquette", c},
                     {"partner", it->second},
                     {"k", ctr.k},
                     {"t", ctr.t},
                     {"vorticity", vort[c]},
                     {"band_inversion_distance", inversion}});
    total_vorticity += vort[c];
    ++count;
  }
  double min_abs = kPi;
  for (const auto& v : pf) min_abs = std::min(min_abs, std::abs(v));
  r.value = (count / 2) % 2;
  r.diagnostics = {{"zeros", zeros},
                   {"pairs", count / 2},
                   {"total_vorticity", total_vorticity},
                   {"min_abs_pfaffian", min_abs}};
  return r;
}

InvariantResult chiral_winding(const Bundle& b, const Generator& K1) {
  if (b.grid.d != 1) throw InputError("chiral_winding: bundle must live over S^1");
  if (K1.parity != Parity::imaginary) throw InputError("chiral_winding: K1 must be imaginary");
  require_rank(b, "chiral_winding");
  const NambuSpace& s = b.space();
  const Mat id = Mat::Identity(s.dim(), s.dim());
  const Mat pplus = 0.5 * (id - kI * K1.matrix);
  const Plane ep = plane_from_projector(s, pplus);
  const Plane em = plane_from_projector(s, id - pplus);
  if (ep.rank() != s.n || em.rank() != s.n) throw NumericError("chiral_winding: unbalanced eigenspaces of K1");

  InvariantResult r;
  r.kind = InvariantKind::winding_int;
  r.csv = kCsvHeader;
  const int N = b.grid.size();
  std::vector<cplx> dets(static_cast<std::size_t>(N));
  double worst = 0.0;
  for (int i = 0; i < N; ++i) {
    const Plane& f = b.fibers[static_cast<std::size_t>(i)];
    const double dev = pseudo_check(K1, f);
    if (dev >= kAlgTol) {
      throw InputError("chiral_winding: K1 is not a pseudo-symmetry of fiber " + std::to_string(i));
    }
    const Mat u = 2.0 * ep.frame().adjoint() * f.projector() * em.frame();
    worst = std::max(worst, max_abs(u * u.adjoint() - Mat::Identity(s.n, s.n)));
    dets[static_cast<std::size_t>(i)] = u.determinant();
  }
  if (worst > 1e-8) throw NumericError("chiral_winding: U(k) is not unitary (deviation " + std::to_string(worst) + ")");
  double total = 0.0;
  double max_step = 0.0;
  for (int i = 0; i < N; ++i) {
    const cplx a = dets[static_cast<std::size_t>(i)];
    const cplx c = dets[static_cast<std::size_t>((i + 1) % N)];
    const double step = std::arg(c / a);
    if (std::abs(step) > kMaxPhaseStep) {
      throw NumericError("chiral_winding: phase step " + std::to_string(step) + " after grid point " +
                         std::to_string(i) + "; refine the grid");
    }
    max_step = std::max(max_step, std::abs(step));
    total += step;
    r.csv += csv_row("point", i, b.grid.points[static_cast<std::size_t>(i)], std::abs(a), std::arg(a));
  }
  r.value = std::llround(total / (2 * kPi));
  r.diagnostics = {{"phase_total", total}, {"max_phase_step", max_step}, {"unitarity_deviation", worst}};
  return r;
}

InvariantResult chern_number(const Bundle& b) {
  if (b.grid.d != 2) throw InputError("chern_number: bundle must live over S^2");
  require_rank(b, "chern_number");
  const MomentumGrid& g = b.grid;
  InvariantResult r;
  r.kind = InvariantKind::chern_int;
  r.csv = kCsvHeader;
  double total = 0.0;
  double max_flux = 0.0;
  const auto cells = g.plaquettes();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    cplx prod(1.0, 0.0);
    for (std::size_t e = 0; e < cell.size(); ++e) {
      const cplx l = link(b.fibers[static_cast<std::size_t>(cell[e])],
                          b.fibers[static_cast<std::size_t>(cell[(e + 1) % cell.size()])]);
      if (std::abs(l) < kOverlapTol) {
        throw NumericError("chern_number: singular overlap in plaquette " + std::to_string(c) +
                           "; refine the grid");
      }
      prod *= l / std::abs(l);
    }
    const double flux = std::arg(prod);
    max_flux = std::max(max_flux, std::abs(flux));
    total += flux;
    r.csv += csv_row("plaquette", static_cast<int>(c), centroid(g, cell), flux, 0);
  }
  const double ch = total / (2 * kPi);
  const double residual = std::abs(ch - std::round(ch));
  if (residual >= kQuantTol) {
    throw NumericError("chern_number: residual " + std::to_string(residual) + " exceeds 0.05");
  }
  r.value = std::llround(ch);
  r.diagnostics = {{"raw", ch}, {"residual", residual}, {"max_flux", max_flux}};
  return r;
}

InvariantResult component_index_ai(const Plane& a, const Mat& Q) {
  const NambuSpace& s = a.space();
  if (Q.rows() != s.dim() || Q.cols() != s.dim()) throw InputError("component_index_ai: Q dimension");
  const Mat& p = a.projector();
  const double dev = max_abs(Q * p * Q.adjoint() - p);
  if (dev >= kAlgTol) {
    throw InputError("component_index_ai: plane is not charge conserving (deviation " +
                     std::to_string(dev) + ")");
  }
  const Mat id = Mat::Identity(s.dim(), s.dim());
  const double count = (p * (id - Q) * 0.5).trace().real();
  InvariantResult r;
  r.kind = InvariantKind::component_index;
  r.value = std::llround(count);
  if (std::abs(count - static_cast<double>(r.value)) > 1e-8) {
    throw NumericError("component_index_ai: non-integer creator count");
  }
  r.diagnostics = {{"n", s.n}, {"n_minus", a.rank() - r.value}};
  return r;
}

cplx bcs_coefficient(const Plane& a) {
  const NambuSpace& s = a.space();
  if (s.n != 1 || s.doublings != 0 || a.rank() != 1) {
    throw InputError("bcs_coefficient: needs a rank-1 plane in the n = 1 Nambu space");
  }
  const cplx v = a.frame()(0, 0);
  const cplx u = a.frame()(1, 0);
  if (std::abs(v) < 1e-12) throw NumericError("bcs_coefficient: no annihilator component");
  return -u / v;
}

}  // namespace psym
