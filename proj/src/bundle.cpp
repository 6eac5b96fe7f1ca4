// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "psym/bundle.hpp"

#include <iomanip>
#include <sstream>

namespace psym {

using nlohmann::json;

int MomentumGrid::index(int i, int j) const {
  if (d != 2 || i < 0 || i >= N || j < 0 || j >= M) throw InputError("MomentumGrid::index: out of range");
  return j * N + i;
}

int MomentumGrid::north() const {
  if (d != 2) throw InputError("MomentumGrid::north: d must be 2");
  return N * M;
}

int MomentumGrid::south() const {
  if (d != 2) throw InputError("MomentumGrid::south: d must be 2");
  return N * M + 1;
}

std::vector<int> MomentumGrid::self_antipodal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (antipode[static_cast<std::size_t>(i)] == i) out.push_back(i);
  }
  return out;
}

int MomentumGrid::origin() const {
  switch (d) {
    case 0: return 0;
    case 1: return N / 2;
    default:
      if (M % 2 == 0) throw InputError("MomentumGrid::origin: equator is not sampled (even M)");
      return index(N / 2, (M - 1) / 2);
  }
}

int MomentumGrid::antiorigin() const {
  switch (d) {
    case 0: return 1;
    case 1: return 0;
    default:
      if (M % 2 == 0) throw InputError("MomentumGrid::antiorigin: equator is not sampled (even M)");
      return index(0, (M - 1) / 2);
  }
}

std::vector<std::vector<int>> MomentumGrid::plaquettes() const {
  if (d != 2) throw InputError("MomentumGrid::plaquettes: d must be 2");
  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<std::size_t>(N * (M + 1)));
  for (int j = 0; j + 1 < M; ++j) {
    for (int i = 0; i < N; ++i) {
      const int ip = (i + 1) % N;
      cells.push_back({index(i, j), index(ip, j), index(ip, j + 1), index(i, j + 1)});
    }
  }
  for (int i = 0; i < N; ++i) {
    const int ip = (i + 1) % N;
    cells.push_back({index(i, M - 1), index(ip, M - 1), north()});
    cells.push_back({south(), index(ip, 0), index(i, 0)});
  }
  return cells;
}

MomentumGrid make_sphere_grid(int d, int N, int M) {
  MomentumGrid g;
  g.d = d;
  if (d == 0) {
    g.points = {{0.0, 0.0}, {kPi, 0.0}};
    g.antipode = {0, 1};
    return g;
  }
  if (d != 1 && d != 2) throw InputError("make_sphere_grid: d must be 0, 1 or 2");
  if (N < 4 || N % 2 != 0) throw InputError("make_sphere_grid: N must be even and >= 4");
  g.N = N;
  auto angle = [N](int i) { return -kPi + 2.0 * kPi * i / N; };
  if (d == 1) {
    for (int i = 0; i < N; ++i) {
      g.points.push_back({angle(i), 0.0});
      g.antipode.push_back((N - i) % N);
      g.adjacency.emplace_back(i, (i + 1) % N);
    }
    return g;
  }
  if (M < 1) throw InputError("make_sphere_grid: M must be >= 1");
  g.M = M;
  for (int j = 0; j < M; ++j) {
    const double t = -kPi / 2 + kPi * (j + 1) / (M + 1);
    for (int i = 0; i < N; ++i) {
      g.points.push_back({angle(i), t});
      g.antipode.push_back(((M - 1 - j) * N) + (N - i) % N);
    }
  }
  g.points.push_back({0.0, kPi / 2});
  g.points.push_back({0.0, -kPi / 2});
  g.antipode.push_back(N * M + 1);
  g.antipode.push_back(N * M);
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < N; ++i) {
      g.adjacency.emplace_back(j * N + i, j * N + (i + 1) % N);
      if (j + 1 < M) g.adjacency.emplace_back(j * N + i, (j + 1) * N + i);
    }
  }
  for (int i = 0; i < N; ++i) {
    g.adjacency.emplace_back((M - 1) * N + i, N * M);
    g.adjacency.emplace_back(i, N * M + 1);
  }
  return g;
}

SymmetryClass Bundle::symmetry_class() const {
  return {label, class_info(label).s, clifford};
}

ValidationReport validate_bundle(const Bundle& b, const ValidationOptions& opt) {
  ValidationReport r;
  const int npts = b.grid.size();
  if (static_cast<int>(b.fibers.size()) != npts) {
    throw InputError("validate_bundle: " + std::to_string(b.fibers.size()) + " fibers for " +
                     std::to_string(npts) + " grid points");
  }
  std::vector<bool> good(static_cast<std::size_t>(npts), true);
  for (int i = 0; i < npts; ++i) {
    const Plane& f = b.fibers[static_cast<std::size_t>(i)];
    if (!f.space().same_as(b.space()) || f.rank() != b.space().n) {
      r.rank.push_back({i, f.rank()});
      good[static_cast<std::size_t>(i)] = false;
    }
  }
  for (int i = 0; i < npts; ++i) {
    if (!good[static_cast<std::size_t>(i)]) continue;
    const Plane& f = b.fibers[static_cast<std::size_t>(i)];
    for (std::size_t l = 0; l < b.clifford.size(); ++l) {
      const double dev = pseudo_check(b.clifford.generators[l], f);
      if (dev >= opt.tol) r.pseudo.push_back({i, static_cast<int>(l), dev});
    }
    const int j = b.grid.antipode[static_cast<std::size_t>(i)];
    if (j < i || !good[static_cast<std::size_t>(j)]) continue;
    const double dev = fermi_check(f, b.fibers[static_cast<std::size_t>(j)]);
    if (dev >= opt.tol) r.fermi.push_back({i, j, dev});
  }
  for (const auto& [a, c] : b.grid.adjacency) {
    if (!good[static_cast<std::size_t>(a)] || !good[static_cast<std::size_t>(c)]) continue;
    const double dist =
        plane_distance(b.fibers[static_cast<std::size_t>(a)], b.fibers[static_cast<std::size_t>(c)]);
    if (dist >= opt.continuity) r.continuity.push_back({a, c, dist});
  }
  return r;
}

std::string format_report(const ValidationReport& r) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific;
  if (!r.rank.empty()) {
    os << "rank violations: " << r.rank.size() << "\n";
    for (const auto& v : r.rank) os << "  fiber " << v.index << ": rank " << v.rank << "\n";
  }
  os << "pseudo-symmetry violations: " << r.pseudo.size() << "\n";
  for (const auto& v : r.pseudo) {
    os << "  fiber " << v.index << ", generator " << v.generator << ": " << v.magnitude << "\n";
  }
  os << "fermi violations: " << r.fermi.size() << "\n";
  for (const auto& v : r.fermi) {
    os << "  fibers " << v.index << " <-> " << v.partner << ": " << v.magnitude << "\n";
  }
  os << "continuity violations: " << r.continuity.size() << "\n";
  for (const auto& v : r.continuity) {
    os << "  fibers " << v.a << " -- " << v.b << ": " << v.distance << "\n";
  }
  return os.str();
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  Mat m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array()) throw InputError(rpath + ": expected an array of [re, im] pairs");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError(rpath + ": ragged row, expected " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw InputError(rpath + "[" + std::to_string(c) + "]: expected [re, im]");
      }
      m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (rows == 0) m.resize(0, 0);
  return m;
}

namespace {

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + ": missing field '" + key + "'");
  return *it;
}

int int_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer()) throw InputError(path + "." + key + ": expected an integer");
  return v.get<int>();
}

}  // namespace

json serialize_bundle(const Bundle& b) {
  const auto [r, m] = b.clifford.signature();
  json doc;
  doc["version"] = 1;
  doc["class"] = {{"label", std::string(to_string(b.label))},
                  {"s", class_info(b.label).s},
                  {"signature", {r, m}}};
  doc["n"] = b.space().n;
  doc["space"] = {{"n", b.space().n}, {"doublings", b.space().doublings}};
  doc["grid"] = {{"d", b.grid.d}, {"N", b.grid.N}, {"M", b.grid.M}};
  json gens = json::array();
  for (const auto& g : b.clifford.generators) {
    gens.push_back({{"parity", to_string(g.parity)}, {"matrix", matrix_to_json(g.matrix)}});
  }
  doc["generators"] = std::move(gens);
  json fibers = json::array();
  for (const auto& f : b.fibers) fibers.push_back({{"rank", f.rank()}, {"frame", matrix_to_json(f.frame())}});
  doc["fibers"] = std::move(fibers);
  return doc;
}

Bundle deserialize_bundle(const json& doc) {
  const std::string root = "$";
  if (int_field(doc, "version", root) != 1) throw InputError("$.version: unsupported schema version");

  const json& cls = field(doc, "class", root);
  const json& label_j = field(cls, "label", "$.class");
  if (!label_j.is_string()) throw InputError("$.class.label: expected a string");
  Bundle b;
  b.label = parse_class_label(label_j.get<std::string>());
  if (int_field(cls, "s", "$.class") != class_info(b.label).s) {
    throw InputError("$.class.s: does not match label " + std::string(to_string(b.label)));
  }

  const int n = int_field(doc, "n", root);
  int doublings = 0;
  if (doc.contains("space")) {
    doublings = int_field(doc["space"], "doublings", "$.space");
    if (int_field(doc["space"], "n", "$.space") != n) throw InputError("$.space.n: disagrees with $.n");
  }
  const NambuSpace space = make_nambu(n, doublings);

  const json& grid = field(doc, "grid", root);
  b.grid = make_sphere_grid(int_field(grid, "d", "$.grid"), int_field(grid, "N", "$.grid"),
                            int_field(grid, "M", "$.grid"));

  b.clifford.space = space;
  if (doc.contains("generators")) {
    const json& gens = doc["generators"];
    if (!gens.is_array()) throw InputError("$.generators: expected an array");
    for (std::size_t l = 0; l < gens.size(); ++l) {
      const std::string path = "$.generators[" + std::to_string(l) + "]";
      const Mat u = matrix_from_json(field(gens[l], "matrix", path), path + ".matrix");
      if (u.rows() != space.dim() || u.cols() != space.dim()) {
        throw InputError(path + ".matrix: expected " + std::to_string(space.dim()) + "x" +
                         std::to_string(space.dim()));
      }
      Generator g;
      try {
        g = make_generator(space, u);
      } catch (const NumericError& e) {
        throw InputError(path + ": " + e.what());
      }
      const json& par = field(gens[l], "parity", path);
      if (!par.is_string() || par.get<std::string>() != to_string(g.parity)) {
        throw InputError(path + ".parity: does not match the matrix (" + to_string(g.parity) + ")");
      }
      b.clifford.generators.push_back(std::move(g));
    }
  }
  if (cls.contains("signature")) {
    const json& sig = cls["signature"];
    const auto [r, m] = b.clifford.signature();
    if (!sig.is_array() || sig.size() != 2 || sig[0] != r || sig[1] != m) {
      throw InputError("$.class.signature: does not match the generators");
    }
  }

  const json& fibers = field(doc, "fibers", root);
  if (!fibers.is_array()) throw InputError("$.fibers: expected an array");
  if (static_cast<int>(fibers.size()) != b.grid.size()) {
    throw InputError("$.fibers: expected " + std::to_string(b.grid.size()) + " fibers, got " +
                     std::to_string(fibers.size()));
  }
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const std::string path = "$.fibers[" + std::to_string(i) + "]";
    const int rank = int_field(fibers[i], "rank", path);
    if (rank != n) {
      throw InputError(path + ".rank: fiber " + std::to_string(i) + " has rank " +
                       std::to_string(rank) + ", expected n=" + std::to_string(n));
    }
    const Mat f = matrix_from_json(field(fibers[i], "frame", path), path + ".frame");
    if (f.rows() != space.dim() || f.cols() != rank) {
      throw InputError(path + ".frame: expected " + std::to_string(space.dim()) + "x" +
                       std::to_string(rank));
    }
    try {
      b.fibers.emplace_back(space, f);
    } catch (const NumericError& e) {
      throw InputError(path + ".frame: " + e.what());
    }
  }
  return b;
}

std::string diagnostics_csv(const Bundle& b) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "index,k,t,pseudo_max,fermi_max\n";
  for (int i = 0; i < b.grid.size(); ++i) {
    const Plane& f = b.fibers[static_cast<std::size_t>(i)];
    double pmax = 0.0;
    for (const auto& g : b.clifford.generators) pmax = std::max(pmax, pseudo_check(g, f));
    const int j = b.grid.antipode[static_cast<std::size_t>(i)];
    const double fmax = fermi_check(f, b.fibers[static_cast<std::size_t>(j)]);
    const auto& p = b.grid.points[static_cast<std::size_t>(i)];
    os << i << ',' << p.k << ',' << p.t << ',' << pmax << ',' << fmax << '\n';
  }
  return os.str();
}

}  // namespace psym
