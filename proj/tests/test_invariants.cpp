// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "psym/cli.hpp"
#include "psym/invariants.hpp"

using namespace psym;

namespace {

Bundle constant_sphere_bundle(const Plane& a, const CliffordSet& set, ClassLabel label, int N, int M) {
  Bundle b;
  b.grid = make_sphere_grid(2, N, M);
  b.label = label;
  b.clifford = set;
  b.fibers.assign(static_cast<std::size_t>(b.grid.size()), a);
  return b;
}

Bundle suspended_chain(int n_plus, int N, int M) {
  SuspensionInput in;
  in.bundle = example_kitaev_chain(1, n_plus, N);
  in.k_index = 0;
  return suspend(in, {N, M});
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("pfaffian of small blocks") {
    Mat x = Mat::Zero(2, 2);
    x(0, 1) = cplx(2.0, 1.0);
    x(1, 0) = -x(0, 1);
    CHECK(std::abs(pfaffian(x) - cplx(2.0, 1.0)) < 1e-15);
    Mat y = Mat::Zero(4, 4);
    y(0, 1) = 3.0;
    y(1, 0) = -3.0;
    y(2, 3) = cplx(0.0, -2.0);
    y(3, 2) = cplx(0.0, 2.0);
    CHECK(std::abs(pfaffian(y) - cplx(0.0, -6.0)) < 1e-14);
    CHECK(std::abs(pfaffian(Mat::Zero(4, 4))) == 0.0);
    CHECK(std::abs(pfaffian(Mat::Zero(3, 3))) == 0.0);
    CHECK_THROWS_AS((void)pfaffian(Mat::Identity(2, 2)), InputError);
    CHECK_THROWS_AS((void)pfaffian(Mat::Zero(2, 3)), InputError);
  }

  TEST_CASE("pfaffian squares to the determinant and transforms with det V") {
    oracle::Rng rng(31);
    for (int m = 1; m <= 6; ++m) {
      for (int trial = 0; trial < 5; ++trial) {
        const Mat x = rng.skew(2 * m);
        const cplx pf = pfaffian(x);
        const cplx det = oracle::det(x);
        CHECK(std::abs(pf * pf - det) / std::abs(det) < 1e-9);
        const Mat v = rng.complex_matrix(2 * m, 2 * m);
        const cplx lhs = pfaffian(Mat(v.transpose() * x * v));
        const cplx rhs = oracle::det(v) * pf;
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-8);
      }
    }
  }

  TEST_CASE("fermion parity of basis planes matches the occupation count") {
    CHECK(fermion_parity(plane_from_vectors(make_nambu(1), Mat::Identity(2, 1))) == 0);
    const NambuSpace s1 = make_nambu(1);
    CHECK(fermion_parity(plane_from_vectors(s1, std::vector<Vec>{s1.cdag(0)})) == 1);
    for (int n = 1; n <= 4; ++n) {
      const NambuSpace s = make_nambu(n);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<bool> occ(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) occ[static_cast<std::size_t>(i)] = ((mask >> i) & 1) != 0;
        CHECK(fermion_parity(oracle::basis_plane(s, occ)) == oracle::occupation_parity(s, occ));
      }
    }
    const NambuSpace d = make_nambu(4, 1);
    CHECK(fermion_parity(oracle::basis_plane(d, {true, false, false, false})) == 1);
    CHECK(fermion_parity(oracle::basis_plane(d, {true, false, true, false})) == 0);
    CHECK_THROWS_AS((void)fermion_parity(plane_from_vectors(s1, std::vector<Vec>{Vec(Vec::Ones(2))})), InputError);
  }

  TEST_CASE("fermion parity is constant along Lagrangian paths") {
    oracle::Rng rng(32);
    const NambuSpace s = make_nambu(3);
    const CliffordSet none{s, {}};
    for (int trial = 0; trial < 20; ++trial) {
      const Plane a = oracle::random_lagrangian(rng, none);
      const int p = fermion_parity(a);
      // exp of X with X^T B + B X = 0 preserves the bracket, hence Lagrangian planes.
      Mat x = rng.complex_matrix(6, 6);
      x = 0.5 * (x - x.adjoint()).eval();
      x = 0.5 * (x - s.B * x.transpose() * s.B).eval();
      for (int step = 1; step <= 5; ++step) {
        const Plane b = transform(oracle::expm(0.05 * step * x), a);
        CHECK(fermi_check(b, b) < 1e-10);
        CHECK(fermion_parity(b) == p);
      }
    }
  }

  TEST_CASE("class D Z2 index") {
    CHECK(class_d_z2(example_majorana(true, 32)).value == 1);
    CHECK(class_d_z2(example_majorana(false, 32)).value == 0);
    oracle::Rng rng(33);
    const NambuSpace s = make_nambu(2);
    const Plane a = oracle::random_lagrangian(rng, CliffordSet{s, {}});
    Bundle b;
    b.grid = make_sphere_grid(1, 8);
    b.label = ClassLabel::D;
    b.clifford = CliffordSet{s, {}};
    b.fibers.assign(8, a);
    CHECK(class_d_z2(b).value == 0);
    b.fibers[0] = plane_from_vectors(s, rng.complex_matrix(4, 2));
    CHECK_THROWS_AS((void)class_d_z2(b), InputError);
  }

  TEST_CASE("omega form is skew and non-degenerate for real J1") {
    const NambuSpace s = make_nambu(2);
    const Generator j1 = kitaev_generators(s, ClassLabel::DIII).generators.at(0);
    const Mat w = omega_form(s, j1);
    CHECK(max_abs(w + w.transpose()) < 1e-15);
    CHECK(std::abs(oracle::det(w)) > 0.5);
    CHECK_THROWS_AS((void)omega_form(s, make_generator(s, kI * Mat::Identity(4, 4).rowwise().reverse())), InputError);
  }

  TEST_CASE("Kane-Mele index of a constant DIII bundle is trivial") {
    oracle::Rng rng(34);
    const CliffordSet set = kitaev_generators(make_nambu(2), ClassLabel::DIII);
    const Plane a = oracle::random_lagrangian(rng, set);
    const Bundle b = constant_sphere_bundle(a, set, ClassLabel::DIII, 8, 5);
    CHECK(validate_bundle(b).ok());
    const InvariantResult r = kane_mele_z2(b, set.generators[0]);
    CHECK(r.value == 0);
    CHECK(r.diagnostics["pairs"] == 0);
    CHECK(r.diagnostics["total_vorticity"] == 0);
    CHECK(r.diagnostics["min_abs_pfaffian"].get<double>() > 1e-8);
  }

  TEST_CASE("Kane-Mele index reports the degenerate Pfaffian of the DIII example") {
    const Bundle b = example_dIII(16, 9);
    const std::vector<cplx> pf = omega_pfaffians(b, b.clifford.generators[0]);
    // Pf vanishes at both poles and along k = +-pi/2.
    CHECK(std::abs(pf[static_cast<std::size_t>(b.grid.north())]) < 1e-12);
    CHECK(std::abs(pf[static_cast<std::size_t>(b.grid.south())]) < 1e-12);
    for (int j = 0; j < 9; ++j) CHECK(std::abs(pf[static_cast<std::size_t>(b.grid.index(4, j))]) < 1e-12);
    CHECK(std::abs(pf[static_cast<std::size_t>(b.grid.origin())]) > 0.5);
    CHECK_THROWS_AS((void)kane_mele_z2(b, b.clifford.generators[0]), NumericError);
  }

  TEST_CASE("chiral winding of Kitaev chains") {
    CHECK(chiral_winding(example_kitaev_chain(1, 0, 32), example_kitaev_chain(1, 0, 32).clifford.generators[0]).value == 0);
    const Bundle one = example_kitaev_chain(1, 1, 32);
    CHECK(std::abs(chiral_winding(one, one.clifford.generators[0]).value) == 1);
    std::vector<long long> w;
    for (int p = 0; p <= 3; ++p) {
      const Bundle b = example_kitaev_chain(3, p, 32);
      const long long v = chiral_winding(b, b.clifford.generators[0]).value;
      const Bundle fine = example_kitaev_chain(3, p, 64);
      CHECK(chiral_winding(fine, fine.clifford.generators[0]).value == v);
      w.push_back(v);
    }
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i] - w[i - 1] == w[1] - w[0]);
    CHECK(w[1] != w[0]);
  }

  TEST_CASE("chiral winding rejects coarse grids and foreign generators") {
    // Winding -2 on four points puts every phase step at pi.
    const Bundle b = example_kitaev_chain(2, 2, 4);
    CHECK_THROWS_AS((void)chiral_winding(b, b.clifford.generators[0]), NumericError);
    const Bundle maj = example_majorana(true, 8);
    const NambuSpace s = make_nambu(1);
    Mat q = Mat::Identity(2, 2);
    q(1, 1) = -1;
    CHECK_THROWS_AS((void)chiral_winding(maj, make_generator(s, kI * q)), InputError);
  }

  TEST_CASE("Chern number: constant, suspended chain, pullback and gauge") {
    oracle::Rng rng(35);
    const NambuSpace s = make_nambu(2);
    const Plane a = plane_from_vectors(s, rng.complex_matrix(4, 2));
    CHECK(chern_number(constant_sphere_bundle(a, CliffordSet{s, {}}, ClassLabel::A, 8, 5)).value == 0);
    const Bundle b = suspended_chain(1, 16, 15);
    const InvariantResult r = chern_number(b);
    CHECK(std::abs(r.value) == 1);
    CHECK(r.diagnostics["residual"].get<double>() < 0.05);
    // (k, t) -> (-k, -t) is a rotation of S^2, so the pullback keeps the Chern number.
    CHECK(chern_number(oracle::antipodal_pullback(b)).value == r.value);
    CHECK(chern_number(suspended_chain(0, 16, 15)).value == 0);
    const Mat u = rng.unitary(2);
    Bundle g = b;
    for (auto& f : g.fibers) f = transform(u, f);
    CHECK(chern_number(g).value == r.value);
    Bundle regauged = b;
    for (auto& f : regauged.fibers) f = Plane(f.space(), Mat(f.frame() * std::exp(kI * rng.uniform(0, 6))));
    CHECK(chern_number(regauged).value == r.value);
  }

  TEST_CASE("component index counts creators") {
    const NambuSpace s = make_nambu(3);
    const Mat q = charge_operator(s);
    CHECK(component_index_ai(oracle::basis_plane(s, {false, false, false}), q).value == 0);
    CHECK(component_index_ai(oracle::basis_plane(s, {true, true, false}), q).value == 2);
    CHECK(component_index_ai(oracle::basis_plane(s, {true, true, true}), q).value == 3);
    std::set<long long> values;
    for (int mask = 0; mask < 8; ++mask) {
      values.insert(component_index_ai(oracle::basis_plane(s, {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}), q).value);
    }
    CHECK(values.size() == 4);
    Vec mix = s.c(0) + s.cdag(0);
    Mat f(6, 3);
    f << mix / std::sqrt(2.0), s.c(1), s.c(2);
    CHECK_THROWS_AS((void)component_index_ai(Plane(s, f), q), InputError);
  }

  TEST_CASE("BCS pair amplitude of the Majorana chain is cot(k/2)") {
    const Bundle b = example_majorana(true, 64);
    for (int i = 0; i < b.grid.size(); ++i) {
      const double k = b.grid.points[static_cast<std::size_t>(i)].k;
      const Plane& f = b.fibers[static_cast<std::size_t>(i)];
      if (i == b.grid.origin()) {
        CHECK_THROWS_AS((void)bcs_coefficient(f), NumericError);
        continue;
      }
      CHECK(std::abs(bcs_coefficient(f) - std::cos(k / 2) / std::sin(k / 2)) < 1e-12);
    }
    CHECK_THROWS_AS((void)bcs_coefficient(oracle::basis_plane(make_nambu(2), {false, false})), InputError);
  }

  TEST_CASE("invariant results serialize with kind, value and diagnostics") {
    const InvariantResult r = class_d_z2(example_majorana(true, 8));
    const auto j = r.to_json();
    CHECK(j["kind"] == "z2_bit");
    CHECK(j["value"] == 1);
    CHECK(j["diagnostics"]["parity_k0"] == 1);
    CHECK(r.csv.rfind("record,index,k,t,a,b\n", 0) == 0);
  }
}
