// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"

using namespace psym;

namespace {

struct RandomCase {
  Generator K;
  Plane a;
  double t;
};

RandomCase random_rotor_case(oracle::Rng& rng, int n) {
  const auto setup = oracle::suspension_setup(n);
  const Plane a = oracle::random_plane(rng, setup.set);
  return {setup.set.generators[static_cast<std::size_t>(setup.k_index)], a, rng.uniform(-kPi / 2, kPi / 2)};
}

}  // namespace

TEST_SUITE("diagonal_map") {
  TEST_CASE("rotor is the identity at t = 0 and unitary") {
    oracle::Rng rng(21);
    const RandomCase c = random_rotor_case(rng, 2);
    const Eigen::Index dim = c.K.matrix.rows();
    CHECK(max_abs(rotor(c.K, c.a, 0.0) - Mat::Identity(dim, dim)) == 0.0);
    const Mat r = rotor(c.K, c.a, c.t);
    CHECK(max_abs(r.adjoint() * r - Mat::Identity(dim, dim)) < 1e-13);
  }

  TEST_CASE("rotor agrees with the matrix exponential and forms a one-parameter group") {
    oracle::Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = std::array{1, 2, 4}[static_cast<std::size_t>(trial % 3)];
      const RandomCase c = random_rotor_case(rng, n);
      const Mat gen = (c.t / 2) * c.K.matrix * j_of(c.a);
      CHECK(max_abs(rotor(c.K, c.a, c.t) - oracle::expm(gen)) < 1e-12);
      const double t2 = rng.uniform(-1.0, 1.0);
      CHECK(max_abs(rotor(c.K, c.a, c.t) * rotor(c.K, c.a, t2) - rotor(c.K, c.a, c.t + t2)) < 1e-12);
      CHECK(max_abs(rotor(c.K, c.a, c.t) * rotor(c.K, c.a, -c.t) - Mat::Identity(c.a.space().dim(), c.a.space().dim())) < 1e-12);
    }
  }

  TEST_CASE("rotor rejects planes without the pseudo-symmetry") {
    const NambuSpace s = make_nambu(1);
    const Generator k = make_generator(s, kI * s.B);
    Vec v(2);
    v << 1.0, 0.3;
    CHECK_THROWS_AS((void)rotor(k, plane_from_vectors(s, std::vector<Vec>{v}), 0.2), InputError);
  }

  TEST_CASE("constant input: poles are the eigenplanes of K, independent of A") {
    oracle::Rng rng(23);
    const auto setup = oracle::suspension_setup(2);
    const Mat& K = setup.set.generators[1].matrix;
    for (int trial = 0; trial < 3; ++trial) {
      const Plane a = oracle::random_lagrangian(rng, setup.set);
      SuspensionInput in;
      in.bundle.grid = make_sphere_grid(1, 8);
      in.bundle.label = setup.label;
      in.bundle.clifford = setup.set;
      in.bundle.fibers.assign(8, a);
      in.k_index = setup.k_index;
      in.i_index = setup.i_index;
      const Bundle out = suspend(in, {8, 5});
      CHECK(plane_distance(out.fibers[static_cast<std::size_t>(out.grid.north())], eigenplane(out.space(), K, -kI)) < 1e-12);
      CHECK(plane_distance(out.fibers[static_cast<std::size_t>(out.grid.south())], eigenplane(out.space(), K, kI)) < 1e-12);
      CHECK(out.label == ClassLabel::DIII);
      REQUIRE(out.clifford.size() == 1);
      CHECK(out.clifford.generators[0].matrix == setup.set.generators[0].matrix);
    }
  }

  TEST_CASE("suspension post-conditions on random inputs") {
    oracle::Rng rng(24);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = std::array{1, 2, 4}[static_cast<std::size_t>(trial % 3)];
      const int d = trial % 2;
      const auto setup = oracle::suspension_setup(n);
      SuspensionInput in;
      in.bundle = d == 0 ? oracle::random_point_bundle(rng, setup.set, setup.label)
                         : oracle::random_circle_bundle(rng, setup.set, setup.label, 16);
      in.k_index = setup.k_index;
      in.i_index = setup.i_index;
      const Bundle out = suspend(in, {16, 9});
      CAPTURE(n);
      CAPTURE(d);
      const ValidationReport r = validate_bundle(out);
      CHECK(r.ok());
      CHECK(out.grid.d == d + 1);
      if (d == 1) {
        const int eq = (9 - 1) / 2;
        for (int i = 0; i < 16; ++i) {
          CHECK(out.fibers[static_cast<std::size_t>(out.grid.index(i, eq))].frame() == in.bundle.fibers[static_cast<std::size_t>(i)].frame());
        }
      } else {
        CHECK(out.fibers[static_cast<std::size_t>(out.grid.origin())].frame() == in.bundle.fibers[0].frame());
        CHECK(out.fibers[static_cast<std::size_t>(out.grid.antiorigin())].frame() == in.bundle.fibers[1].frame());
      }
    }
  }

  TEST_CASE("suspend rejects bad generator choices and invalid bundles") {
    const auto setup = oracle::suspension_setup(2);
    oracle::Rng rng(25);
    SuspensionInput in;
    in.bundle = oracle::random_point_bundle(rng, setup.set, setup.label);
    in.k_index = 0;
    CHECK_THROWS_AS((void)suspend(in), InputError);
    in.k_index = 1;
    in.i_index = 1;
    CHECK_THROWS_AS((void)suspend(in), InputError);
    in.i_index = 5;
    CHECK_THROWS_AS((void)suspend(in), InputError);
    in.i_index.reset();
    in.bundle.fibers[1] = plane_from_vectors(setup.set.space, rng.complex_matrix(4, 2));
    try {
      (void)suspend(in);
      FAIL("expected InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("fiber 1") != std::string::npos);
    }
    in.bundle = oracle::random_circle_bundle(rng, setup.set, setup.label, 8);
    CHECK_THROWS_AS((void)suspend(in, {8, 4}), InputError);
  }

  TEST_CASE("Majorana chain fibers") {
    const Bundle b = example_majorana(true, 64);
    CHECK(b.label == ClassLabel::D);
    CHECK(b.clifford.size() == 0);
    for (int i = 0; i < b.grid.size(); ++i) {
      const double k = b.grid.points[static_cast<std::size_t>(i)].k;
      CHECK(oracle::projector_gap(b.fibers[static_cast<std::size_t>(i)], oracle::majorana_projector(k)) < 1e-12);
    }
    const NambuSpace s = make_nambu(1);
    CHECK(plane_distance(b.fibers[static_cast<std::size_t>(b.grid.origin())], plane_from_vectors(s, std::vector<Vec>{s.cdag(0)})) < 1e-15);
    CHECK(plane_distance(b.fibers[static_cast<std::size_t>(b.grid.antiorigin())], plane_from_vectors(s, std::vector<Vec>{s.c(0)})) < 1e-15);
    // The trivial loop leaves c at k = 0 and k = pi and is contractible in between.
    const Bundle trivial = example_majorana(false, 16);
    const Plane vacuum = plane_from_vectors(s, std::vector<Vec>{s.c(0)});
    CHECK(plane_distance(trivial.fibers[static_cast<std::size_t>(trivial.grid.origin())], vacuum) < 1e-15);
    CHECK(plane_distance(trivial.fibers[static_cast<std::size_t>(trivial.grid.antiorigin())], vacuum) < 1e-15);
    CHECK(validate_bundle(trivial).ok());
  }

  TEST_CASE("DIII example: generator relations and closed-form fibers") {
    const Bundle b = example_dIII(16, 9);
    CHECK(b.label == ClassLabel::DIII);
    REQUIRE(b.clifford.size() == 1);
    const NambuSpace s = b.space();
    const Mat& I = b.clifford.generators[0].matrix;
    const Mat K = kI * Mat::Identity(4, 4).rowwise().reverse();
    CHECK(max_abs(I * K + K * I) < 1e-15);
    CHECK(max_abs(K * K + Mat::Identity(4, 4)) < 1e-15);
    CHECK(max_abs(K * s.c(1) - kI * s.cdag(0)) < 1e-15);
    CHECK(max_abs(K * s.cdag(0) - kI * s.c(1)) < 1e-15);
    CHECK(max_abs(K * s.c(0) - kI * s.cdag(1)) < 1e-15);
    CHECK(max_abs(K * s.cdag(1) - kI * s.c(0)) < 1e-15);
    const Generator kg = make_generator(s, K);
    const int eq = 4;
    for (int i = 0; i < 16; ++i) {
      const Plane& f = b.fibers[static_cast<std::size_t>(b.grid.index(i, eq))];
      CHECK(pseudo_check(kg, f) < 1e-14);
      CHECK(pseudo_check(b.clifford.generators[0], f) < 1e-14);
    }
    for (int i = 0; i < b.grid.size(); ++i) {
      const auto& p = b.grid.points[static_cast<std::size_t>(i)];
      CHECK(oracle::projector_gap(b.fibers[static_cast<std::size_t>(i)], oracle::dIII_projector(p.k, p.t)) < 1e-12);
    }
    CHECK(validate_bundle(b).ok());
  }

  TEST_CASE("Kitaev chain fibers on both arcs") {
    for (int n = 1; n <= 3; ++n) {
      for (int np = 0; np <= n; ++np) {
        const Bundle b = example_kitaev_chain(n, np, 32);
        CHECK(b.label == ClassLabel::BDI);
        REQUIRE(b.clifford.size() == 1);
        CHECK(b.clifford.generators[0].parity == Parity::imaginary);
        for (int i = 0; i < b.grid.size(); ++i) {
          const double k = b.grid.points[static_cast<std::size_t>(i)].k;
          CHECK(oracle::projector_gap(b.fibers[static_cast<std::size_t>(i)], oracle::kitaev_projector(n, np, k)) < 1e-12);
        }
        CHECK(validate_bundle(b).ok());
      }
    }
    const Bundle b = example_kitaev_chain(1, 1, 32);
    const NambuSpace s = make_nambu(1);
    CHECK(plane_distance(b.fibers[static_cast<std::size_t>(b.grid.origin())], plane_from_vectors(s, std::vector<Vec>{s.cdag(0)})) < 1e-15);
    CHECK_THROWS_AS((void)example_kitaev_chain(2, 3), InputError);
    CHECK_THROWS_AS((void)example_kitaev_chain(2, -1), InputError);
  }
}
