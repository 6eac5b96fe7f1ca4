// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "psym/diagonal_map.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace psym {

Mat rotor(const Generator& K, const Plane& a, double t) {
  const double dev = pseudo_check(K, a);
  if (dev >= kAlgTol) {
    throw InputError("rotor: K is not a pseudo-symmetry of the plane (deviation " +
                     std::to_string(dev) + ")");
  }
  const int d = a.space().dim();
  const Mat kj = K.matrix * j_of(a);
  const Mat id = Mat::Identity(d, d);
  const double sq = max_abs(kj * kj + id);
  if (sq > kAlgTol) throw NumericError("rotor: (K J(A))^2 deviates from -1 by " + std::to_string(sq));
  return std::cos(t / 2) * id + std::sin(t / 2) * kj;
}

Plane eigenplane(const NambuSpace& space, const Mat& K, cplx lambda) {
  const int d = space.dim();
  return plane_from_projector(space, 0.5 * (Mat::Identity(d, d) + std::conj(lambda) * K));
}

namespace {

void check_input(const SuspensionInput& in) {
  const Bundle& b = in.bundle;
  const int count = static_cast<int>(b.clifford.size());
  if (b.grid.d > 1) throw InputError("suspend: input dimension must be 0 or 1");
  if (in.k_index < 0 || in.k_index >= count) throw InputError("suspend: K index out of range");
  if (b.clifford.generators[static_cast<std::size_t>(in.k_index)].parity != Parity::imaginary) {
    throw InputError("suspend: generator " + std::to_string(in.k_index) + " is not imaginary");
  }
  if (in.i_index) {
    if (*in.i_index < 0 || *in.i_index >= count || *in.i_index == in.k_index) {
      throw InputError("suspend: I index out of range or equal to K index");
    }
    if (b.clifford.generators[static_cast<std::size_t>(*in.i_index)].parity != Parity::real) {
      throw InputError("suspend: generator " + std::to_string(*in.i_index) + " is not real");
    }
  }
  const auto clifford = check_clifford(b.clifford);
  if (!clifford.empty()) {
    const auto& v = clifford.front();
    throw InputError("suspend: generators " + std::to_string(v.l) + " and " + std::to_string(v.m) +
                     " violate the Clifford relations");
  }
  const ValidationReport report = validate_bundle(b);
  if (!report.ok()) throw InputError("suspend: input bundle is invalid\n" + format_report(report));
}

CliffordSet remaining_generators(const SuspensionInput& in) {
  const CliffordSet& src = in.bundle.clifford;
  CliffordSet out{src.space, {}};
  for (int l = 0; l < static_cast<int>(src.size()); ++l) {
    if (l == in.k_index || (in.i_index && l == *in.i_index)) continue;
    out.generators.push_back(src.generators[static_cast<std::size_t>(l)]);
  }
  if (in.i_index) out.generators.push_back(src.generators[static_cast<std::size_t>(*in.i_index)]);
  return out;
}

Plane rotate(const Generator& K, const Plane& a, double t, int index) {
  if (t == 0.0) return a;
  try {
    return Plane(a.space(), rotor(K, a, t) * a.frame());
  } catch (const InputError& e) {
    throw InputError("suspend: fiber " + std::to_string(index) + ": " + e.what());
  } catch (const NumericError& e) {
    throw NumericError("suspend: fiber " + std::to_string(index) + ": " + e.what());
  }
}

}  // namespace

Bundle suspend(const SuspensionInput& in, const SuspendOptions& opt) {
  check_input(in);
  const Bundle& src = in.bundle;
  const Generator& K = src.clifford.generators[static_cast<std::size_t>(in.k_index)];
  Bundle out;
  out.label = next_class(src.label);
  out.clifford = remaining_generators(in);

  if (src.grid.d == 0) {
    out.grid = make_sphere_grid(1, opt.N);
    for (const auto& p : out.grid.points) {
      const double theta = p.k;
      if (std::abs(theta) <= kPi / 2) {
        out.fibers.push_back(rotate(K, src.fibers[0], theta, 0));
      } else {
        const double t = theta > 0 ? kPi - theta : -kPi - theta;
        out.fibers.push_back(rotate(K, src.fibers[1], t, 1));
      }
    }
    return out;
  }

  if (opt.M % 2 == 0) throw InputError("suspend: M must be odd so that the equator is sampled");
  out.grid = make_sphere_grid(2, src.grid.N, opt.M);
  const int N = src.grid.N;
  for (int j = 0; j < opt.M; ++j) {
    const double t = (2 * j + 1 == opt.M) ? 0.0 : out.grid.points[static_cast<std::size_t>(j * N)].t;
    for (int i = 0; i < N; ++i) out.fibers.push_back(rotate(K, src.fibers[static_cast<std::size_t>(i)], t, i));
  }
  // Pole fibers do not depend on k; they are taken from the k = 0 meridian.
  const int k0 = src.grid.origin();
  out.fibers.push_back(rotate(K, src.fibers[static_cast<std::size_t>(k0)], kPi / 2, k0));
  out.fibers.push_back(rotate(K, src.fibers[static_cast<std::size_t>(k0)], -kPi / 2, k0));
  return out;
}

Bundle example_majorana(bool occupied_at_zero, int N) {
  const NambuSpace space = make_nambu(1);
  SuspensionInput in;
  in.bundle.grid = make_sphere_grid(0);
  in.bundle.label = ClassLabel::BDI;
  in.bundle.clifford = imaginary_realization(space, ClassLabel::BDI);
  const Vec at_zero = occupied_at_zero ? space.cdag(0) : space.c(0);
  in.bundle.fibers = {plane_from_vectors(space, std::vector<Vec>{at_zero}),
                      plane_from_vectors(space, std::vector<Vec>{space.c(0)})};
  in.k_index = 0;
  return suspend(in, {N, 1});
}

Bundle example_dIII(int N, int M) {
  const NambuSpace space = make_nambu(2);
  const Generator I = kitaev_generators(space, ClassLabel::DIII).generators.at(0);
  // K c_dn = i c_up^dag, K c_up^dag = i c_dn, K c_up = i c_dn^dag, K c_dn^dag = i c_up.
  const Mat K = kI * Mat::Identity(4, 4).rowwise().reverse();

  const double r = 1.0 / std::sqrt(2.0);
  const Vec cp = r * (space.c(0) + space.c(1));
  const Vec cm = r * (space.c(0) - space.c(1));
  const Vec cpd = r * (space.cdag(0) + space.cdag(1));
  const Vec cmd = r * (space.cdag(0) - space.cdag(1));

  SuspensionInput in;
  in.bundle.grid = make_sphere_grid(1, N);
  in.bundle.label = ClassLabel::D;
  in.bundle.clifford = CliffordSet{space, {I, make_generator(space, K)}};
  for (const auto& p : in.bundle.grid.points) {
    const double c = std::cos(p.k / 2);
    const double s = std::sin(p.k / 2);
    Mat f(4, 2);
    f.col(0) = cpd * c - cm * s;
    f.col(1) = cmd * c - cp * s;
    in.bundle.fibers.emplace_back(space, std::move(f));
  }
  in.k_index = 1;
  in.i_index = 0;
  return suspend(in, {N, M});
}

Bundle example_kitaev_chain(int n, int n_plus, int N) {
  if (n < 1) throw InputError("example_kitaev_chain: n must be positive");
  if (n_plus < 0 || n_plus > n) throw InputError("example_kitaev_chain: n_plus must lie in [0, n]");
  const NambuSpace space = make_nambu(n);
  Mat data(space.dim(), n);
  Mat vacuum(space.dim(), n);
  for (int i = 0; i < n; ++i) {
    data.col(i) = i < n_plus ? space.cdag(i) : space.c(i);
    vacuum.col(i) = space.c(i);
  }
  SuspensionInput in;
  in.bundle.grid = make_sphere_grid(0);
  in.bundle.label = ClassLabel::AI;
  in.bundle.clifford = imaginary_realization(space, ClassLabel::AI);
  in.bundle.fibers = {Plane(space, data), Plane(space, vacuum)};
  in.k_index = 1;
  return suspend(in, {N, 1});
}

}  // namespace psym
