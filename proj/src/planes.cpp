// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "psym/planes.hpp"

#include <Eigen/SVD>
#include <utility>

namespace psym {

namespace {

void require_rows(const NambuSpace& space, const Mat& m, const char* what) {
  if (m.rows() != space.dim()) {
    throw InputError(std::string(what) + ": expected vectors of dimension " +
                     std::to_string(space.dim()) + ", got " + std::to_string(m.rows()));
  }
}

void require_same_space(const Plane& a, const Plane& b, const char* what) {
  if (!a.space().same_as(b.space())) throw InputError(std::string(what) + ": ambient space mismatch");
}

}  // namespace

Plane::Plane(NambuSpace space, Mat frame) : space_(std::move(space)), frame_(std::move(frame)) {
  require_rows(space_, frame_, "Plane");
  const Eigen::Index m = frame_.cols();
  if (max_abs(frame_.adjoint() * frame_ - Mat::Identity(m, m)) > kOrthoTol) {
    throw NumericError("Plane: frame columns are not orthonormal");
  }
  proj_ = frame_ * frame_.adjoint();
}

Plane plane_from_vectors(const NambuSpace& space, const Mat& vectors) {
  require_rows(space, vectors, "plane_from_vectors");
  if (vectors.cols() == 0) return Plane(space, Mat(space.dim(), 0));
  Eigen::JacobiSVD<Mat> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) < kRankTol) {
    throw InputError("plane_from_vectors: rank-deficient input (smallest singular value " +
                     std::to_string(sv(sv.size() - 1)) + ")");
  }
  return Plane(space, svd.matrixU());
}

Plane plane_from_vectors(const NambuSpace& space, const std::vector<Vec>& vectors) {
  Mat m(space.dim(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != space.dim()) throw InputError("plane_from_vectors: dimension mismatch");
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return plane_from_vectors(space, m);
}

Plane plane_from_span(const NambuSpace& space, const Mat& vectors, int rank) {
  require_rows(space, vectors, "plane_from_span");
  if (rank < 0 || rank > std::min<Eigen::Index>(vectors.rows(), vectors.cols())) {
    throw InputError("plane_from_span: rank out of range");
  }
  Eigen::JacobiSVD<Mat> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (rank > 0 && sv(rank - 1) < kRankTol * std::max(1.0, sv(0))) {
    throw NumericError("plane_from_span: span has rank below " + std::to_string(rank));
  }
  if (rank < sv.size() && sv(rank) > kRankTol * std::max(1.0, sv(0))) {
    throw NumericError("plane_from_span: span has rank above " + std::to_string(rank));
  }
  return Plane(space, svd.matrixU().leftCols(rank));
}

Plane plane_from_projector(const NambuSpace& space, const Mat& projector) {
  require_rows(space, projector, "plane_from_projector");
  Eigen::SelfAdjointEigenSolver<Mat> es(projector);
  const auto& ev = es.eigenvalues();
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 0.5) ++rank;
  }
  // Eigenvalues are ascending, so the range is spanned by the last columns.
  Mat frame = es.eigenvectors().rightCols(rank);
  return Plane(space, frame);
}

Plane complement(const Plane& a) {
  const int dim = a.space().dim();
  const int m = a.rank();
  if (m == 0) return Plane(a.space(), Mat::Identity(dim, dim));
  Eigen::HouseholderQR<Mat> qr(a.frame());
  Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  return Plane(a.space(), q.rightCols(dim - m));
}

Mat j_of(const Plane& a) {
  const int dim = a.space().dim();
  return kI * (2.0 * a.projector() - Mat::Identity(dim, dim));
}

double fermi_check(const Plane& a, const Plane& b) {
  require_same_space(a, b, "fermi_check");
  return max_abs(a.frame().transpose() * a.space().B * b.frame());
}

double pseudo_check(const Mat& j, const Plane& a) {
  const int dim = a.space().dim();
  if (j.rows() != dim || j.cols() != dim) throw InputError("pseudo_check: dimension mismatch");
  const Mat& p = a.projector();
  return max_abs(j * p * j.adjoint() - (Mat::Identity(dim, dim) - p));
}

double pseudo_check(const Generator& j, const Plane& a) { return pseudo_check(j.matrix, a); }

Plane fermi_perp(const Plane& a) {
  if (a.rank() != a.space().n) throw InputError("fermi_perp: rank must equal n");
  const Plane c = complement(a);
  Mat f = a.space().B * c.frame().conjugate();
  return Plane(a.space(), f);
}

double projector_distance(const Mat& pa, const Mat& pb) {
  if (pa.rows() != pb.rows()) throw InputError("projector_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> es(pa - pb, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double plane_distance(const Plane& a, const Plane& b) {
  require_same_space(a, b, "plane_distance");
  return projector_distance(a.projector(), b.projector());
}

Plane transform(const Mat& u, const Plane& a) {
  if (u.rows() != a.space().dim() || u.cols() != a.space().dim()) {
    throw InputError("transform: dimension mismatch");
  }
  return plane_from_vectors(a.space(), Mat(u * a.frame()));
}

}  // namespace psym
