// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "ncomm/linalg.hpp"
#include "ncomm/types.hpp"

namespace ncomm {

enum class SpanLabel { commutant, fixed_points, algebra, compression };

/// A Hilbert-Schmidt orthonormal basis of a subspace of dim x dim operators.
/// Houses the noise commutant A', the interaction algebra A, and compressions.
struct OperatorSpan {
  int dim = 0;
  std::vector<Matrix> basis;
  SpanLabel label = SpanLabel::compression;

  int size() const { return static_cast<int>(basis.size()); }

  /// dim^2 x size matrix whose columns are the vectorized basis elements.
  Matrix vectorized() const {
    Matrix v(static_cast<Eigen::Index>(dim) * dim, size());
    for (int j = 0; j < size(); ++j) v.col(j) = vec(basis[j]);
    return v;
  }

  /// HS-orthogonal projection of t onto the span.
  Matrix project(const Matrix& t) const {
    Matrix acc = Matrix::Zero(dim, dim);
    for (const Matrix& b : basis) acc += hs_inner(b, t) * b;
    return acc;
  }

  double residual(const Matrix& t) const { return (t - project(t)).norm(); }

  bool contains(const Matrix& t, double eps) const {
    return residual(t) <= eps * std::max(1.0, t.norm());
  }

  /// The span is closed under the adjoint (true for any commutant).
  bool dagger_closed(double eps) const {
    for (const Matrix& b : basis) {
      if (!contains(b.adjoint(), eps)) return false;
    }
    return true;
  }
};

/// HS-orthonormal basis of the linear span of the given matrices; the span
/// dimension is the numerical rank of the vectorized set.
inline OperatorSpan orthonormalize_span(const std::vector<Matrix>& mats, const ToleranceConfig& tol,
                                        SpanLabel label = SpanLabel::compression) {
  OperatorSpan out;
  out.label = label;
  if (mats.empty()) return out;
  const int dim = static_cast<int>(mats.front().rows());
  out.dim = dim;
  for (const Matrix& m : mats) {
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("orthonormalize_span: dimension mismatch");
    }
  }
  Matrix stacked(static_cast<Eigen::Index>(dim) * dim, mats.size());
  for (std::size_t j = 0; j < mats.size(); ++j) stacked.col(j) = vec(mats[j]);

  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  const RealVector sigma = svd.singularValues();
  const double cutoff = tol.eps_rank * (sigma.size() > 0 ? sigma(0) : 0.0);
  for (Eigen::Index j = 0; j < sigma.size(); ++j) {
    if (sigma(j) > cutoff) out.basis.push_back(unvec(svd.matrixU().col(j), dim, dim));
  }
  return out;
}

/// Largest mutual projection residual between two spans; ~0 iff they span the
/// same operator subspace.
inline double span_distance(const OperatorSpan& a, const OperatorSpan& b) {
  if (a.dim != b.dim) throw std::invalid_argument("span_distance: dimension mismatch");
  double worst = 0.0;
  for (const Matrix& m : a.basis) worst = std::max(worst, b.residual(m));
  for (const Matrix& m : b.basis) worst = std::max(worst, a.residual(m));
  return worst;
}

}  // namespace ncomm
