// SPDX-License-Identifier: Apache-2.0
//
// The noise commutant A' = {B : [B, A_k] = 0 for all k}, the fixed-point set
// Fix(Phi), and the interaction algebra A = A'' as Hilbert-Schmidt orthonormal
// operator spans. For unital channels Fix(Phi) = A' and both are dagger-closed
// algebras, which is what the structure engine builds on.
#pragma once

#include <vector>

#include "ncomm/channel.hpp"
#include "ncomm/linalg.hpp"
#include "ncomm/operator_span.hpp"
#include "ncomm/types.hpp"

namespace ncomm {

namespace detail {

// Vectorized commutator map of one generator: L vec(B) = vec(A B - B A).
inline Matrix commutator_map(const Matrix& a) {
  const int d = static_cast<int>(a.rows());
  return kron(identity(d), a) - kron(a.transpose(), identity(d));
}

// Joint kernel of the stacked commutator maps. For small spaces the
// generators are stacked into one (n d^2) x d^2 matrix and solved by a single
// SVD: exactly one rank decision. Above that the stack is replaced by the
// Gram matrix sum_k L_k^dagger L_k, assembled from Kronecker terms and
// diagonalized once; its kernel is the same joint nullspace. The Gram
// eigenvalue cutoff stays at eps_rank * lambda_max (not squared) so it sits
// above the rounding floor of the assembled matrix.
inline std::vector<Matrix> joint_commutant_kernel(const std::vector<Matrix>& ops,
                                                  const ToleranceConfig& tol) {
  const int d = static_cast<int>(ops.front().rows());
  const Eigen::Index d2 = static_cast<Eigen::Index>(d) * d;

  // Natural scale of the commutator maps; keeps the rank decision sane when
  // every generator commutes with everything and the stack is rounding noise.
  double scale = 0.0;
  for (const Matrix& a : ops) scale = std::max(scale, a.norm());

  Matrix kernel;
  if (d2 <= 64) {
    Matrix stacked(static_cast<Eigen::Index>(ops.size()) * d2, d2);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      stacked.middleRows(static_cast<Eigen::Index>(k) * d2, d2) = commutator_map(ops[k]);
    }
    kernel = nullspace(stacked, tol, scale);
  } else {
    // L^dagger L = I (x) A^dagger A + conj(A) A^T (x) I - A^T (x) A^dagger - conj(A) (x) A
    Matrix gram = Matrix::Zero(d2, d2);
    const Matrix id = identity(d);
    for (const Matrix& a : ops) {
      gram += kron(id, (a.adjoint() * a).eval());
      gram += kron((a.conjugate() * a.transpose()).eval(), id);
      gram -= kron(a.transpose(), a.adjoint());
      gram -= kron(a.conjugate(), a);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("commutant_basis: eigensolver failed to converge");
    }
    const RealVector lam = es.eigenvalues();  // ascending, >= 0 up to rounding
    const double cutoff = tol.eps_rank * std::max({0.0, lam(lam.size() - 1), scale * scale});
    Eigen::Index null_dim = 0;
    while (null_dim < lam.size() && lam(null_dim) <= cutoff) ++null_dim;
    kernel = es.eigenvectors().leftCols(null_dim);
  }

  std::vector<Matrix> basis;
  basis.reserve(kernel.cols());
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    basis.push_back(unvec(kernel.col(j), d, d));
  }
  return basis;
}

}  // namespace detail

/// Orthonormal basis of {B : B A_k = A_k B for all k}. Always contains the
/// normalized identity. The generators are stacked into a single joint
/// nullspace problem so there is one rank decision for the whole commutant.
inline OperatorSpan commutant_basis(const std::vector<Matrix>& ops, const ToleranceConfig& tol) {
  if (ops.empty()) throw std::invalid_argument("commutant_basis: empty generator list");
  const int d = static_cast<int>(ops.front().rows());
  for (const Matrix& a : ops) {
    require_square(a, "commutant_basis");
    if (a.rows() != d) throw std::invalid_argument("commutant_basis: dimension mismatch");
  }
  OperatorSpan span;
  span.dim = d;
  span.label = SpanLabel::commutant;
  span.basis = detail::joint_commutant_kernel(ops, tol);
  return span;
}

/// Orthonormal basis of Fix(Phi) = ker(S - I) for the channel superoperator S.
/// Equals the commutant of the Kraus operators exactly when the channel is
/// unital and trace preserving.
inline OperatorSpan fixed_point_basis(const KrausChannel& ch, const ToleranceConfig& tol) {
  const Matrix s = superoperator(ch);
  // Floor the rank decision at the superoperator scale: for a numerically
  // identity channel S - I is pure noise and everything is fixed.
  const Matrix kernel = nullspace(s - identity(static_cast<int>(s.rows())), tol, std::max(1.0, s.norm()));
  OperatorSpan span;
  span.dim = ch.dim;
  span.label = SpanLabel::fixed_points;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    span.basis.push_back(unvec(kernel.col(j), ch.dim, ch.dim));
  }
  return span;
}

/// The interaction algebra as the double commutant A = (A')'. For unital
/// channels this equals the unital dagger-algebra generated by the Kraus
/// operators (word spans are only used as a test oracle).
inline OperatorSpan algebra_basis(const std::vector<Matrix>& ops, const ToleranceConfig& tol) {
  const OperatorSpan commutant = commutant_basis(ops, tol);
  OperatorSpan algebra = commutant_basis(commutant.basis, tol);
  algebra.label = SpanLabel::algebra;
  return algebra;
}

/// Hermitian matrices spanning a dagger-closed span: the real and imaginary
/// parts (B + B^dagger)/2 and (B - B^dagger)/2i of every basis element,
/// reduced to an independent set over the reals. The output size equals the
/// complex dimension of the span.
inline std::vector<Matrix> hermitian_spanning_set(const OperatorSpan& span,
                                                  const ToleranceConfig& tol) {
  if (span.size() == 0) return {};
  const double eps = tol.decision();
  if (!span.dagger_closed(eps)) {
    throw std::invalid_argument(
        "hermitian_spanning_set: span is not closed under adjoints; "
        "this typically means a non-unital channel slipped through");
  }

  const Complex i2(0.0, 2.0);
  std::vector<Matrix> parts;
  parts.reserve(2 * span.size());
  for (const Matrix& b : span.basis) {
    parts.push_back(0.5 * (b + b.adjoint()));
    parts.push_back((b - b.adjoint()) / i2);
  }

  // Reduce over the reals so the surviving combinations stay Hermitian:
  // realify vec(H) as [Re; Im], orthonormalize, and map back.
  const int d = span.dim;
  const Eigen::Index d2 = static_cast<Eigen::Index>(d) * d;
  RealMatrix stacked(2 * d2, static_cast<Eigen::Index>(parts.size()));
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const Vector v = vec(parts[j]);
    stacked.col(j).head(d2) = v.real();
    stacked.col(j).tail(d2) = v.imag();
  }
  Eigen::JacobiSVD<RealMatrix> svd(stacked, Eigen::ComputeThinU);
  const RealVector sigma = svd.singularValues();
  const double cutoff = tol.eps_rank * (sigma.size() > 0 ? sigma(0) : 0.0);

  std::vector<Matrix> out;
  for (Eigen::Index j = 0; j < sigma.size(); ++j) {
    if (sigma(j) <= cutoff) continue;
    Vector v(d2);
    v.real() = svd.matrixU().col(j).head(d2);
    v.imag() = svd.matrixU().col(j).tail(d2);
    const Matrix h = unvec(v, d, d);
    out.push_back(0.5 * (h + h.adjoint()));
  }
  return out;
}

}  // namespace ncomm
