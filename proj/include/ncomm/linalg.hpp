// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra with tolerance-aware spectral analysis: the
// numeric substrate for the channel and structure machinery. All norms are
// Frobenius (= Hilbert-Schmidt) unless stated otherwise, and vectorization is
// column-stacking, so vec(AXB) = (B^T (x) A) vec(X).
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "ncomm/types.hpp"

namespace ncomm {

inline Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

/// Hilbert-Schmidt inner product tr(A^dagger B). Conjugate-linear in A.
inline Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hs_inner: dimension mismatch");
  }
  return (a.adjoint() * b).trace();
}

inline double hs_norm(const Matrix& a) { return a.norm(); }

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Column-stacking vectorization.
inline Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw std::invalid_argument("unvec: size mismatch");
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

inline bool is_hermitian(const Matrix& m, double eps) {
  return (m - m.adjoint()).norm() <= eps * m.norm();
}

inline void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

/// Eigensystem of a Hermitian matrix with eigenvalues merged into clusters.
/// Raw eigenvalues closer than eps_cluster * max(1, ||M||) land in one cluster
/// whose representative value is the arithmetic mean; the eigenvector columns
/// stay grouped cluster by cluster in ascending eigenvalue order.
struct HermitianEigenSystem {
  RealVector eigenvalues;           // one entry per cluster, ascending
  std::vector<int> multiplicities;  // per cluster, sums to dim
  Matrix eigenvectors;              // dim x dim unitary, columns grouped by cluster

  int clusters() const { return static_cast<int>(multiplicities.size()); }

  int cluster_offset(int k) const {
    int off = 0;
    for (int i = 0; i < k; ++i) off += multiplicities[i];
    return off;
  }

  /// Orthogonal projection onto the k-th clustered eigenspace.
  Matrix projection(int k) const {
    const auto block = eigenvectors.middleCols(cluster_offset(k), multiplicities[k]);
    return block * block.adjoint();
  }
};

inline HermitianEigenSystem hermitian_eigensystem(const Matrix& m, const ToleranceConfig& tol) {
  require_square(m, "hermitian_eigensystem");
  tol.validate();
  if (!is_hermitian(m, tol.eps_zero)) {
    throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian within tolerance");
  }
  // Work on the Hermitian part so the tiny admissible skew component cannot leak in.
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed to converge");
  }

  const RealVector raw = es.eigenvalues();  // ascending
  const int dim = static_cast<int>(raw.size());
  const double width = tol.eps_cluster * std::max(1.0, h.norm());

  HermitianEigenSystem out;
  out.eigenvectors = es.eigenvectors();
  std::vector<double> values;
  int start = 0;
  for (int i = 1; i <= dim; ++i) {
    if (i == dim || raw(i) - raw(i - 1) > width) {
      const int count = i - start;
      values.push_back(raw.segment(start, count).mean());
      out.multiplicities.push_back(count);
      start = i;
    }
  }
  out.eigenvalues = Eigen::Map<const RealVector>(values.data(), values.size());
  return out;
}

/// Spectral decomposition as (eigenvalue, projection) pairs, ascending.
/// The projections are Hermitian idempotents with mutually orthogonal ranges
/// summing to the identity, and sum_i lambda_i P_i reconstructs the input.
inline std::vector<std::pair<double, Matrix>> spectral_projections(const Matrix& m,
                                                                   const ToleranceConfig& tol) {
  const HermitianEigenSystem es = hermitian_eigensystem(m, tol);
  std::vector<std::pair<double, Matrix>> out;
  out.reserve(es.clusters());
  for (int k = 0; k < es.clusters(); ++k) {
    out.emplace_back(es.eigenvalues(k), es.projection(k));
  }
  return out;
}

/// Orthonormal basis of the right nullspace of a (possibly rectangular) matrix.
/// Rank is decided by singular values above eps_rank * max(sigma_max,
/// scale_floor); the returned matrix holds one orthonormal null vector per
/// column. The floor defaults to zero (purely relative cutoff); callers whose
/// input can degenerate to rounding noise pass the natural scale of their
/// problem so a numerically-zero matrix is treated as zero.
///
/// Small systems go through one JacobiSVD (BDCSVD is avoided: for complex
/// matrices with repeated singular values it can return wrong factors in
/// Eigen 3.4). Systems with many columns switch to the normal-equations Gram
/// matrix M^dagger M and a Hermitian eigensolve; there the kernel cutoff is
/// eps_rank * lambda_max rather than its square so it stays above the
/// rounding floor of the assembled Gram matrix.
inline Matrix nullspace(const Matrix& m, const ToleranceConfig& tol, double scale_floor = 0.0) {
  tol.validate();
  if (m.size() == 0) {
    return Matrix::Identity(m.cols(), m.cols());
  }
  if (m.cols() <= 64) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const RealVector sigma = svd.singularValues();
    const double cutoff = tol.eps_rank * std::max(sigma.size() > 0 ? sigma(0) : 0.0, scale_floor);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > cutoff) ++rank;
    }
    return svd.matrixV().rightCols(m.cols() - rank);
  }
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("nullspace: eigensolver failed to converge");
  }
  const RealVector lam = es.eigenvalues();  // ascending, >= 0 up to rounding
  const double cutoff = tol.eps_rank * std::max({0.0, lam(lam.size() - 1), scale_floor * scale_floor});
  Eigen::Index kernel_dim = 0;
  while (kernel_dim < lam.size() && lam(kernel_dim) <= cutoff) ++kernel_dim;
  return es.eigenvectors().leftCols(kernel_dim);
}

/// exp(iH) for Hermitian H, computed through the spectral decomposition;
/// the result is unitary.
inline Matrix exp_i_hermitian(const Matrix& h, const ToleranceConfig& tol) {
  require_square(h, "exp_i_hermitian");
  if (!is_hermitian(h, tol.eps_zero)) {
    throw std::invalid_argument("exp_i_hermitian: input is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("exp_i_hermitian: eigensolver failed to converge");
  }
  const RealVector lam = es.eigenvalues();
  Vector phases(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, lam(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// ---------------------------------------------------------------------------
// Seeded random draws used by the generic strategies and the verifiers.

inline Matrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      out(i, j) = Complex(g(rng), g(rng));
    }
  }
  return out;
}

/// Haar-distributed unitary via QR of a complex Gaussian with phase fixing.
inline Matrix haar_unitary(int dim, std::mt19937_64& rng) {
  const Matrix g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

inline Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  const Matrix g = gaussian_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace ncomm
