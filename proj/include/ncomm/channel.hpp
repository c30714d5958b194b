// SPDX-License-Identifier: Apache-2.0
//
// Quantum channels in Kraus form, Phi(T) = sum_k A_k T A_k^dagger, with
// trace-preservation and unitality detected at construction, the projection
// classification coming from the six equivalent reducing conditions, the
// unitization of normal noise operators, and the channel families used
// throughout the test corpus.
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ncomm/linalg.hpp"
#include "ncomm/operator_span.hpp"
#include "ncomm/types.hpp"

namespace ncomm {

struct KrausChannel {
  int dim = 0;
  std::vector<Matrix> kraus;
  bool trace_preserving = false;
  bool unital = false;

  /// Phi(T) = sum_k A_k T A_k^dagger.
  Matrix apply(const Matrix& t) const {
    if (t.rows() != dim || t.cols() != dim) {
      throw std::invalid_argument("KrausChannel::apply: operator dimension does not match the channel");
    }
    Matrix out = Matrix::Zero(dim, dim);
    for (const Matrix& a : kraus) out += a * t * a.adjoint();
    return out;
  }
};

/// Build a channel from Kraus operators; the flags are measured, not assumed,
/// so non-unital channels are representable (the structure pipeline rejects
/// them later with a pointer at unitize()).
inline KrausChannel make_channel(std::vector<Matrix> kraus, const ToleranceConfig& tol = {}) {
  if (kraus.empty()) throw std::invalid_argument("make_channel: empty Kraus list");
  const int dim = static_cast<int>(kraus.front().rows());
  for (const Matrix& a : kraus) {
    if (a.rows() != dim || a.cols() != dim) {
      throw std::invalid_argument("make_channel: Kraus operators must be square with a common dimension");
    }
  }
  Matrix sum_ada = Matrix::Zero(dim, dim);
  Matrix sum_aad = Matrix::Zero(dim, dim);
  for (const Matrix& a : kraus) {
    sum_ada += a.adjoint() * a;
    sum_aad += a * a.adjoint();
  }
  KrausChannel ch;
  ch.dim = dim;
  ch.kraus = std::move(kraus);
  const Matrix id = identity(dim);
  ch.trace_preserving = (sum_ada - id).norm() <= tol.eps_zero * dim;
  ch.unital = (sum_aad - id).norm() <= tol.eps_zero * dim;
  return ch;
}

/// Column-stacking superoperator: S vec(T) = vec(Phi(T)), S = sum conj(A_k) (x) A_k.
inline Matrix superoperator(const KrausChannel& ch) {
  const Eigen::Index d2 = static_cast<Eigen::Index>(ch.dim) * ch.dim;
  Matrix s = Matrix::Zero(d2, d2);
  for (const Matrix& a : ch.kraus) s += kron(a.conjugate(), a);
  return s;
}

/// Dual map, Kraus {A_k^dagger}; trace preservation and unitality swap roles.
inline KrausChannel dual(const KrausChannel& ch) {
  KrausChannel out;
  out.dim = ch.dim;
  out.kraus.reserve(ch.kraus.size());
  for (const Matrix& a : ch.kraus) out.kraus.push_back(a.adjoint());
  out.trace_preserving = ch.unital;
  out.unital = ch.trace_preserving;
  return out;
}

/// The six projection conditions that coincide for unital trace-preserving
/// channels: P fixed by Phi, P reducing / forward-invariant / adjoint-invariant
/// for every Kraus operator, and Phi(P) below or above P.
struct ProjectionStatus {
  bool fixed = false;
  bool reducing = false;
  bool invariant_forward = false;
  bool invariant_adjoint = false;
  bool sub_fixed = false;
  bool super_fixed = false;

  bool all_agree() const {
    return fixed == reducing && fixed == invariant_forward && fixed == invariant_adjoint &&
           fixed == sub_fixed && fixed == super_fixed;
  }
};

inline ProjectionStatus projection_status(const KrausChannel& ch, const Matrix& p,
                                          const ToleranceConfig& tol) {
  if (p.rows() != ch.dim || p.cols() != ch.dim) {
    throw std::invalid_argument("projection_status: dimension mismatch");
  }
  const double eps = tol.decision();
  if ((p - p.adjoint()).norm() > eps * std::max(1.0, p.norm()) ||
      (p * p - p).norm() > eps * std::max(1.0, p.norm())) {
    throw std::invalid_argument("projection_status: input is not a Hermitian idempotent within tolerance");
  }

  ProjectionStatus st;
  const Matrix phi_p = ch.apply(p);
  st.fixed = (phi_p - p).norm() <= eps;

  st.reducing = true;
  st.invariant_forward = true;
  st.invariant_adjoint = true;
  for (const Matrix& a : ch.kraus) {
    st.reducing = st.reducing && (a * p - p * a).norm() <= eps;
    st.invariant_forward = st.invariant_forward && (a * p - p * a * p).norm() <= eps;
    st.invariant_adjoint = st.invariant_adjoint && (p * a - p * a * p).norm() <= eps;
  }

  // Phi(P) <= P iff the Hermitian difference has no eigenvalue below -eps.
  Eigen::SelfAdjointEigenSolver<Matrix> lower(p - phi_p);
  Eigen::SelfAdjointEigenSolver<Matrix> upper(phi_p - p);
  st.sub_fixed = lower.eigenvalues().minCoeff() >= -eps;
  st.super_fixed = upper.eigenvalues().minCoeff() >= -eps;

  if (ch.trace_preserving && ch.unital && !st.all_agree()) {
    throw std::runtime_error(
        "projection_status: the six equivalent conditions disagree for a unital channel; "
        "this indicates a tolerance breakdown");
  }
  return st;
}

namespace detail {

struct NormalEigenSystem {
  Vector eigenvalues;
  Matrix transform;  // unitary U with T = U diag(eigenvalues) U^dagger
};

// Diagonalize a normal operator. Hermitian inputs go through the symmetric
// solver; general normal ones through a Schur decomposition, whose triangular
// factor must be diagonal up to tolerance.
inline NormalEigenSystem normal_eigensystem(const Matrix& t, const ToleranceConfig& tol) {
  require_square(t, "unitize");
  const double scale = std::max(1.0, t.norm());
  if ((t * t.adjoint() - t.adjoint() * t).norm() > tol.eps_zero * scale * scale) {
    throw std::invalid_argument("unitize: operator is not normal within tolerance");
  }
  NormalEigenSystem out;
  if (is_hermitian(t, tol.eps_zero)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (t + t.adjoint()));
    out.eigenvalues = es.eigenvalues().cast<Complex>();
    out.transform = es.eigenvectors();
  } else {
    Eigen::ComplexSchur<Matrix> schur(t);
    if (schur.info() != Eigen::Success) {
      throw std::runtime_error("unitize: Schur decomposition failed");
    }
    out.eigenvalues = schur.matrixT().diagonal();
    out.transform = schur.matrixU();
  }
  return out;
}

// t -> exp(it) must be injective on the eigenvalue clusters: no two clusters
// may differ by a nonzero multiple of 2*pi.
inline void check_exp_injective(const Vector& eigenvalues, const ToleranceConfig& tol, double scale) {
  const double width = tol.eps_cluster * std::max(1.0, scale);
  std::vector<Complex> clusters;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    bool merged = false;
    for (const Complex& c : clusters) {
      if (std::abs(eigenvalues(i) - c) <= width) {
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back(eigenvalues(i));
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      const Complex delta = clusters[i] - clusters[j];
      const double k = std::round(delta.real() / two_pi);
      if (k != 0.0 && std::abs(delta.imag()) <= width &&
          std::abs(delta.real() - k * two_pi) <= width) {
        throw std::invalid_argument(
            "unitize: two eigenvalues are congruent modulo 2*pi, exp(i t) is not injective on the spectrum");
      }
    }
  }
}

}  // namespace detail

/// Turn normal noise operators {T_k} into the unital channel with Kraus
/// operators exp(i T_k)/sqrt(n). Because exp(i t) is injective on each
/// spectrum (checked), the new channel's noise commutant equals {T_k}'.
inline KrausChannel unitize(const std::vector<Matrix>& ops, const ToleranceConfig& tol = {}) {
  if (ops.empty()) throw std::invalid_argument("unitize: empty operator list");
  const double root = std::sqrt(static_cast<double>(ops.size()));
  std::vector<Matrix> kraus;
  kraus.reserve(ops.size());
  for (const Matrix& t : ops) {
    const auto es = detail::normal_eigensystem(t, tol);
    detail::check_exp_injective(es.eigenvalues, tol, t.norm());
    Vector phases(es.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
      phases(i) = std::exp(Complex(0.0, 1.0) * es.eigenvalues(i));
    }
    kraus.push_back((es.transform * phases.asDiagonal() * es.transform.adjoint()) / root);
  }
  return make_channel(std::move(kraus), tol);
}

// ---------------------------------------------------------------------------
// Channel families.

namespace detail {
inline void require_open_unit(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": parameter p must satisfy 0 < p < 1");
  }
}
}  // namespace detail

/// Single-qubit phase damping: {sqrt(1-p) I, sqrt(p) Z}.
inline KrausChannel build_phase_damping(double p) {
  detail::require_open_unit(p, "build_phase_damping");
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return make_channel({std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * z});
}

/// Two-qubit correlated dephasing: {sqrt(1-p) I4, sqrt(p) Z (x) Z}.
inline KrausChannel build_zz_damping(double p) {
  detail::require_open_unit(p, "build_zz_damping");
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return make_channel({std::sqrt(1.0 - p) * identity(4), std::sqrt(p) * kron(z, z)});
}

/// Independent dephasing on both qubits:
/// {(1-p) I, sqrt(p(1-p)) Z_1, sqrt(p(1-p)) Z_2, p Z_1 Z_2}.
inline KrausChannel build_two_qubit_dephasing(double p) {
  detail::require_open_unit(p, "build_two_qubit_dephasing");
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  const Matrix z1 = kron(z, identity(2));
  const Matrix z2 = kron(identity(2), z);
  const double m = std::sqrt(p * (1.0 - p));
  return make_channel({(1.0 - p) * identity(4), m * z1, m * z2, p * (z1 * z2)});
}

/// Sum of single-site copies of a 2x2 operator on n qubits, e.g. the
/// collective X = X_1 + ... + X_n.
inline Matrix collective_sum(int n, const Matrix& single) {
  if (n < 1) throw std::invalid_argument("collective_sum: need at least one qubit");
  if (single.rows() != 2 || single.cols() != 2) {
    throw std::invalid_argument("collective_sum: single-site operator must be 2x2");
  }
  const int dim = 1 << n;
  Matrix total = Matrix::Zero(dim, dim);
  for (int site = 0; site < n; ++site) {
    Matrix term = identity(1);
    for (int q = 0; q < n; ++q) {
      term = kron(term, q == site ? single : identity(2));
    }
    total += term;
  }
  return total;
}

/// n-qubit collective noise (rotation) channel with Kraus operators
/// exp(iX)/sqrt(3), exp(iY)/sqrt(3), exp(iZ)/sqrt(3) built from the summed
/// single-qubit Pauli operators. n = 1 and n = 2 are allowed but carry no
/// usable matrix blocks in the commutant.
inline KrausChannel build_collective(int n, const ToleranceConfig& tol = {}) {
  if (n < 1) throw std::invalid_argument("build_collective: n must be at least 1");
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  z << 1, 0, 0, -1;
  return unitize({collective_sum(n, x), collective_sum(n, y), collective_sum(n, z)}, tol);
}

}  // namespace ncomm
