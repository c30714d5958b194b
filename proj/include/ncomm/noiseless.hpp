// SPDX-License-Identifier: Apache-2.0
//
// Operational checks on a computed Wedderburn structure: identify noiseless
// subsystems, run encode -> channel -> decode round trips, and validate every
// structural identity against the channel itself. Inside each component the
// structuring unitary orders the copy (logical) index before the block
// (noisy) index, so the algebra acts on the second factor and the commutant
// on the first: logical states ride the multiplicity factor untouched.
#pragma once

#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ncomm/channel.hpp"
#include "ncomm/commutant.hpp"
#include "ncomm/linalg.hpp"
#include "ncomm/structure.hpp"
#include "ncomm/types.hpp"

namespace ncomm {

struct DensityMatrix {
  Matrix matrix;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

inline DensityMatrix make_density(const Matrix& rho, const ToleranceConfig& tol) {
  require_square(rho, "make_density");
  const double eps = tol.decision();
  if ((rho - rho.adjoint()).norm() > eps * std::max(1.0, rho.norm())) {
    throw std::invalid_argument("make_density: not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
  if (es.eigenvalues().minCoeff() < -eps) {
    throw std::invalid_argument("make_density: not positive semidefinite within tolerance");
  }
  if (std::abs(rho.trace().real() - 1.0) > eps || std::abs(rho.trace().imag()) > eps) {
    throw std::invalid_argument("make_density: trace must be one");
  }
  return {rho};
}

/// Full-rank generic state G G^dagger / tr, reproducible from the engine state.
inline DensityMatrix random_density(int dim, std::mt19937_64& rng) {
  const Matrix g = gaussian_matrix(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return {rho};
}

inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix - b.matrix);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

/// One Wedderburn component viewed as storage: the commutant factor of size
/// m_k is the logical space, the algebra factor of size n_k the noisy
/// cofactor. n_k = 1 marks a decoherence-free subspace; logical_dim >= 2 is
/// needed for the component to store a qubit or better.
struct NoiselessComponent {
  int component_index = 0;
  int logical_dim = 0;   // m_k
  int cofactor_dim = 0;  // n_k
  Matrix isometry;       // dim x (n_k m_k) slice of the structuring unitary
  bool decoherence_free = false;

  bool usable() const { return logical_dim >= 2; }
};

inline std::vector<NoiselessComponent> noiseless_components(const WedderburnStructure& st) {
  std::vector<NoiselessComponent> out;
  out.reserve(st.components.size());
  int offset = 0;
  for (std::size_t k = 0; k < st.components.size(); ++k) {
    const int n = st.components[k].cls.block_rank;
    const int m = st.components[k].cls.multiplicity;
    NoiselessComponent nc;
    nc.component_index = static_cast<int>(k);
    nc.logical_dim = m;
    nc.cofactor_dim = n;
    nc.isometry = st.structuring_unitary.middleCols(offset, n * m);
    nc.decoherence_free = (n == 1);
    out.push_back(std::move(nc));
    offset += n * m;
  }
  return out;
}

/// Embed ancilla (x) logical through the component isometry. The logical
/// factor is the commutant side, the ancilla rides the noisy factor.
inline DensityMatrix encode(const NoiselessComponent& nc, const DensityMatrix& ancilla,
                            const DensityMatrix& logical, const ToleranceConfig& tol) {
  if (ancilla.dim() != nc.cofactor_dim || logical.dim() != nc.logical_dim) {
    throw std::invalid_argument("encode: ancilla/logical dimensions do not match the component");
  }
  make_density(ancilla.matrix, tol);
  make_density(logical.matrix, tol);
  const Matrix joint = kron(logical.matrix, ancilla.matrix);  // copy index major
  return {nc.isometry * joint * nc.isometry.adjoint()};
}

namespace detail {

// Partial trace over the noisy factor of the pulled-back state, plus the
// weight that escaped the isometry range.
inline std::pair<Matrix, double> pullback_logical(const NoiselessComponent& nc, const Matrix& rho) {
  const Matrix s = nc.isometry.adjoint() * rho * nc.isometry;
  const double leak = (rho - nc.isometry * s * nc.isometry.adjoint()).norm();
  const int n = nc.cofactor_dim;
  const int m = nc.logical_dim;
  Matrix logical = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int a = 0; a < n; ++a) logical(i, j) += s(i * n + a, j * n + a);
    }
  }
  const double tr = logical.trace().real();
  if (tr > 0.0) logical /= tr;
  return {logical, leak};
}

}  // namespace detail

/// Recover the logical state: pull back through the isometry and trace out
/// the noisy factor. States with weight outside the isometry range are
/// rejected.
inline DensityMatrix decode(const NoiselessComponent& nc, const DensityMatrix& state,
                            const ToleranceConfig& tol) {
  if (state.dim() != nc.isometry.rows()) {
    throw std::invalid_argument("decode: state dimension does not match the component");
  }
  auto [logical, leak] = detail::pullback_logical(nc, state.matrix);
  if (leak > tol.decision() * std::max(1.0, state.matrix.norm())) {
    throw SupportLeakageError("decode: state has weight outside the component isometry range");
  }
  return {std::move(logical)};
}

struct NoiselessReport {
  double max_trace_distance = 0.0;
  double max_leakage = 0.0;
  int trials = 0;
};

/// Seeded round-trip experiment: encode a random ancilla and logical state,
/// push the result through the channel `repetitions` times, decode, and
/// record the worst trace distance to the original logical state. Decoding
/// here projects onto the isometry range instead of throwing, so a corrupted
/// structure shows up as a large distance rather than an exception.
inline NoiselessReport verify_noiseless(const KrausChannel& ch, const NoiselessComponent& nc,
                                        int trials, int repetitions, const ToleranceConfig& tol) {
  if (trials < 1 || repetitions < 0) {
    throw std::invalid_argument("verify_noiseless: trials must be positive and repetitions nonnegative");
  }
  if (nc.isometry.rows() != ch.dim) {
    throw std::invalid_argument("verify_noiseless: component does not belong to this channel");
  }
  std::mt19937_64 rng(tol.seed);
  NoiselessReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const DensityMatrix ancilla = random_density(nc.cofactor_dim, rng);
    const DensityMatrix logical = random_density(nc.logical_dim, rng);
    Matrix rho = encode(nc, ancilla, logical, tol).matrix;
    for (int r = 0; r < repetitions; ++r) rho = ch.apply(rho);
    auto [recovered, leak] = detail::pullback_logical(nc, rho);
    report.max_leakage = std::max(report.max_leakage, leak);
    report.max_trace_distance =
        std::max(report.max_trace_distance, trace_distance({recovered}, logical));
  }
  return report;
}

struct Diagnostic {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

namespace detail {

inline double off_pattern_residual(const Matrix& conj, const WedderburnStructure& st) {
  Matrix masked = conj;
  int off = 0;
  for (const auto& c : st.components) {
    for (int copy = 0; copy < c.cls.multiplicity; ++copy) {
      masked.block(off, off, c.cls.block_rank, c.cls.block_rank).setZero();
      off += c.cls.block_rank;
    }
  }
  return masked.norm();
}

inline double repeated_block_residual(const Matrix& conj, const WedderburnStructure& st) {
  double worst = 0.0;
  int off = 0;
  for (const auto& c : st.components) {
    const int n = c.cls.block_rank;
    const Matrix ref = conj.block(off, off, n, n);
    for (int copy = 1; copy < c.cls.multiplicity; ++copy) {
      worst = std::max(worst, (conj.block(off + copy * n, off + copy * n, n, n) - ref).norm());
    }
    off += n * c.cls.multiplicity;
  }
  return worst;
}

inline double unit_relation_residual(const WedderburnStructure& st) {
  double worst = 0.0;
  for (const auto& comp : st.components) {
    const int m = comp.units.m;
    const int dim = st.dim;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        worst = std::max(worst, (comp.units.at(i, j).adjoint() - comp.units.at(j, i)).norm());
        for (int k = 0; k < m; ++k) {
          for (int l = 0; l < m; ++l) {
            const Matrix prod = comp.units.at(i, j) * comp.units.at(k, l);
            if (j == k) {
              worst = std::max(worst, (prod - comp.units.at(i, l)).norm());
            } else {
              worst = std::max(worst, prod.norm());
            }
          }
        }
      }
    }
    Matrix diag_sum = Matrix::Zero(dim, dim);
    for (int i = 0; i < m; ++i) diag_sum += comp.units.at(i, i);
    worst = std::max(worst, (diag_sum - comp.cls.central_projection.matrix).norm());
  }
  return worst;
}

}  // namespace detail

/// Re-derive every identity the structure asserts and report each as a named
/// diagnostic; failures are reported, never thrown.
inline std::vector<Diagnostic> verify_structure(const KrausChannel& ch,
                                                const WedderburnStructure& st,
                                                const ToleranceConfig& tol) {
  std::vector<Diagnostic> out;
  const double span_eps = 1e-8;
  auto push = [&out](std::string name, double residual, double threshold) {
    out.push_back({std::move(name), residual <= threshold, residual});
  };

  int dim_total = 0, comm_total = 0, alg_total = 0;
  for (const auto& c : st.components) {
    dim_total += c.cls.block_rank * c.cls.multiplicity;
    comm_total += c.cls.multiplicity * c.cls.multiplicity;
    alg_total += c.cls.block_rank * c.cls.block_rank;
  }
  push("sum n_k m_k = dim", std::abs(dim_total - st.dim), 0.5);
  push("sum m_k^2 = dim A'", std::abs(comm_total - st.commutant.size()), 0.5);

  const OperatorSpan algebra = algebra_basis(ch.kraus, tol);
  push("sum n_k^2 = dim A", std::abs(alg_total - algebra.size()), 0.5);

  const OperatorSpan fixed = fixed_point_basis(ch, tol);
  push("Fix(Phi) = A'", span_distance(fixed, st.commutant), span_eps);

  double central_comm = 0.0, central_in_alg = 0.0;
  for (const auto& c : st.components) {
    const Matrix& q = c.cls.central_projection.matrix;
    for (const Matrix& a : ch.kraus) {
      central_comm = std::max(central_comm, (q * a - a * q).norm());
    }
    central_in_alg = std::max(central_in_alg, algebra.residual(q));
  }
  push("central projections commute with Kraus operators", central_comm, span_eps);
  push("central projections lie in the algebra", central_in_alg, span_eps);

  const Matrix& u = st.structuring_unitary;
  push("structuring unitary is unitary", (u.adjoint() * u - identity(st.dim)).norm(), span_eps);

  double off = 0.0, rep = 0.0;
  for (const Matrix& a : ch.kraus) {
    const Matrix conj = u.adjoint() * a * u;
    off = std::max(off, detail::off_pattern_residual(conj, st));
    rep = std::max(rep, detail::repeated_block_residual(conj, st));
  }
  push("conjugated Kraus operators are block diagonal", off, span_eps);
  push("diagonal blocks repeat per component", rep, span_eps);

  push("matrix unit relations", detail::unit_relation_residual(st), span_eps);
  return out;
}

/// Test oracle: a channel with a planted block structure. Each Kraus operator
/// is a random unitary respecting the pattern, conjugated by one global
/// random unitary; analyze() must recover the pattern multiset exactly.
inline std::pair<KrausChannel, std::vector<std::pair<int, int>>> planted_channel(
    const std::vector<std::pair<int, int>>& pattern, int generators, std::uint64_t seed) {
  if (pattern.empty()) throw std::invalid_argument("planted_channel: empty pattern");
  if (generators < 3) throw std::invalid_argument("planted_channel: need at least three generators");
  int dim = 0;
  for (const auto& [n, m] : pattern) {
    if (n < 1 || m < 1) throw std::invalid_argument("planted_channel: pattern entries must be positive");
    dim += n * m;
  }
  if (dim > 64) throw std::invalid_argument("planted_channel: dimension exceeds desk scale");

  std::mt19937_64 rng(seed);
  const Matrix u = haar_unitary(dim, rng);
  std::vector<Matrix> kraus;
  kraus.reserve(generators);
  const double root = std::sqrt(static_cast<double>(generators));
  for (int j = 0; j < generators; ++j) {
    Matrix block = Matrix::Zero(dim, dim);
    int off = 0;
    for (const auto& [n, m] : pattern) {
      block.block(off, off, n * m, n * m) = kron(identity(m), haar_unitary(n, rng));
      off += n * m;
    }
    kraus.push_back(u * block * u.adjoint() / root);
  }
  return {make_channel(kraus), pattern};
}

}  // namespace ncomm
