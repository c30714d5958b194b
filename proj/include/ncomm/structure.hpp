// SPDX-License-Identifier: Apache-2.0
//
// The structure engine. Starting from the noise commutant A' as a linear
// span, it produces the maximal family of mutually orthogonal minimal
// reducing projections (Part I), partitions them into linked classes
// (Part II), builds matrix units and a structuring unitary for each class,
// and assembles the Wedderburn record
//
//     A  ~  (M_{n_1} (x) 1_{m_1}) (+) ... (+) (M_{n_d} (x) 1_{m_d}),
//
// where n_k is the common rank of the class members and m_k the class size.
#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncomm/channel.hpp"
#include "ncomm/commutant.hpp"
#include "ncomm/linalg.hpp"
#include "ncomm/operator_span.hpp"
#include "ncomm/types.hpp"

namespace ncomm {

struct Projection {
  Matrix matrix;
  int rank = 0;
};

inline Projection make_projection(const Matrix& p, const ToleranceConfig& tol) {
  require_square(p, "make_projection");
  const double eps = tol.decision() * std::max(1.0, p.norm());
  if ((p - p.adjoint()).norm() > eps || (p * p - p).norm() > eps) {
    throw std::invalid_argument("make_projection: not a Hermitian idempotent within tolerance");
  }
  const double tr = p.trace().real();
  const int rank = static_cast<int>(std::lround(tr));
  if (rank < 1 || std::abs(tr - rank) > tol.eps_zero * static_cast<double>(p.rows())) {
    throw std::invalid_argument("make_projection: trace does not round to a positive rank");
  }
  return {p, rank};
}

/// Orthonormal basis of the range of a projection, one column per rank.
inline Matrix range_basis(const Projection& p) {
  Eigen::JacobiSVD<Matrix> svd(p.matrix, Eigen::ComputeThinU);
  const RealVector sigma = svd.singularValues();
  int r = 0;
  while (r < sigma.size() && sigma(r) > 0.5) ++r;
  if (r != p.rank) {
    throw std::runtime_error("range_basis: numerical rank disagrees with the projection trace");
  }
  return svd.matrixU().leftCols(r);
}

/// The unique maximal family of mutually orthogonal minimal reducing
/// projections; they sum to the identity.
struct MinimalFamily {
  std::vector<Projection> projections;

  int size() const { return static_cast<int>(projections.size()); }
};

enum class FamilyStrategy { always_recursive, randomized_generic };
enum class LinkMethod { corner, signature, subset_enumeration };

/// Compression {P B P : B in span} of a span by one of its projections,
/// orthonormalized and still expressed on the full space (Fix of the
/// compressed channel equals P A' P when P is reducing).
inline OperatorSpan compress_span(const OperatorSpan& span, const Projection& p,
                                  const ToleranceConfig& tol) {
  if (p.matrix.rows() != span.dim) {
    throw std::invalid_argument("compress_span: dimension mismatch");
  }
  if (!span.contains(p.matrix, tol.decision())) {
    throw std::invalid_argument(
        "compress_span: the projection does not belong to the span, so the compression "
        "identity P C' P = (C P)' does not apply");
  }
  std::vector<Matrix> compressed;
  compressed.reserve(span.basis.size());
  for (const Matrix& b : span.basis) compressed.push_back(p.matrix * b * p.matrix);
  return orthonormalize_span(compressed, tol, SpanLabel::compression);
}

/// P is minimal in the commutant iff every compression P B P of a basis
/// element is the scalar tr(P B P)/rank(P) times P.
inline bool is_minimal(const Projection& p, const OperatorSpan& commutant,
                       const ToleranceConfig& tol) {
  if (!commutant.contains(p.matrix, tol.decision())) {
    throw std::invalid_argument("is_minimal: projection does not belong to the commutant span");
  }
  for (const Matrix& b : commutant.basis) {
    const Matrix pbp = p.matrix * b * p.matrix;
    const Complex lambda = pbp.trace() / static_cast<double>(p.rank);
    if ((pbp - lambda * p.matrix).norm() > tol.decision() * std::max(1.0, pbp.norm())) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline bool scalar_on_span(const Matrix& pbp, const Matrix& p, int rank, const ToleranceConfig& tol) {
  const Complex lambda = pbp.trace() / static_cast<double>(rank);
  return (pbp - lambda * p).norm() <= tol.decision() * std::max(1.0, pbp.norm());
}

// Minimality relative to a local span whose membership is known by construction.
inline bool minimal_in(const Projection& p, const OperatorSpan& span, const ToleranceConfig& tol) {
  for (const Matrix& b : span.basis) {
    if (!scalar_on_span(p.matrix * b * p.matrix, p.matrix, p.rank, tol)) return false;
  }
  return true;
}

inline bool non_scalar(const Matrix& h, double eps) {
  const int d = static_cast<int>(h.rows());
  const Matrix dev = h - (h.trace() / static_cast<double>(d)) * identity(d);
  return dev.norm() > eps;
}

// Part I work-horse on a (sub)space of dimension s. The span is a
// dagger-closed unital algebra of s x s operators (a commutant or a
// compression of one); returns mutually orthogonal minimal projections
// summing to I_s. The generic strategy draws one random real combination of
// the Hermitian spanning set, whose spectral projections are the whole family
// for a generic draw; accidental degeneracies surface as failed minimality
// tests and are resolved by recursing into the offending projection, exactly
// like the always-recursive strategy.
inline std::vector<Matrix> family_on_subspace(const OperatorSpan& span, FamilyStrategy strategy,
                                              std::mt19937_64& rng, const ToleranceConfig& tol,
                                              int depth) {
  const int s = span.dim;
  // every level strictly shrinks the subspace, so depth is bounded by the
  // original dimension; anything past desk scale is a logic error
  if (depth > 64) {
    throw std::runtime_error("minimal_family: recursion failed to terminate");
  }
  if (span.size() <= 1) {
    return {identity(s)};
  }

  const std::vector<Matrix> herm = hermitian_spanning_set(span, tol);

  Matrix t;
  bool have_t = false;
  if (strategy == FamilyStrategy::randomized_generic) {
    std::normal_distribution<double> g;
    for (int attempt = 0; attempt < 3 && !have_t; ++attempt) {
      Matrix draw = Matrix::Zero(s, s);
      for (const Matrix& h : herm) draw += g(rng) * h;
      if (non_scalar(draw, tol.decision() * std::max(1.0, draw.norm()))) {
        t = draw;
        have_t = true;
      }
    }
  }
  if (!have_t) {
    for (const Matrix& h : herm) {
      if (non_scalar(h, tol.decision())) {
        t = h;
        have_t = true;
        break;
      }
    }
  }
  if (!have_t) {
    throw std::runtime_error("minimal_family: span claims dimension > 1 but has only scalar elements");
  }

  std::vector<Matrix> family;
  for (const auto& [lambda, proj] : spectral_projections(t, tol)) {
    Projection p = make_projection(proj, tol);
    if (minimal_in(p, span, tol)) {
      family.push_back(p.matrix);
      continue;
    }
    // Restrict to the range of p and recurse: V maps C^r into C^s.
    const Matrix v = range_basis(p);
    std::vector<Matrix> restricted;
    restricted.reserve(span.basis.size());
    for (const Matrix& b : span.basis) restricted.push_back(v.adjoint() * b * v);
    const OperatorSpan sub = orthonormalize_span(restricted, tol, SpanLabel::compression);
    for (const Matrix& q : family_on_subspace(sub, strategy, rng, tol, depth + 1)) {
      family.push_back(v * q * v.adjoint());
    }
  }
  return family;
}

}  // namespace detail

/// Part I: the unique maximal family of mutually orthogonal minimal
/// projections in the commutant, summing to the identity. A scalar commutant
/// yields the single-member family {I}.
inline MinimalFamily minimal_family(const OperatorSpan& commutant, const ToleranceConfig& tol,
                                    FamilyStrategy strategy = FamilyStrategy::randomized_generic) {
  if (commutant.size() == 0) {
    throw std::invalid_argument("minimal_family: empty commutant span");
  }
  if (!commutant.contains(identity(commutant.dim), tol.decision())) {
    throw std::invalid_argument("minimal_family: the span does not contain the identity");
  }
  std::mt19937_64 rng(tol.seed);
  MinimalFamily family;
  for (const Matrix& p : detail::family_on_subspace(commutant, strategy, rng, tol, 0)) {
    family.projections.push_back(make_projection(p, tol));
  }

  Matrix total = Matrix::Zero(commutant.dim, commutant.dim);
  for (const Projection& p : family.projections) total += p.matrix;
  if ((total - identity(commutant.dim)).norm() > tol.decision() * commutant.dim) {
    throw std::runtime_error("minimal_family: projections do not resolve the identity");
  }
  return family;
}

/// Joint eigenvalue tuple (lambda_k) with A_k xi = lambda_k xi, or nothing if
/// xi fails to be a joint eigenvector within tolerance.
inline std::optional<std::vector<Complex>> joint_eigenvalue_signature(
    const std::vector<Matrix>& kraus, const Vector& xi, const ToleranceConfig& tol) {
  if (kraus.empty()) throw std::invalid_argument("joint_eigenvalue_signature: empty operator list");
  if (std::abs(xi.norm() - 1.0) > tol.decision()) {
    throw std::invalid_argument("joint_eigenvalue_signature: vector must be normalized");
  }
  std::vector<Complex> sig;
  sig.reserve(kraus.size());
  for (const Matrix& a : kraus) {
    if (a.rows() != xi.size()) throw std::invalid_argument("joint_eigenvalue_signature: dimension mismatch");
    const Complex mu = xi.dot(a * xi);  // Eigen dot conjugates the left argument
    if ((a * xi - mu * xi).norm() > tol.decision() * std::max(1.0, a.norm())) {
      return std::nullopt;
    }
    sig.push_back(mu);
  }
  return sig;
}

/// A linked class: family members carrying unitarily equivalent restrictions
/// of the algebra. Its central projection (the member sum) is a minimal
/// central projection of A.
struct LinkedClass {
  std::vector<int> member_indices;  // ascending indices into the family
  int block_rank = 0;               // n_k, the common member rank
  int multiplicity = 0;             // m_k = member count
  Projection central_projection;
};

namespace detail {

inline LinkedClass build_class(const std::vector<int>& members, const MinimalFamily& family,
                               const ToleranceConfig& tol) {
  LinkedClass cls;
  cls.member_indices = members;
  std::sort(cls.member_indices.begin(), cls.member_indices.end());
  cls.block_rank = family.projections[members.front()].rank;
  cls.multiplicity = static_cast<int>(members.size());
  const int dim = static_cast<int>(family.projections.front().matrix.rows());
  Matrix sum = Matrix::Zero(dim, dim);
  for (int j : cls.member_indices) sum += family.projections[j].matrix;
  cls.central_projection = make_projection(sum, tol);
  return cls;
}

// Pairwise corner test with transitive closure: P_i and P_j are linked iff
// some commutant element has a nonzero corner P_i B P_j.
inline std::vector<std::vector<int>> corner_partition(const MinimalFamily& family,
                                                      const OperatorSpan& commutant,
                                                      const ToleranceConfig& tol) {
  const int n = family.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (family.projections[i].rank != family.projections[j].rank) continue;
      for (const Matrix& b : commutant.basis) {
        const Matrix corner = family.projections[i].matrix * b * family.projections[j].matrix;
        if (corner.norm() > tol.decision()) {
          parent[find(i)] = find(j);
          break;
        }
      }
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

// Rank-one joint-eigenvalue test: classes are the fibers of the signature map.
inline std::vector<std::vector<int>> signature_partition(const MinimalFamily& family,
                                                         const std::vector<Matrix>& kraus,
                                                         const ToleranceConfig& tol) {
  std::vector<std::vector<Complex>> signatures;
  for (const Projection& p : family.projections) {
    if (p.rank != 1) {
      throw std::invalid_argument(
          "detect_links: the signature method applies only to families of rank-one projections");
    }
    const Vector xi = range_basis(p).col(0);
    const auto sig = joint_eigenvalue_signature(kraus, xi, tol);
    if (!sig) {
      throw std::runtime_error(
          "detect_links: a rank-one family member is not a joint eigenvector; "
          "the family is inconsistent with the Kraus operators");
    }
    signatures.push_back(*sig);
  }
  double scale = 1.0;
  for (const Matrix& a : kraus) scale = std::max(scale, a.norm());
  auto same = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (std::abs(a[k] - b[k]) > tol.eps_cluster * scale) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < family.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (same(signatures[cls.front()], signatures[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

// Exhaustive definition-chasing test: a subset S of one rank group is linked
// iff P_S = sum_{j in S} P_j commutes with every commutant element and no
// proper subset does. Exponential in the group size; kept as an oracle for
// desk-scale problems.
inline std::vector<std::vector<int>> subset_partition(const MinimalFamily& family,
                                                      const OperatorSpan& commutant,
                                                      const ToleranceConfig& tol) {
  const int dim = static_cast<int>(family.projections.front().matrix.rows());
  auto commutes_with_span = [&](const Matrix& p) {
    for (const Matrix& b : commutant.basis) {
      if ((p * b - b * p).norm() > tol.decision() * std::max(1.0, p.norm())) return false;
    }
    return true;
  };

  // group member indices by rank
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < family.size(); ++i) {
    bool placed = false;
    for (auto& g : groups) {
      if (family.projections[g.front()].rank == family.projections[i].rank) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }

  std::vector<std::vector<int>> classes;
  for (const auto& group : groups) {
    const int g = static_cast<int>(group.size());
    if (g > 20) {
      throw std::invalid_argument("detect_links: subset enumeration is infeasible for this family");
    }
    std::vector<bool> assigned(g, false);
    int remaining = g;
    for (int size = 1; size <= g && remaining > 0; ++size) {
      for (unsigned mask = 1; mask < (1u << g); ++mask) {
        if (std::popcount(mask) != size) continue;
        bool clean = true;
        for (int b = 0; b < g; ++b) {
          if ((mask >> b) & 1u) clean = clean && !assigned[b];
        }
        if (!clean) continue;
        Matrix p = Matrix::Zero(dim, dim);
        std::vector<int> members;
        for (int b = 0; b < g; ++b) {
          if ((mask >> b) & 1u) {
            p += family.projections[group[b]].matrix;
            members.push_back(group[b]);
          }
        }
        if (commutes_with_span(p)) {
          classes.push_back(members);
          for (int b = 0; b < g; ++b) {
            if ((mask >> b) & 1u) assigned[b] = true;
          }
          remaining -= size;
        }
      }
    }
    if (remaining != 0) {
      throw std::runtime_error("detect_links: subset enumeration failed to partition a rank group");
    }
  }
  return classes;
}

}  // namespace detail

/// Part II: partition the family into linked classes. Links only occur
/// between members of equal rank. The default corner method decides the pair
/// relation P_i A' P_j != 0 and takes its transitive closure; signature
/// classifies rank-one families through joint eigenvalue tuples; subset
/// enumeration chases the definition directly and serves as an oracle.
inline std::vector<LinkedClass> detect_links(const MinimalFamily& family,
                                             const OperatorSpan& commutant,
                                             const std::vector<Matrix>& kraus,
                                             const ToleranceConfig& tol,
                                             LinkMethod method = LinkMethod::corner) {
  if (family.size() == 0) throw std::invalid_argument("detect_links: empty family");
  std::vector<std::vector<int>> partition;
  switch (method) {
    case LinkMethod::corner:
      partition = detail::corner_partition(family, commutant, tol);
      break;
    case LinkMethod::signature:
      partition = detail::signature_partition(family, kraus, tol);
      break;
    case LinkMethod::subset_enumeration:
      partition = detail::subset_partition(family, commutant, tol);
      break;
  }
  std::vector<LinkedClass> classes;
  classes.reserve(partition.size());
  for (const auto& members : partition) {
    for (int j : members) {
      if (family.projections[j].rank != family.projections[members.front()].rank) {
        throw std::runtime_error("detect_links: a class mixes members of different ranks");
      }
    }
    classes.push_back(detail::build_class(members, family, tol));
  }
  return classes;
}

/// Matrix units of one linked class: E_ii are the members, E_ij for i != j
/// partial isometries from the polar part of a commutant corner, routed
/// through the lowest-index member so that E_ij = E_i1 E_1j by construction.
/// The gauge is fixed by making the largest entry of the first nonzero column
/// of each E_1j real positive.
struct MatrixUnitSystem {
  int m = 0;
  std::vector<Matrix> units;  // row-major m x m

  const Matrix& at(int i, int j) const { return units[static_cast<std::size_t>(i) * m + j]; }
};

inline MatrixUnitSystem matrix_units(const LinkedClass& cls, const MinimalFamily& family,
                                     const OperatorSpan& commutant, const ToleranceConfig& tol) {
  const int m = cls.multiplicity;
  const int n = cls.block_rank;
  const int dim = commutant.dim;
  MatrixUnitSystem sys;
  sys.m = m;
  sys.units.assign(static_cast<std::size_t>(m) * m, Matrix::Zero(dim, dim));

  const Projection& first = family.projections[cls.member_indices.front()];
  std::vector<Matrix> from_first(m);  // E_{1j}
  from_first[0] = first.matrix;

  for (int j = 1; j < m; ++j) {
    const Projection& pj = family.projections[cls.member_indices[j]];
    Matrix corner;
    double best = 0.0;
    for (const Matrix& b : commutant.basis) {
      Matrix c = first.matrix * b * pj.matrix;
      const double norm = c.norm();
      if (norm > best) {
        best = norm;
        corner = std::move(c);
      }
    }
    if (best <= tol.decision()) {
      throw std::runtime_error(
          "matrix_units: no nonzero commutant corner between linked members; link detection "
          "and the class structure disagree");
    }
    // Schur: the corner is a scalar multiple of the unitary intertwiner, so
    // its polar part is the partial isometry we want.
    Eigen::JacobiSVD<Matrix> svd(corner, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues()(n - 1) <= tol.decision() * svd.singularValues()(0)) {
      throw std::runtime_error("matrix_units: commutant corner is rank deficient on the class blocks");
    }
    Matrix e1j = svd.matrixU().leftCols(n) * svd.matrixV().leftCols(n).adjoint();

    // gauge fix
    for (int col = 0; col < dim; ++col) {
      const double colnorm = e1j.col(col).norm();
      if (colnorm > tol.decision()) {
        Eigen::Index imax = 0;
        e1j.col(col).cwiseAbs().maxCoeff(&imax);
        const Complex z = e1j(imax, col);
        e1j *= std::conj(z) / std::abs(z);
        break;
      }
    }
    from_first[j] = e1j;
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        sys.units[static_cast<std::size_t>(i) * m + j] = family.projections[cls.member_indices[i]].matrix;
      } else {
        sys.units[static_cast<std::size_t>(i) * m + j] = from_first[i].adjoint() * from_first[j];
      }
    }
  }
  return sys;
}

struct WedderburnComponent {
  LinkedClass cls;
  MatrixUnitSystem units;
};

/// Full structural record of the interaction algebra of a unital channel.
struct WedderburnStructure {
  int dim = 0;
  std::vector<WedderburnComponent> components;  // canonical order
  MinimalFamily family;
  OperatorSpan commutant;
  Matrix structuring_unitary;

  int commutant_dim() const { return commutant.size(); }
};

/// Unitary whose columns carry, per component and per multiplicity copy, an
/// orthonormal basis of the copy's range transported coherently through the
/// matrix units. Conjugating any algebra element yields block-diagonal form
/// with m_k identical n_k x n_k blocks per component; the commutant
/// correspondingly conjugates to M_{m_k} (x) 1_{n_k} blocks.
inline Matrix structuring_unitary(const std::vector<WedderburnComponent>& components,
                                  const MinimalFamily& family, int dim,
                                  const ToleranceConfig& tol) {
  Matrix u(dim, dim);
  int col = 0;
  for (const WedderburnComponent& comp : components) {
    const int n = comp.cls.block_rank;
    const Matrix v1 = range_basis(family.projections[comp.cls.member_indices.front()]);
    for (int copy = 0; copy < comp.cls.multiplicity; ++copy) {
      // E_{copy,0} maps range(P_first) onto range(P_copy)
      const Matrix cols = comp.units.at(copy, 0) * v1;
      u.middleCols(col, n) = cols;
      col += n;
    }
  }
  if (col != dim) throw std::runtime_error("structuring_unitary: column count does not match dim");
  if ((u.adjoint() * u - identity(dim)).norm() > 10 * tol.decision() * dim) {
    throw std::runtime_error("structuring_unitary: matrix unit system produced a non-unitary result");
  }
  return u;
}

namespace detail {

inline void sort_canonically(std::vector<LinkedClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const LinkedClass& a, const LinkedClass& b) {
    if (a.block_rank != b.block_rank) return a.block_rank > b.block_rank;
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return a.member_indices.front() < b.member_indices.front();
  });
}

}  // namespace detail

/// The full pipeline: commutant, minimal family, links, units, structuring
/// unitary, plus the Wedderburn dimension identities as hard consistency
/// checks. Requires a unital trace-preserving channel.
inline WedderburnStructure analyze(const KrausChannel& ch, const ToleranceConfig& tol = {},
                                   FamilyStrategy strategy = FamilyStrategy::randomized_generic,
                                   LinkMethod method = LinkMethod::corner) {
  tol.validate();
  if (!ch.trace_preserving || !ch.unital) {
    throw NonUnitalChannelError(
        "analyze: the channel is not unital and trace preserving, so Fix(Phi) need not equal "
        "the noise commutant; for normal noise operators, unitize() builds an equivalent "
        "unital channel first");
  }

  WedderburnStructure st;
  st.dim = ch.dim;
  st.commutant = commutant_basis(ch.kraus, tol);
  st.family = minimal_family(st.commutant, tol, strategy);

  std::vector<LinkedClass> classes = detect_links(st.family, st.commutant, ch.kraus, tol, method);
  detail::sort_canonically(classes);

  st.components.reserve(classes.size());
  for (LinkedClass& cls : classes) {
    WedderburnComponent comp;
    comp.units = matrix_units(cls, st.family, st.commutant, tol);
    comp.cls = std::move(cls);
    st.components.push_back(std::move(comp));
  }
  st.structuring_unitary = structuring_unitary(st.components, st.family, st.dim, tol);

  // Wedderburn bookkeeping: sum n m = dim, sum m^2 = dim A', sum n^2 = dim A.
  int dim_total = 0, comm_total = 0, alg_total = 0;
  for (const WedderburnComponent& c : st.components) {
    dim_total += c.cls.block_rank * c.cls.multiplicity;
    comm_total += c.cls.multiplicity * c.cls.multiplicity;
    alg_total += c.cls.block_rank * c.cls.block_rank;
  }
  if (dim_total != st.dim) {
    throw std::runtime_error("analyze: sum n_k m_k does not equal the space dimension");
  }
  if (comm_total != st.commutant.size()) {
    throw std::runtime_error("analyze: sum m_k^2 does not equal the commutant dimension");
  }
  const OperatorSpan algebra = algebra_basis(ch.kraus, tol);
  if (alg_total != algebra.size()) {
    throw std::runtime_error("analyze: sum n_k^2 does not equal the interaction algebra dimension");
  }
  return st;
}

enum class StructureView { algebra, commutant };

/// Canonical rendering in the component order of the structure, e.g.
/// "M4 ⊕ (M2⊗I2)" for the algebra view and "C·I4 ⊕ (I2⊗M2)" for the
/// commutant view of the same structure.
inline std::string structure_string(const WedderburnStructure& st, StructureView view) {
  std::string out;
  for (std::size_t k = 0; k < st.components.size(); ++k) {
    const int n = st.components[k].cls.block_rank;
    const int m = st.components[k].cls.multiplicity;
    if (k > 0) out += " ⊕ ";
    if (view == StructureView::algebra) {
      if (n == 1) {
        out += "C·I" + std::to_string(m);
      } else if (m == 1) {
        out += "M" + std::to_string(n);
      } else {
        out += "(M" + std::to_string(n) + "⊗I" + std::to_string(m) + ")";
      }
    } else {
      if (m == 1) {
        out += "C·I" + std::to_string(n);
      } else if (n == 1) {
        out += "M" + std::to_string(m);
      } else {
        out += "(I" + std::to_string(n) + "⊗M" + std::to_string(m) + ")";
      }
    }
  }
  return out;
}

}  // namespace ncomm
