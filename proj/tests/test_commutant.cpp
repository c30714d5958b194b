// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncomm/commutant.hpp"
#include "fixtures.hpp"

using namespace ncomm;

namespace {
const ToleranceConfig kTol;

Matrix unit(int dim, int i, int j) {
  Matrix m = Matrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

// Independent oracle for the interaction algebra: grow span{I} under left
// multiplication by the generators until the dimension stabilizes.
OperatorSpan word_span(const std::vector<Matrix>& gens, const ToleranceConfig& tol) {
  const int d = static_cast<int>(gens.front().rows());
  OperatorSpan span = orthonormalize_span({identity(d)}, tol, SpanLabel::algebra);
  for (int round = 0; round < d * d; ++round) {
    std::vector<Matrix> next = span.basis;
    for (const Matrix& b : span.basis) {
      for (const Matrix& g : gens) next.push_back(g * b);
    }
    OperatorSpan grown = orthonormalize_span(next, tol, SpanLabel::algebra);
    if (grown.size() == span.size()) break;
    span = std::move(grown);
  }
  return span;
}
}  // namespace

TEST_CASE("commutant_basis of single and irreducible generator sets", "[commutant]") {
  const OperatorSpan diag = commutant_basis({fx::pauli_z()}, kTol);
  REQUIRE(diag.size() == 2);
  REQUIRE(diag.contains(unit(2, 0, 0), 1e-10));
  REQUIRE(diag.contains(unit(2, 1, 1), 1e-10));

  const OperatorSpan scalars = commutant_basis({fx::pauli_x(), fx::pauli_z()}, kTol);
  REQUIRE(scalars.size() == 1);
  REQUIRE(scalars.contains(identity(2), 1e-10));

  REQUIRE_THROWS_AS(commutant_basis({}, kTol), std::invalid_argument);
}

TEST_CASE("commutant of the correlated dephasing pair has the published shape", "[commutant]") {
  const KrausChannel zz = build_zz_damping(0.25);
  const OperatorSpan span = commutant_basis(zz.kraus, kTol);
  REQUIRE(span.size() == 8);
  // free entries a11, a14, a41, a44, a22, a23, a32, a33
  for (auto [i, j] : {std::pair{0, 0}, {0, 3}, {3, 0}, {3, 3}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    REQUIRE(span.contains(unit(4, i, j), 1e-10));
  }
  REQUIRE_FALSE(span.contains(unit(4, 0, 1), 1e-6));
}

TEST_CASE("fixed_point_basis dimensions", "[commutant]") {
  REQUIRE(fixed_point_basis(make_channel({identity(3)}), kTol).size() == 9);
  REQUIRE(fixed_point_basis(build_phase_damping(0.25), kTol).size() == 2);
  REQUIRE(fixed_point_basis(build_collective(3), kTol).size() == 5);
}

TEST_CASE("algebra_basis via the double commutant", "[commutant]") {
  REQUIRE(algebra_basis({fx::pauli_z()}, kTol).size() == 2);
  REQUIRE(algebra_basis({identity(4)}, kTol).size() == 1);
}

TEST_CASE("3-qubit collective interaction algebra has dimension 20", "[commutant]") {
  const KrausChannel ch = build_collective(3);
  const OperatorSpan algebra = algebra_basis(ch.kraus, kTol);
  REQUIRE(algebra.size() == 20);  // 2^2 from M2 (x) I2 plus 4^2 from M4

  const OperatorSpan words = word_span(ch.kraus, kTol);
  REQUIRE(words.size() == 20);
  REQUIRE(span_distance(algebra, words) <= 1e-9);
}

TEST_CASE("hermitian_spanning_set basics", "[commutant]") {
  const OperatorSpan diag = orthonormalize_span({identity(2), fx::pauli_z()}, kTol);
  const auto herm = hermitian_spanning_set(diag, kTol);
  REQUIRE(herm.size() == 2);
  for (const Matrix& h : herm) {
    REQUIRE((h - h.adjoint()).norm() <= 1e-12);
    REQUIRE(diag.contains(h, 1e-10));
  }

  const OperatorSpan offdiag = orthonormalize_span({identity(2), unit(2, 0, 1), unit(2, 1, 0)}, kTol);
  const auto herm3 = hermitian_spanning_set(offdiag, kTol);
  REQUIRE(herm3.size() == 3);

  const OperatorSpan not_closed = orthonormalize_span({unit(2, 0, 1)}, kTol);
  REQUIRE_THROWS_AS(hermitian_spanning_set(not_closed, kTol), std::invalid_argument);
}

TEST_CASE("hermitian_spanning_set of the 3-qubit commutant generators", "[commutant]") {
  const std::vector<Matrix> gens = {fx::b_r_3qubit(), fx::b_s_3qubit(), fx::b_t_3qubit(),
                                    fx::b_u_3qubit(), fx::b_u_3qubit().adjoint().eval()};
  const OperatorSpan span = orthonormalize_span(gens, kTol);
  const auto herm = hermitian_spanning_set(span, kTol);
  REQUIRE(herm.size() == 5);
  for (const Matrix& h : herm) {
    REQUIRE((h - h.adjoint()).norm() <= 1e-12);
    REQUIRE(span.contains(h, 1e-10));
  }
}

TEST_CASE("fixed points equal the commutant for unital channels", "[commutant]") {
  std::vector<KrausChannel> channels = {build_phase_damping(0.25), build_zz_damping(0.25),
                                        build_two_qubit_dephasing(0.25), build_collective(2),
                                        build_collective(3)};
  std::mt19937_64 rng(71);
  for (int k = 0; k < 5; ++k) {
    channels.push_back(fx::random_mixed_unitary_channel(2 + static_cast<int>(rng() % 7),
                                                        2 + static_cast<int>(rng() % 3), rng));
  }
  for (const KrausChannel& ch : channels) {
    const OperatorSpan fixed = fixed_point_basis(ch, kTol);
    const OperatorSpan comm = commutant_basis(ch.kraus, kTol);
    REQUIRE(fixed.size() == comm.size());
    REQUIRE(span_distance(fixed, comm) <= 10 * kTol.eps_zero);
  }
}

TEST_CASE("the commutant does not depend on the Kraus representation", "[commutant]") {
  std::mt19937_64 rng(83);
  for (const KrausChannel& ch : {build_zz_damping(0.35), build_two_qubit_dephasing(0.6)}) {
    const int n = static_cast<int>(ch.kraus.size());
    const Matrix u = haar_unitary(n, rng);
    std::vector<Matrix> remixed(n, Matrix::Zero(ch.dim, ch.dim));
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) remixed[k] += u(k, j) * ch.kraus[j];
    }
    // remixing by a unitary preserves the channel, hence the commutant
    const KrausChannel ch2 = make_channel(remixed, kTol);
    REQUIRE(ch2.unital);
    REQUIRE(ch2.trace_preserving);
    REQUIRE(span_distance(commutant_basis(ch.kraus, kTol), commutant_basis(ch2.kraus, kTol)) <= 1e-9);
  }
}

TEST_CASE("double commutant stabilizes", "[commutant]") {
  std::mt19937_64 rng(97);
  const KrausChannel ch = fx::random_mixed_unitary_channel(6, 3, rng);
  const OperatorSpan once = commutant_basis(ch.kraus, kTol);
  const OperatorSpan algebra = algebra_basis(ch.kraus, kTol);
  const OperatorSpan thrice = commutant_basis(algebra.basis, kTol);
  REQUIRE(span_distance(once, thrice) <= 1e-9);
}

TEST_CASE("every commutant span contains the identity", "[commutant]") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 6; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 6);
    const KrausChannel ch = fx::random_mixed_unitary_channel(dim, 2 + static_cast<int>(rng() % 3), rng);
    const OperatorSpan comm = commutant_basis(ch.kraus, kTol);
    REQUIRE(comm.residual(identity(dim)) <= 1e-10 * std::sqrt(static_cast<double>(dim)));
  }
}

TEST_CASE("spectral projections of fixed Hermitian operators stay fixed", "[commutant]") {
  const KrausChannel ch = build_zz_damping(0.3);
  const OperatorSpan fixed = fixed_point_basis(ch, kTol);
  const auto herm = hermitian_spanning_set(fixed, kTol);
  std::mt19937_64 rng(103);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 5; ++trial) {
    Matrix t = Matrix::Zero(ch.dim, ch.dim);
    for (const Matrix& h : herm) t += g(rng) * h;
    for (const auto& [lam, p] : spectral_projections(t, kTol)) {
      REQUIRE(fixed.contains(p, 1e-8));
      REQUIRE((ch.apply(p) - p).norm() <= 1e-9);
    }
  }
}

TEST_CASE("unitized operators keep their commutant", "[commutant]") {
  // exp(i t) is injective on these spectra, so {T_k}' = {exp(i T_k)}'.
  std::mt19937_64 rng(107);
  const Matrix bx = collective_sum(2, fx::pauli_x());
  const Matrix bz = collective_sum(2, fx::pauli_z());
  const KrausChannel ch = unitize({bx, bz}, kTol);
  REQUIRE(span_distance(commutant_basis({bx, bz}, kTol), commutant_basis(ch.kraus, kTol)) <= 1e-9);

  // block-diagonal Hermitian pair with a planted common commutant
  const Matrix h1 = kron(random_hermitian(2, rng), identity(2));
  const Matrix h2 = kron(random_hermitian(2, rng), identity(2));
  const KrausChannel ch2 = unitize({h1, h2}, kTol);
  REQUIRE(span_distance(commutant_basis({h1, h2}, kTol), commutant_basis(ch2.kraus, kTol)) <= 1e-9);
}

TEST_CASE("collective commutant shortcut through the Pauli sums", "[commutant]") {
  const KrausChannel ch = build_collective(3);
  const Matrix bx = collective_sum(3, fx::pauli_x());
  const Matrix bz = collective_sum(3, fx::pauli_z());
  const OperatorSpan via_channel = commutant_basis(ch.kraus, kTol);
  const OperatorSpan via_sums = commutant_basis({bx, bz}, kTol);
  REQUIRE(via_channel.size() == 5);
  REQUIRE(via_sums.size() == 5);
  REQUIRE(span_distance(via_channel, via_sums) <= 1e-8);
}
