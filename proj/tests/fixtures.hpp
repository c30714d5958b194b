// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures: Pauli operators, the published 3- and 4-qubit collective
// noise commutant generators used as frozen spectral fixtures, and seeded
// random channel factories.
#pragma once

#include <random>
#include <vector>

#include "ncomm/channel.hpp"
#include "ncomm/linalg.hpp"
#include "ncomm/types.hpp"

namespace fx {

using ncomm::Complex;
using ncomm::Matrix;
using ncomm::Vector;

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Matrix from_rows(int n, const std::vector<std::vector<double>>& rows) {
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Self-adjoint generator of the 3-qubit collective noise commutant whose
// characteristic polynomial is lambda^2 (lambda-1)^4 (lambda+2)^2.
inline Matrix b_r_3qubit() {
  return from_rows(8, {
      {1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, -1, 0, 1, 1, 0},
      {0, 1, 1, 0, -1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1},
  });
}

inline Matrix b_s_3qubit() {
  return from_rows(8, {
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, -1, 0, 0, 0},
      {0, 0, 0, 1, 0, -1, 0, 0},
      {0, 0, -1, 0, 1, 0, 0, 0},
      {0, 0, 0, -1, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  });
}

inline Matrix b_t_3qubit() {
  return from_rows(8, {
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, -1, 0},
      {0, -1, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, -1, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  });
}

inline Matrix b_u_3qubit() {
  return from_rows(8, {
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, -1, 0, 0},
      {0, 0, -1, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, -1, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  });
}

// Published spectral projections of b_r for eigenvalues 0 and -2.
inline Matrix p0_3qubit() {
  const double h = 0.5;
  return from_rows(8, {
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, h, -h, 0, 0, 0, 0, 0},
      {0, -h, h, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, h, -h, 0},
      {0, 0, 0, 0, 0, -h, h, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  });
}

inline Matrix p_minus2_3qubit() {
  const double s = 1.0 / 6.0, t = 1.0 / 3.0, u = 2.0 / 3.0;
  return from_rows(8, {
      {0, 0, 0, 0, 0, 0, 0, 0},
      {0, s, s, 0, -t, 0, 0, 0},
      {0, s, s, 0, -t, 0, 0, 0},
      {0, 0, 0, u, 0, -t, -t, 0},
      {0, -t, -t, 0, u, 0, 0, 0},
      {0, 0, 0, -t, 0, s, s, 0},
      {0, 0, 0, -t, 0, s, s, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  });
}

// Singlet-triplet style basis of the ampliated M2 component for three qubits.
inline Vector xi_0() {
  Vector v = Vector::Zero(8);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

inline Vector eta_0() {
  Vector v = Vector::Zero(8);
  v(5) = 1.0 / std::sqrt(2.0);
  v(6) = -1.0 / std::sqrt(2.0);
  return v;
}

inline Vector xi_minus2() {
  Vector v = Vector::Zero(8);
  v(1) = 1.0;
  v(2) = 1.0;
  v(4) = -2.0;
  return v / std::sqrt(6.0);
}

inline Vector eta_minus2() {
  Vector v = Vector::Zero(8);
  v(3) = 2.0;
  v(5) = -1.0;
  v(6) = -1.0;
  return v / std::sqrt(6.0);
}

// Self-adjoint generator of the 4-qubit collective noise commutant with
// characteristic polynomial (l+3)(l+1)^3 l^8 (l-1)(l-3)^3.
inline Matrix b_0_4qubit() {
  return from_rows(16, {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0},
      {0, 0, 0, 1, 0, 1, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, -1, 0, -1, 0, 0},
      {0, 0, -1, 0, -1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, -2, 0, 0, 0, 1, 0, 1, 0, 0, 0},
      {0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  });
}

/// Random-mixed-unitary channel: Kraus sqrt(w_j) U_j with Haar unitaries.
inline ncomm::KrausChannel random_mixed_unitary_channel(int dim, int terms, std::mt19937_64& rng,
                                                        const ncomm::ToleranceConfig& tol = {}) {
  std::uniform_real_distribution<double> u(0.2, 1.0);
  std::vector<double> w(terms);
  double total = 0.0;
  for (double& x : w) {
    x = u(rng);
    total += x;
  }
  std::vector<Matrix> kraus;
  kraus.reserve(terms);
  for (int j = 0; j < terms; ++j) {
    kraus.push_back(std::sqrt(w[j] / total) * ncomm::haar_unitary(dim, rng));
  }
  return ncomm::make_channel(kraus, tol);
}

}  // namespace fx
