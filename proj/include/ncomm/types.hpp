// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ncomm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical knobs shared by every tolerance-aware operation.
///
///   eps_rank     relative singular-value cutoff for rank and nullspace decisions
///   eps_cluster  eigenvalue grouping width, relative to max(1, ||M||_F)
///   eps_zero     relative matrix-norm zero test
///   seed         seeds every randomized strategy (generic elements, trials)
struct ToleranceConfig {
  double eps_rank = 1e-9;
  double eps_cluster = 1e-8;
  double eps_zero = 1e-9;
  std::uint64_t seed = 1234567;

  void validate() const {
    auto in_unit = [](double e) { return e > 0.0 && e < 1.0; };
    if (!in_unit(eps_rank) || !in_unit(eps_cluster) || !in_unit(eps_zero)) {
      throw std::invalid_argument("ToleranceConfig: all epsilons must lie in (0, 1)");
    }
  }

  // Structural yes/no decisions (span membership, minimality, links) sit far
  // above the rounding floor (~1e-13) and far below genuine structure (~1e-1).
  double decision() const { return 1e3 * eps_zero; }
};

/// Thrown when an operation that requires a unital trace-preserving channel
/// receives one that is not; the message points at the unitization route.
class NonUnitalChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by decode() when a state has weight outside the component isometry range.
class SupportLeakageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncomm
