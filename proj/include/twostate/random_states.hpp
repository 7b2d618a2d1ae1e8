#pragma once

// Seeded random states and local unitaries for property checks.

#include <cmath>
#include <vector>

#include "twostate/qcore.hpp"
#include "twostate/rng.hpp"

namespace twostate {

inline double standard_normal(Rng& rng) {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - rng.uniform();
  const double v = rng.uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

inline PureState random_state(int n_qubits, Rng& rng) {
  Vector v(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(standard_normal(rng), standard_normal(rng));
  return PureState::normalized(n_qubits, std::move(v));
}

inline Matrix2 random_unitary(Rng& rng) {
  // QR of a complex Gaussian matrix with the phases of R fixed.
  Matrix2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = Complex(standard_normal(rng), standard_normal(rng));
  Eigen::HouseholderQR<Matrix2> qr(g);
  Matrix2 q = qr.householderQ();
  const Matrix2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

inline LocalOperator random_local_operator(int n_qubits, Rng& rng) {
  std::vector<Matrix2> factors;
  for (int q = 0; q < n_qubits; ++q) factors.push_back(random_unitary(rng));
  return LocalOperator(std::move(factors));
}

}  // namespace twostate
