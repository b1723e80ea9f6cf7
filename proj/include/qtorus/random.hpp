// Copyright 2026 The qtorus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random matrices for examples, self-tests and property checks.

#pragma once

#include <cmath>
#include <random>

#include <Eigen/QR>

#include "qtorus/linalg.hpp"

namespace qtorus {

using Rng = std::mt19937_64;

inline ComplexMatrix random_gaussian(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix z(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  }
  return z;
}

/// Haar-distributed unitary (QR of a complex Ginibre matrix, R's diagonal
/// phases folded back into Q).
inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const ComplexMatrix z = random_gaussian(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

/// Haar unitary rescaled to determinant 1.
inline ComplexMatrix random_special_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix q = random_unitary(dim, rng);
  const Complex det = q.determinant();
  return q * std::polar(1.0, -std::arg(det) / static_cast<double>(dim));
}

/// (Z - Z^dagger) / 2 for Gaussian Z, scaled by `scale`.
inline ComplexMatrix random_anti_hermitian(std::size_t dim, Rng& rng, double scale = 1.0) {
  const ComplexMatrix z = random_gaussian(dim, rng);
  return scale * 0.5 * (z - z.adjoint());
}

}  // namespace qtorus
