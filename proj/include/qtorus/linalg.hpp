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

// Dense complex matrix kernel: Kronecker products, brackets, the Frobenius
// inner product, a cyclic Jacobi Hermitian eigensolver and the unitary
// exponential/logarithm pair built on it.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qtorus/errors.hpp"

namespace qtorus {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr std::size_t kDefaultMaxDim = 4096;
inline constexpr double kDefaultTol = 1e-9;
inline constexpr Complex kI{0.0, 1.0};

inline ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

inline std::size_t dim_of(const ComplexMatrix& m) {
  return static_cast<std::size_t>(m.rows());
}

/// Checks the ComplexMatrix invariants: square, non-empty, finite entries.
inline void validate(const ComplexMatrix& m, const char* what = "matrix") {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    detail::fail(ErrorCode::invalid_argument,
                 std::string(what) + ": matrix must be square with dim >= 1");
  }
  if (!m.allFinite()) {
    detail::fail(ErrorCode::invalid_argument,
                 std::string(what) + ": matrix has non-finite entries");
  }
}

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                             const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    detail::fail(ErrorCode::dimension_mismatch,
                 std::string(what) + ": dimension mismatch (" +
                     std::to_string(a.rows()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
}

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double unitarity_deviation(const ComplexMatrix& m) {
  return max_abs(m.adjoint() * m - identity(dim_of(m)));
}

inline double hermiticity_deviation(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

inline double anti_hermiticity_deviation(const ComplexMatrix& m) {
  return max_abs(m + m.adjoint());
}

inline bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol) {
  return m.rows() == m.cols() && unitarity_deviation(m) <= tol;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol) {
  return m.rows() == m.cols() && hermiticity_deviation(m) <= tol;
}

inline bool is_anti_hermitian(const ComplexMatrix& m,
                              double tol = kDefaultTol) {
  return m.rows() == m.cols() && anti_hermiticity_deviation(m) <= tol;
}

// ---------------------------------------------------------------------------
// Products and brackets

/// Kronecker product; block (j,k) of the result is a(j,k) * b.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                            std::size_t max_dim = kDefaultMaxDim) {
  validate(a, "tensor");
  validate(b, "tensor");
  const std::size_t da = dim_of(a);
  const std::size_t db = dim_of(b);
  if (da > max_dim / db) {
    detail::fail(ErrorCode::capacity,
                 "tensor: result dimension " + std::to_string(da) + "*" +
                     std::to_string(db) + " exceeds cap " +
                     std::to_string(max_dim));
  }
  const auto na = a.rows();
  const auto nb = b.rows();
  ComplexMatrix out(na * nb, na * nb);
  for (Eigen::Index j = 0; j < na; ++j) {
    for (Eigen::Index k = 0; k < na; ++k) {
      out.block(j * nb, k * nb, nb, nb) = a(j, k) * b;
    }
  }
  return out;
}

/// Left-to-right Kronecker product of all factors.
inline ComplexMatrix tensor_all(std::span<const ComplexMatrix> factors,
                                std::size_t max_dim = kDefaultMaxDim) {
  if (factors.empty()) return identity(1);
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = tensor(out, factors[i], max_dim);
  }
  return out;
}

inline ComplexMatrix commutator(const ComplexMatrix& a,
                                const ComplexMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a,
                                    const ComplexMatrix& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

/// Re tr(a^dagger b).
inline double frob_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "frob_inner");
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

inline double frob_norm(const ComplexMatrix& a) { return a.norm(); }

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition

struct HermEig {
  RealVector values;     // descending
  ComplexMatrix vectors; // columns are eigenvectors, h = W diag(values) W^dagger
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) acc += std::norm(a(i, j));
    }
  }
  return std::sqrt(acc);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation is
// G = diag(1, conj(e)) * [[c, s], [-s, c]] with e = a(p,q)/|a(p,q)|.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& w, Eigen::Index p,
                          Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex e = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -std::conj(e) * s;
  const Complex gqq = std::conj(e) * c;

  const Eigen::VectorXcd colp = a.col(p);
  const Eigen::VectorXcd colq = a.col(q);
  a.col(p) = colp * gpp + colq * gqp;
  a.col(q) = colp * gpq + colq * gqq;
  const Eigen::RowVectorXcd rowp = a.row(p);
  const Eigen::RowVectorXcd rowq = a.row(q);
  a.row(p) = std::conj(gpp) * rowp + std::conj(gqp) * rowq;
  a.row(q) = std::conj(gpq) * rowp + std::conj(gqq) * rowq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  const Eigen::VectorXcd wp = w.col(p);
  const Eigen::VectorXcd wq = w.col(q);
  w.col(p) = wp * gpp + wq * gqp;
  w.col(q) = wp * gpq + wq * gqq;
}

inline bool lexicographic_less(const Eigen::VectorXcd& x,
                               const Eigen::VectorXcd& y) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).real() != y(i).real()) return x(i).real() < y(i).real();
    if (x(i).imag() != y(i).imag()) return x(i).imag() < y(i).imag();
  }
  return false;
}

}  // namespace detail

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Eigenvalues are
/// returned in descending order; within a numerically degenerate cluster the
/// eigenvectors (each phase-fixed so its first non-negligible component is
/// real positive) are in descending lexicographic order.
inline HermEig herm_eig(const ComplexMatrix& h, double tol = kDefaultTol) {
  validate(h, "herm_eig");
  if (!is_hermitian(h, tol)) {
    detail::fail(ErrorCode::not_hermitian,
                 "herm_eig: input is not Hermitian (deviation " +
                     std::to_string(hermiticity_deviation(h)) + ")");
  }
  const auto n = h.rows();
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix w = ComplexMatrix::Identity(n, n);
  const double scale = a.norm();
  const double threshold = 1e-13 * scale;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= threshold) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        detail::jacobi_rotate(a, w, p, q);
      }
    }
  }

  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(w(i, j)) > 1e-12) {
        w.col(j) *= std::conj(w(i, j)) / std::abs(w(i, j));
        w(i, j) = std::abs(w(i, j));
        break;
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) {
                     return a(x, x).real() > a(y, y).real();
                   });
  const double tie = 1e-12 * std::max(1.0, scale);
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() &&
           a(order[start], order[start]).real() -
                   a(order[end], order[end]).real() <=
               tie) {
      ++end;
    }
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
              order.begin() + static_cast<std::ptrdiff_t>(end),
              [&](Eigen::Index x, Eigen::Index y) {
                return detail::lexicographic_less(w.col(y), w.col(x));
              });
    start = end;
  }

  HermEig out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = w.col(src);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exponential and logarithm

/// e^a for anti-Hermitian a, as W diag(e^{i lambda}) W^dagger with
/// (lambda, W) = herm_eig(-i a).
inline ComplexMatrix expm_antiherm(const ComplexMatrix& a,
                                   double tol = kDefaultTol) {
  validate(a, "expm_antiherm");
  if (!is_anti_hermitian(a, tol)) {
    detail::fail(ErrorCode::not_anti_hermitian,
                 "expm_antiherm: input is not anti-Hermitian (deviation " +
                     std::to_string(anti_hermiticity_deviation(a)) + ")");
  }
  const HermEig eig = herm_eig(-kI * a, 2.0 * tol);
  Eigen::VectorXcd phases(eig.values.size());
  for (Eigen::Index j = 0; j < phases.size(); ++j) {
    phases(j) = std::polar(1.0, eig.values(j));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

struct UnitaryLog {
  ComplexMatrix log;        // anti-Hermitian, eigenphases in (-pi, pi]
  RealVector phases;        // eigenphases, one per eigenvector column
  ComplexMatrix vectors;    // unitary eigenbasis of the input
  bool near_branch_cut = false;
};

inline constexpr double kBranchCutWarning = 1e-6;

namespace detail {

// Eigenbasis of a normal (here unitary) matrix from two Hermitian passes:
// diagonalize the sine part, then separate clusters of equal sine with the
// cosine part restricted to the cluster.
inline ComplexMatrix unitary_eigenbasis(const ComplexMatrix& u) {
  const ComplexMatrix sine = (u - u.adjoint()) / (2.0 * kI);
  const ComplexMatrix cosine = 0.5 * (u + u.adjoint());
  const HermEig first = herm_eig(0.5 * (sine + sine.adjoint()), 1.0);
  ComplexMatrix w = first.vectors;
  const Eigen::Index n = u.rows();
  constexpr double kCluster = 1e-6;
  for (Eigen::Index start = 0; start < n;) {
    Eigen::Index end = start + 1;
    while (end < n &&
           first.values(end - 1) - first.values(end) < kCluster) {
      ++end;
    }
    const Eigen::Index size = end - start;
    if (size > 1) {
      const ComplexMatrix basis = w.middleCols(start, size);
      ComplexMatrix block = basis.adjoint() * cosine * basis;
      block = 0.5 * (block + block.adjoint());
      const HermEig second = herm_eig(block, 1.0);
      w.middleCols(start, size) = basis * second.vectors;
    }
    start = end;
  }
  return w;
}

}  // namespace detail

/// Principal logarithm of a unitary. Eigenphase exactly pi maps to +pi; a
/// phase within 1e-6 of the cut sets near_branch_cut but never fails.
inline UnitaryLog logm_unitary(const ComplexMatrix& u,
                               double tol = kDefaultTol) {
  validate(u, "logm_unitary");
  if (!is_unitary(u, tol)) {
    detail::fail(ErrorCode::not_unitary,
                 "logm_unitary: input is not unitary (deviation " +
                     std::to_string(unitarity_deviation(u)) + ")");
  }
  UnitaryLog out;
  out.vectors = detail::unitary_eigenbasis(u);
  const ComplexMatrix diag = out.vectors.adjoint() * u * out.vectors;
  const Eigen::Index n = u.rows();
  out.phases.resize(n);
  Eigen::VectorXcd iphase(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double phi = std::arg(diag(j, j));
    if (phi < -std::numbers::pi + 1e-12) phi += 2.0 * std::numbers::pi;
    if (std::numbers::pi - std::abs(phi) < kBranchCutWarning) {
      out.near_branch_cut = true;
    }
    out.phases(j) = phi;
    iphase(j) = Complex(0.0, phi);
  }
  ComplexMatrix log = out.vectors * iphase.asDiagonal() * out.vectors.adjoint();
  out.log = 0.5 * (log - log.adjoint());
  return out;
}

// ---------------------------------------------------------------------------
// Error metrics

struct ErrorMetrics {
  double frob_dist = 0.0;
  double phase_invariant_dist = 0.0;
};

/// Frobenius distance and its minimum over a global phase,
/// min_phi ||u - e^{i phi} v||_F, attained at phi = -arg tr(u^dagger v).
inline ErrorMetrics error_metrics(const ComplexMatrix& u,
                                  const ComplexMatrix& v) {
  require_same_dim(u, v, "error_metrics");
  ErrorMetrics out;
  out.frob_dist = (u - v).norm();
  // the minimizing phase is arg tr(u^dagger v); evaluating the distance at
  // that phase avoids the cancellation in the expanded form
  const Complex overlap = (u.adjoint() * v).trace();
  const Complex align = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : 1.0;
  out.phase_invariant_dist = (u - align * v).norm();
  return out;
}

}  // namespace qtorus
