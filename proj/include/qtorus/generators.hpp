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

// Generator families for binary (Clifford algebra) and l-level
// (noncommutative torus) circuits, with locality detection and checks of
// the defining algebraic relations.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtorus/errors.hpp"
#include "qtorus/linalg.hpp"

namespace qtorus {

enum class Family {
  pauli,
  weyl,
  tau,
  clifford_full,       // Gamma_0 .. Gamma_{2n-1}
  clifford_universal,  // clifford_full plus Gamma_u
  clifford_two_local,  // Gamma_0, Gamma_k Gamma_{k+1}, Gamma_u
  torus_full,          // T_0 .. T_{2n-1}, unitary
  torus_split,         // T_k^+ and T_k^- for every T_k
  torus_two_local,     // splits of T_0 and T_k^dagger T_{k+1}
  custom,
};

enum class Hermiticity { anti_hermitian, hermitian, unitary_non_hermitian, other };

enum class GammaVariant { three, four };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::pauli: return "pauli";
    case Family::weyl: return "weyl";
    case Family::tau: return "tau";
    case Family::clifford_full: return "clifford_full";
    case Family::clifford_universal: return "clifford_universal";
    case Family::clifford_two_local: return "clifford_two_local";
    case Family::torus_full: return "torus_full";
    case Family::torus_split: return "torus_split";
    case Family::torus_two_local: return "torus_two_local";
    case Family::custom: return "custom";
  }
  return "custom";
}

inline std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : {Family::pauli, Family::weyl, Family::tau,
                   Family::clifford_full, Family::clifford_universal,
                   Family::clifford_two_local, Family::torus_full,
                   Family::torus_split, Family::torus_two_local,
                   Family::custom}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

inline std::string_view to_string(Hermiticity h) {
  switch (h) {
    case Hermiticity::anti_hermitian: return "anti_hermitian";
    case Hermiticity::hermitian: return "hermitian";
    case Hermiticity::unitary_non_hermitian: return "unitary_non_hermitian";
    case Hermiticity::other: return "other";
  }
  return "other";
}

struct Generator {
  std::string id;
  ComplexMatrix matrix;
  int locality = 0;
  Hermiticity hermiticity = Hermiticity::other;
};

struct GeneratorSet {
  Family family = Family::custom;
  int n = 1;
  int l = 2;
  std::vector<Generator> elements;
  std::vector<std::string> notes;

  std::size_t dim() const {
    return elements.empty() ? 0 : dim_of(elements.front().matrix);
  }

  const Generator* find(std::string_view id) const {
    for (const auto& g : elements) {
      if (g.id == id) return &g;
    }
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Scalars and single-site matrices

/// zeta = exp(2 pi i / l).
inline Complex zeta(int l) { return std::polar(1.0, 2.0 * std::numbers::pi / l); }

/// mu = exp(i pi / l), so zeta = mu^2.
inline Complex mu(int l) { return std::polar(1.0, std::numbers::pi / l); }

/// mu^p evaluated directly from the angle to avoid accumulated rounding.
inline Complex mu_pow(int l, long long p) {
  const long long m = ((p % (2LL * l)) + 2LL * l) % (2LL * l);
  return std::polar(1.0, std::numbers::pi * static_cast<double>(m) / l);
}

inline ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline ComplexMatrix sigma_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

inline ComplexMatrix sigma_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// Cyclic shift U[k][j] = delta_{k+1 mod l, j}.
inline ComplexMatrix shift_matrix(int l) {
  ComplexMatrix u = ComplexMatrix::Zero(l, l);
  for (int k = 0; k < l; ++k) u(k, (k + 1) % l) = 1.0;
  return u;
}

/// Clock V = diag(exp(2 pi i k / l)).
inline ComplexMatrix clock_matrix(int l) {
  ComplexMatrix v = ComplexMatrix::Zero(l, l);
  for (int k = 0; k < l; ++k) v(k, k) = mu_pow(l, 2LL * k);
  return v;
}

inline ComplexMatrix tau_x(int l) { return shift_matrix(l); }

/// tau_y = zeta^{(l-1)/2} U V, with the half power taken as mu^{l-1}.
inline ComplexMatrix tau_y(int l) {
  return mu_pow(l, l - 1) * shift_matrix(l) * clock_matrix(l);
}

inline ComplexMatrix tau_z(int l) { return clock_matrix(l); }

// ---------------------------------------------------------------------------
// Locality

namespace detail {

inline std::size_t checked_power(int base, int exp, std::size_t max_dim,
                                 const char* what) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > max_dim / static_cast<std::size_t>(base)) {
      fail(ErrorCode::capacity, std::string(what) + ": dimension " +
                                    std::to_string(base) + "^" +
                                    std::to_string(exp) + " exceeds cap " +
                                    std::to_string(max_dim));
    }
    out *= static_cast<std::size_t>(base);
  }
  return out;
}

// True when m = (Tr_site m / l) re-embedded as identity on `site`; sites
// are numbered by tensor position, 0 = leftmost factor.
inline bool acts_trivially_on(const ComplexMatrix& m, int n, int l, int site) {
  const auto dim = m.rows();
  Eigen::Index stride = 1;
  for (int p = n - 1; p > site; --p) stride *= l;
  double dev = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    const Eigen::Index rs = (r / stride) % l;
    const Eigen::Index rbase = r - rs * stride;
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Eigen::Index cs = (c / stride) % l;
      Complex embedded = 0.0;
      if (rs == cs) {
        const Eigen::Index cbase = c - cs * stride;
        for (Eigen::Index k = 0; k < l; ++k) {
          embedded += m(rbase + k * stride, cbase + k * stride);
        }
        embedded /= static_cast<double>(l);
      }
      dev = std::max(dev, std::abs(m(r, c) - embedded));
    }
  }
  return dev <= 1e-9 * std::max(1.0, max_abs(m));
}

}  // namespace detail

/// Number of tensor sites on which m acts non-trivially (partial-trace test).
inline int locality(const ComplexMatrix& m, int n, int l) {
  int count = 0;
  for (int site = 0; site < n; ++site) {
    if (!detail::acts_trivially_on(m, n, l, site)) ++count;
  }
  return count;
}

inline Hermiticity classify(const ComplexMatrix& m, double tol = 1e-12) {
  if (is_anti_hermitian(m, tol)) return Hermiticity::anti_hermitian;
  if (is_hermitian(m, tol)) return Hermiticity::hermitian;
  if (is_unitary(m, tol)) return Hermiticity::unitary_non_hermitian;
  return Hermiticity::other;
}

namespace detail {

inline Generator make_generator(std::string id, ComplexMatrix m, int n, int l) {
  Generator g;
  g.id = std::move(id);
  g.locality = locality(m, n, l);
  g.hermiticity = classify(m);
  g.matrix = std::move(m);
  return g;
}

// I^{(n-k-1)} (x) head (x) tail^{k}
inline ComplexMatrix site_string(int n, int k, const ComplexMatrix& head,
                                 const ComplexMatrix& tail,
                                 std::size_t max_dim) {
  const int l = static_cast<int>(head.rows());
  std::vector<ComplexMatrix> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n - k - 1; ++i) factors.push_back(identity(l));
  factors.push_back(head);
  for (int i = 0; i < k; ++i) factors.push_back(tail);
  return tensor_all(factors, max_dim);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Families

inline GeneratorSet pauli() {
  GeneratorSet s;
  s.family = Family::pauli;
  s.n = 1;
  s.l = 2;
  s.elements.push_back(detail::make_generator("X", sigma_x(), 1, 2));
  s.elements.push_back(detail::make_generator("Y", sigma_y(), 1, 2));
  s.elements.push_back(detail::make_generator("Z", sigma_z(), 1, 2));
  return s;
}

inline void require_levels(int l) {
  if (l < 2) {
    detail::fail(ErrorCode::invalid_argument,
                 "level count l must be >= 2, got " + std::to_string(l));
  }
}

inline GeneratorSet weyl_pair(int l) {
  require_levels(l);
  GeneratorSet s;
  s.family = Family::weyl;
  s.n = 1;
  s.l = l;
  s.elements.push_back(detail::make_generator("U", shift_matrix(l), 1, l));
  s.elements.push_back(detail::make_generator("V", clock_matrix(l), 1, l));
  return s;
}

inline GeneratorSet tau(int l) {
  require_levels(l);
  GeneratorSet s;
  s.family = Family::tau;
  s.n = 1;
  s.l = l;
  s.elements.push_back(detail::make_generator("tx", tau_x(l), 1, l));
  s.elements.push_back(detail::make_generator("ty", tau_y(l), 1, l));
  s.elements.push_back(detail::make_generator("tz", tau_z(l), 1, l));
  return s;
}

/// The 2n anti-Hermitian Clifford generators
/// Gamma_{2k}   = i I^{(n-k-1)} (x) sigma_x (x) sigma_z^{(k)},
/// Gamma_{2k+1} = i I^{(n-k-1)} (x) sigma_y (x) sigma_z^{(k)}.
inline GeneratorSet clifford_gammas(int n, std::size_t max_dim = kDefaultMaxDim) {
  if (n < 1) detail::fail(ErrorCode::invalid_argument, "clifford_gammas: n must be >= 1");
  detail::checked_power(2, n, max_dim, "clifford_gammas");
  GeneratorSet s;
  s.family = Family::clifford_full;
  s.n = n;
  s.l = 2;
  for (int k = 0; k < n; ++k) {
    for (int half = 0; half < 2; ++half) {
      const ComplexMatrix head = half == 0 ? sigma_x() : sigma_y();
      ComplexMatrix g = kI * detail::site_string(n, k, head, sigma_z(), max_dim);
      s.elements.push_back(detail::make_generator(
          "G" + std::to_string(2 * k + half), std::move(g), n, 2));
    }
  }
  return s;
}

/// i times the product of the selected Clifford generators, in order.
inline ComplexMatrix gamma_product(int n, const std::vector<int>& indices,
                                   std::size_t max_dim = kDefaultMaxDim) {
  const GeneratorSet gammas = clifford_gammas(n, max_dim);
  ComplexMatrix out = identity(gammas.dim());
  for (int idx : indices) {
    if (idx < 0 || idx >= 2 * n) {
      detail::fail(ErrorCode::invalid_argument,
                   "gamma_product: index " + std::to_string(idx) +
                       " out of range for n=" + std::to_string(n));
    }
    out = out * gammas.elements[static_cast<std::size_t>(idx)].matrix;
  }
  return kI * out;
}

/// Gamma_u = i Gamma_0 Gamma_1 Gamma_2 (three) or i Gamma_0 .. Gamma_3 (four).
inline ComplexMatrix gamma_u(int n, GammaVariant variant = GammaVariant::three,
                             std::size_t max_dim = kDefaultMaxDim) {
  const int needed = variant == GammaVariant::three ? 3 : 4;
  if (n < 2) {
    detail::fail(ErrorCode::invalid_argument,
                 "gamma_u: needs n >= 2 (2n >= " + std::to_string(needed) +
                     " generators), got n=" + std::to_string(n));
  }
  std::vector<int> idx(static_cast<std::size_t>(needed));
  for (int i = 0; i < needed; ++i) idx[static_cast<std::size_t>(i)] = i;
  return gamma_product(n, idx, max_dim);
}

inline std::string gamma_u_id(GammaVariant variant) {
  return variant == GammaVariant::three ? "Gu" : "Gu4";
}

/// clifford_gammas(n) with Gamma_u adjoined. At n = 1 there is no Gamma_2;
/// the anti-Hermitian pair product Gamma_0 Gamma_1 stands in and the set
/// carries a note saying so.
inline GeneratorSet clifford_universal(int n,
                                       GammaVariant variant = GammaVariant::three,
                                       std::size_t max_dim = kDefaultMaxDim) {
  GeneratorSet s = clifford_gammas(n, max_dim);
  s.family = Family::clifford_universal;
  if (n == 1) {
    ComplexMatrix sub = s.elements[0].matrix * s.elements[1].matrix;
    s.elements.push_back(detail::make_generator("G0G1", std::move(sub), n, 2));
    s.notes.push_back(
        "n=1 extension: Gamma_u unavailable, substituted Gamma_0 Gamma_1");
    return s;
  }
  s.elements.push_back(detail::make_generator(
      gamma_u_id(variant), gamma_u(n, variant, max_dim), n, 2));
  return s;
}

/// Gamma_0, the 2n-1 products Gamma_k Gamma_{k+1}, and Gamma_u: every
/// element acts on at most two qubits.
inline GeneratorSet two_local_clifford_set(int n,
                                           GammaVariant variant = GammaVariant::three,
                                           std::size_t max_dim = kDefaultMaxDim) {
  if (n < 2) {
    detail::fail(ErrorCode::invalid_argument,
                 "two_local_clifford_set: needs n >= 2, got " + std::to_string(n));
  }
  const GeneratorSet gammas = clifford_gammas(n, max_dim);
  GeneratorSet s;
  s.family = Family::clifford_two_local;
  s.n = n;
  s.l = 2;
  s.elements.push_back(gammas.elements[0]);
  for (int k = 0; k + 1 < 2 * n; ++k) {
    const auto& a = gammas.elements[static_cast<std::size_t>(k)];
    const auto& b = gammas.elements[static_cast<std::size_t>(k + 1)];
    s.elements.push_back(
        detail::make_generator(a.id + b.id, a.matrix * b.matrix, n, 2));
  }
  s.elements.push_back(detail::make_generator(
      gamma_u_id(variant), gamma_u(n, variant, max_dim), n, 2));
  return s;
}

/// T_{2k} = I^{(n-k-1)} (x) tau_x (x) tau_z^{(k)}, T_{2k+1} likewise with tau_y.
inline GeneratorSet torus_T(int n, int l, std::size_t max_dim = kDefaultMaxDim) {
  require_levels(l);
  if (n < 1) detail::fail(ErrorCode::invalid_argument, "torus_T: n must be >= 1");
  detail::checked_power(l, n, max_dim, "torus_T");
  GeneratorSet s;
  s.family = Family::torus_full;
  s.n = n;
  s.l = l;
  const ComplexMatrix tx = tau_x(l);
  const ComplexMatrix ty = tau_y(l);
  const ComplexMatrix tz = tau_z(l);
  for (int k = 0; k < n; ++k) {
    s.elements.push_back(detail::make_generator(
        "T" + std::to_string(2 * k), detail::site_string(n, k, tx, tz, max_dim), n, l));
    s.elements.push_back(detail::make_generator(
        "T" + std::to_string(2 * k + 1), detail::site_string(n, k, ty, tz, max_dim), n, l));
  }
  return s;
}

struct HermitianSplit {
  ComplexMatrix plus;   // i (T + T^dagger)
  ComplexMatrix minus;  // T - T^dagger
};

inline HermitianSplit hermitian_split(const ComplexMatrix& t,
                                      double tol = kDefaultTol) {
  validate(t, "hermitian_split");
  if (!is_unitary(t, tol)) {
    detail::fail(ErrorCode::not_unitary, "hermitian_split: input is not unitary");
  }
  return {kI * (t + t.adjoint()), t - t.adjoint()};
}

inline constexpr double kZeroElement = 1e-12;

namespace detail {

inline void append_split(GeneratorSet& out, const std::string& id,
                         const ComplexMatrix& t) {
  const HermitianSplit sp = hermitian_split(t);
  for (const auto& [suffix, m] :
       {std::pair<const char*, const ComplexMatrix&>{"+", sp.plus},
        std::pair<const char*, const ComplexMatrix&>{"-", sp.minus}}) {
    if (m.norm() < kZeroElement) {
      out.notes.push_back("dropped zero element " + id + suffix);
      continue;
    }
    out.elements.push_back(make_generator(id + suffix, m, out.n, out.l));
  }
}

}  // namespace detail

/// Hermitian splits of every T_k; the anti-Hermitian form fed to closure.
inline GeneratorSet torus_split(int n, int l, std::size_t max_dim = kDefaultMaxDim) {
  const GeneratorSet ts = torus_T(n, l, max_dim);
  GeneratorSet s;
  s.family = Family::torus_split;
  s.n = n;
  s.l = l;
  for (const auto& t : ts.elements) detail::append_split(s, t.id, t.matrix);
  return s;
}

/// Splits of T_0 and of T_k^dagger T_{k+1}, k = 0..2n-2. The product for k
/// is named "T{k}dT{k+1}" (d for dagger).
inline GeneratorSet two_local_torus_set(int n, int l,
                                        std::size_t max_dim = kDefaultMaxDim) {
  if (n < 2) {
    detail::fail(ErrorCode::invalid_argument,
                 "two_local_torus_set: needs n >= 2, got " + std::to_string(n));
  }
  const GeneratorSet ts = torus_T(n, l, max_dim);
  GeneratorSet s;
  s.family = Family::torus_two_local;
  s.n = n;
  s.l = l;
  detail::append_split(s, ts.elements[0].id, ts.elements[0].matrix);
  for (int k = 0; k + 1 < 2 * n; ++k) {
    const auto& a = ts.elements[static_cast<std::size_t>(k)];
    const auto& b = ts.elements[static_cast<std::size_t>(k + 1)];
    detail::append_split(s, a.id + "d" + b.id, a.matrix.adjoint() * b.matrix);
  }
  return s;
}

/// Anti-Hermitian elements pass through; everything else is replaced by its
/// Hermitian split (zero halves dropped).
inline GeneratorSet anti_hermitian_generators(const GeneratorSet& in) {
  GeneratorSet out;
  out.family = in.family == Family::torus_full ? Family::torus_split : in.family;
  out.n = in.n;
  out.l = in.l;
  out.notes = in.notes;
  for (const auto& g : in.elements) {
    if (g.hermiticity == Hermiticity::anti_hermitian ||
        is_anti_hermitian(g.matrix, 1e-12)) {
      out.elements.push_back(g);
    } else {
      detail::append_split(out, g.id, g.matrix);
    }
  }
  return out;
}

struct FamilyRequest {
  Family family = Family::clifford_full;
  int n = 1;
  int l = 2;
  GammaVariant variant = GammaVariant::three;
};

inline GeneratorSet make_family(const FamilyRequest& req,
                                std::size_t max_dim = kDefaultMaxDim) {
  switch (req.family) {
    case Family::pauli: return pauli();
    case Family::weyl: return weyl_pair(req.l);
    case Family::tau: return tau(req.l);
    case Family::clifford_full: return clifford_gammas(req.n, max_dim);
    case Family::clifford_universal: return clifford_universal(req.n, req.variant, max_dim);
    case Family::clifford_two_local: return two_local_clifford_set(req.n, req.variant, max_dim);
    case Family::torus_full: return torus_T(req.n, req.l, max_dim);
    case Family::torus_split: return torus_split(req.n, req.l, max_dim);
    case Family::torus_two_local: return two_local_torus_set(req.n, req.l, max_dim);
    case Family::custom: break;
  }
  detail::fail(ErrorCode::invalid_argument, "make_family: custom family has no constructor");
}

// ---------------------------------------------------------------------------
// Relation checks

struct RelationCheck {
  std::string name;
  double max_violation = 0.0;
};

struct RelationReport {
  Family family = Family::custom;
  int n = 1;
  int l = 2;
  std::vector<RelationCheck> checks;
  int max_locality = 0;

  double max_violation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.max_violation);
    return m;
  }
};

namespace detail {

inline ComplexMatrix power(const ComplexMatrix& m, int p) {
  ComplexMatrix out = identity(dim_of(m));
  for (int i = 0; i < p; ++i) out = out * m;
  return out;
}

// max |{a_j, a_k} - 2 sign delta_jk I| over all pairs.
inline double anticommutation_violation(const std::vector<Generator>& gs,
                                        double square) {
  double worst = 0.0;
  for (std::size_t j = 0; j < gs.size(); ++j) {
    for (std::size_t k = 0; k < gs.size(); ++k) {
      ComplexMatrix ac = anticommutator(gs[j].matrix, gs[k].matrix);
      if (j == k) ac -= 2.0 * square * identity(dim_of(ac));
      worst = std::max(worst, max_abs(ac));
    }
  }
  return worst;
}

// max |a_j a_k - zeta a_k a_j| over ordered pairs j < k.
inline double zeta_commutation_violation(const std::vector<Generator>& gs, int l) {
  const Complex z = zeta(l);
  double worst = 0.0;
  for (std::size_t j = 0; j < gs.size(); ++j) {
    for (std::size_t k = j + 1; k < gs.size(); ++k) {
      worst = std::max(worst, max_abs(gs[j].matrix * gs[k].matrix -
                                      z * gs[k].matrix * gs[j].matrix));
    }
  }
  return worst;
}

inline double order_violation(const std::vector<Generator>& gs, int l) {
  double worst = 0.0;
  for (const auto& g : gs) {
    worst = std::max(worst, max_abs(power(g.matrix, l) - identity(dim_of(g.matrix))));
  }
  return worst;
}

inline double anti_hermitian_violation(const std::vector<Generator>& gs) {
  double worst = 0.0;
  for (const auto& g : gs) worst = std::max(worst, anti_hermiticity_deviation(g.matrix));
  return worst;
}

}  // namespace detail

/// Maximum absolute violation of each defining relation of the family.
inline RelationReport relation_report(const GeneratorSet& gens) {
  RelationReport r;
  r.family = gens.family;
  r.n = gens.n;
  r.l = gens.l;
  for (const auto& g : gens.elements) r.max_locality = std::max(r.max_locality, g.locality);
  const auto& es = gens.elements;
  switch (gens.family) {
    case Family::pauli:
      r.checks.push_back({"anticommutator {s_mu, s_nu} = 2 delta I",
                          detail::anticommutation_violation(es, 1.0)});
      r.checks.push_back({"s_x s_y = i s_z",
                          max_abs(es[0].matrix * es[1].matrix - kI * es[2].matrix)});
      break;
    case Family::weyl: {
      const auto& u = es[0].matrix;
      const auto& v = es[1].matrix;
      r.checks.push_back({"U V = zeta V U", max_abs(u * v - zeta(gens.l) * v * u)});
      r.checks.push_back({"U^l = V^l = I", detail::order_violation(es, gens.l)});
      r.checks.push_back({"unitarity", std::max(unitarity_deviation(u), unitarity_deviation(v))});
      break;
    }
    case Family::tau:
      r.checks.push_back({"tau_a tau_b = zeta tau_b tau_a (a before b)",
                          detail::zeta_commutation_violation(es, gens.l)});
      r.checks.push_back({"tau^l = I", detail::order_violation(es, gens.l)});
      break;
    case Family::clifford_full:
      r.checks.push_back({"{G_j, G_k} = -2 delta I", detail::anticommutation_violation(es, -1.0)});
      r.checks.push_back({"anti-Hermitian", detail::anti_hermitian_violation(es)});
      break;
    case Family::clifford_universal: {
      const std::vector<Generator> gammas(es.begin(), es.begin() + 2 * gens.n);
      r.checks.push_back({"{G_j, G_k} = -2 delta I", detail::anticommutation_violation(gammas, -1.0)});
      r.checks.push_back({"anti-Hermitian", detail::anti_hermitian_violation(es)});
      break;
    }
    case Family::torus_full:
      r.checks.push_back({"T_j T_k = zeta T_k T_j (j < k)",
                          detail::zeta_commutation_violation(es, gens.l)});
      r.checks.push_back({"T_k^l = I", detail::order_violation(es, gens.l)});
      break;
    case Family::clifford_two_local:
    case Family::torus_split:
    case Family::torus_two_local:
      r.checks.push_back({"anti-Hermitian", detail::anti_hermitian_violation(es)});
      break;
    case Family::custom:
      detail::fail(ErrorCode::family_mismatch, "relation_report: custom family has no relations");
  }
  return r;
}

}  // namespace qtorus
