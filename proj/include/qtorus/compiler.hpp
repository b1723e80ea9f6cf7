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

// Unitary synthesis: U ~ exp(tau_1 A_{k_1}) exp(tau_2 A_{k_2}) ... over the
// primitive generators of a Lie basis.
//
// The target's principal logarithm is expanded in the basis, rewritten over
// the commutator trees, and split into M Trotter slices. A tree [P, Q] is
// realized either exactly, by conjugating Q with a quarter-period rotation
// of P when P squares to a negative multiple of the identity and
// anticommutes with Q, or approximately, by the balanced group commutator
//
//     C(a) C(-a) = exp(2 a^2 [P, Q]) + O(a^4),
//     C(a) = e^{aP} e^{aQ} e^{-aP} e^{-aQ},
//
// whose third-order terms cancel between the two halves.

#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtorus/errors.hpp"
#include "qtorus/generators.hpp"
#include "qtorus/lieclosure.hpp"
#include "qtorus/linalg.hpp"

namespace qtorus {

struct GateItem {
  std::string id;
  double tau = 0.0;

  friend bool operator==(const GateItem&, const GateItem&) = default;
};

struct CompileReport {
  double frob_error = 0.0;
  double phase_invariant_error = 0.0;
  int slice_count = 0;
  std::size_t gate_count = 0;
  double global_phase = 0.0;  // the dropped i*phi*I part of log(U), as phi
  double membership_residual = 0.0;
  bool branch_split = false;  // compiled as (U^{1/2})^2
  std::optional<double> target_error;
  bool target_met = true;
};

struct GateSequence {
  std::string gens;  // family name
  int n = 1;
  int l = 2;
  std::size_t target_dim = 0;
  std::vector<GateItem> items;
  CompileReport report;
};

enum class CommutatorSynthesis {
  automatic,         // exact conjugation where it applies, else group commutator
  group_commutator,  // always the balanced group commutator
};

struct CompileConfig {
  int slices = 1;
  int max_commutator_depth = 8;
  std::optional<double> target_error;
  double tau_clip = std::numbers::pi;
  int trotter_order = 2;  // 1: plain product, 2: symmetric (Strang) slices
  CommutatorSynthesis synthesis = CommutatorSynthesis::automatic;
  bool merge_adjacent = false;
  int max_slices = 1024;  // doubling limit when target_error is set
  double membership_tol = 1e-8;
  double unitary_tol = kDefaultTol;

  void validate() const {
    if (slices < 1) detail::fail(ErrorCode::invalid_argument, "CompileConfig: slices must be >= 1");
    if (max_commutator_depth < 0) {
      detail::fail(ErrorCode::invalid_argument, "CompileConfig: depth must be >= 0");
    }
    if (!(tau_clip > 0.0)) detail::fail(ErrorCode::invalid_argument, "CompileConfig: tau_clip must be > 0");
    if (trotter_order != 1 && trotter_order != 2) {
      detail::fail(ErrorCode::invalid_argument, "CompileConfig: trotter_order must be 1 or 2");
    }
    if (target_error && !(*target_error > 0.0)) {
      detail::fail(ErrorCode::invalid_argument, "CompileConfig: target_error must be > 0");
    }
  }
};

// ---------------------------------------------------------------------------
// Evaluation

/// Multiplies gates e^{tau A} left to right. Each generator is diagonalized
/// once; repeated gates then cost one matrix product.
class SequenceEvaluator {
 public:
  explicit SequenceEvaluator(const GeneratorSet& gens) : gens_(&gens) {}

  ComplexMatrix gate(const std::string& id, double tau) {
    const HermEig& eig = eigen_of(id);
    Eigen::VectorXcd phases(eig.values.size());
    for (Eigen::Index j = 0; j < phases.size(); ++j) {
      phases(j) = std::polar(1.0, tau * eig.values(j));
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
  }

  ComplexMatrix evaluate(const std::vector<GateItem>& items) {
    ComplexMatrix out = identity(gens_->dim());
    for (const auto& item : items) out = out * gate(item.id, item.tau);
    return out;
  }

 private:
  const HermEig& eigen_of(const std::string& id) {
    auto it = cache_.find(id);
    if (it != cache_.end()) return it->second;
    const Generator* g = gens_->find(id);
    if (g == nullptr) {
      detail::fail(ErrorCode::unknown_id, "evaluate: unknown generator id '" + id + "'");
    }
    if (!is_anti_hermitian(g->matrix, kDefaultTol)) {
      detail::fail(ErrorCode::not_anti_hermitian,
                   "evaluate: generator '" + id + "' is not anti-Hermitian");
    }
    return cache_.emplace(id, herm_eig(-kI * g->matrix)).first->second;
  }

  const GeneratorSet* gens_;
  std::unordered_map<std::string, HermEig> cache_;
};

inline ComplexMatrix evaluate(const std::vector<GateItem>& items, const GeneratorSet& gens) {
  SequenceEvaluator ev(gens);
  return ev.evaluate(items);
}

inline ComplexMatrix evaluate(const GateSequence& seq, const GeneratorSet& gens) {
  return evaluate(seq.items, gens);
}

/// Reversed order, negated parameters: the exact inverse of the product.
inline std::vector<GateItem> inverse(const std::vector<GateItem>& items) {
  std::vector<GateItem> out(items.rbegin(), items.rend());
  for (auto& item : out) item.tau = -item.tau;
  return out;
}

// ---------------------------------------------------------------------------
// Realization of commutator trees

namespace detail {

struct NodeInfo {
  ComplexMatrix value;
  double period_scale = 0.0;  // p > 0 when value^2 = -p^2 I
};

class Realizer {
 public:
  Realizer(const GeneratorSet& gens, const CompileConfig& cfg) : gens_(gens), cfg_(cfg) {
    for (const auto& g : gens.elements) prims_.emplace(g.id, g.matrix);
  }

  void realize(const Recipe& node, double theta, std::vector<GateItem>& out) {
    if (theta == 0.0) return;
    if (node->is_leaf()) {
      emit_leaf(node->leaf, theta, out);
      return;
    }
    if (node->depth() > cfg_.max_commutator_depth) {
      fail(ErrorCode::depth_exhausted,
           "compile: recipe depth " + std::to_string(node->depth()) +
               " exceeds max_commutator_depth " + std::to_string(cfg_.max_commutator_depth));
    }
    const NodeInfo& p = info(node->left);
    const NodeInfo& q = info(node->right);
    if (cfg_.synthesis == CommutatorSynthesis::automatic && anticommute(p.value, q.value)) {
      // e^{phi P} Q e^{-phi P} = [P, Q] / (2p) at phi = pi / (4p)
      if (p.period_scale > 0.0) {
        conjugate(node->left, p.period_scale, node->right, 2.0 * p.period_scale * theta, out);
        return;
      }
      if (q.period_scale > 0.0) {
        conjugate(node->right, q.period_scale, node->left, -2.0 * q.period_scale * theta, out);
        return;
      }
    }
    if (theta < 0.0) {
      // the inverse word realizes [Q, P] = -[P, Q]
      std::vector<GateItem> w;
      realize(node, -theta, w);
      const std::vector<GateItem> w_inv = inverse(w);
      out.insert(out.end(), w_inv.begin(), w_inv.end());
      return;
    }
    const double a = std::sqrt(theta / 2.0);
    std::vector<GateItem> wp;
    std::vector<GateItem> wq;
    realize(node->left, a, wp);
    realize(node->right, a, wq);
    const std::vector<GateItem> wp_inv = inverse(wp);
    const std::vector<GateItem> wq_inv = inverse(wq);
    const std::vector<GateItem>* word[] = {&wp, &wq, &wp_inv, &wq_inv, &wp_inv, &wq_inv, &wp, &wq};
    for (const auto* part : word) {
      out.insert(out.end(), part->begin(), part->end());
    }
  }

  // Wraps tau into one period where the generator has one, then splits
  // anything still above tau_clip into equal pieces.
  void emit_leaf(const std::string& id, double tau, std::vector<GateItem>& out) {
    const Generator* g = gens_.find(id);
    if (g == nullptr) fail(ErrorCode::unknown_id, "compile: unknown generator id '" + id + "'");
    const double p = leaf_info(id).period_scale;
    if (p > 0.0) {
      const double period = 2.0 * std::numbers::pi / p;
      tau -= period * std::round(tau / period);
    }
    if (tau == 0.0) return;
    const int pieces = std::abs(tau) > cfg_.tau_clip
                           ? static_cast<int>(std::ceil(std::abs(tau) / cfg_.tau_clip))
                           : 1;
    for (int i = 0; i < pieces; ++i) out.push_back({id, tau / pieces});
  }

 private:
  static bool anticommute(const ComplexMatrix& a, const ComplexMatrix& b) {
    const double scale = std::max(1.0, a.norm() * b.norm());
    return (a * b + b * a).norm() <= 1e-10 * scale;
  }

  void conjugate(const Recipe& outer, double p, const Recipe& inner, double x,
                 std::vector<GateItem>& out) {
    std::vector<GateItem> w;
    realize(outer, std::numbers::pi / (4.0 * p), w);
    out.insert(out.end(), w.begin(), w.end());
    realize(inner, x, out);
    const std::vector<GateItem> w_inv = inverse(w);
    out.insert(out.end(), w_inv.begin(), w_inv.end());
  }

  static NodeInfo make_info(ComplexMatrix value) {
    NodeInfo info;
    const auto n = static_cast<double>(value.rows());
    const ComplexMatrix sq = value * value;
    const double p2 = -sq.trace().real() / n;
    if (p2 > 0.0 &&
        (sq + p2 * ComplexMatrix::Identity(value.rows(), value.cols())).norm() <=
            1e-10 * std::max(1.0, p2) * std::sqrt(n)) {
      info.period_scale = std::sqrt(p2);
    }
    info.value = std::move(value);
    return info;
  }

  const NodeInfo& leaf_info(const std::string& id) {
    auto it = leaves_.find(id);
    if (it != leaves_.end()) return it->second;
    return leaves_.emplace(id, make_info(gens_.find(id)->matrix)).first->second;
  }

  const NodeInfo& info(const Recipe& node) {
    if (node->is_leaf()) {
      if (gens_.find(node->leaf) == nullptr) {
        fail(ErrorCode::unknown_id, "compile: unknown generator id '" + node->leaf + "'");
      }
      return leaf_info(node->leaf);
    }
    auto it = nodes_.find(node.get());
    if (it != nodes_.end()) return it->second;
    ComplexMatrix value = commutator(info(node->left).value, info(node->right).value);
    return nodes_.emplace(node.get(), make_info(std::move(value))).first->second;
  }

  const GeneratorSet& gens_;
  const CompileConfig& cfg_;
  PrimitiveMap prims_;
  std::map<std::string, NodeInfo> leaves_;
  std::map<const RecipeNode*, NodeInfo> nodes_;
};

}  // namespace detail

/// Sums adjacent gates on the same generator (exact: they commute), then
/// re-applies the wrap/clip rule.
inline std::vector<GateItem> merge_adjacent(const std::vector<GateItem>& items,
                                            const GeneratorSet& gens,
                                            const CompileConfig& cfg = {}) {
  std::vector<GateItem> merged;
  for (const auto& item : items) {
    if (!merged.empty() && merged.back().id == item.id) {
      merged.back().tau += item.tau;
    } else {
      merged.push_back(item);
    }
  }
  detail::Realizer realizer(gens, cfg);
  std::vector<GateItem> out;
  for (const auto& item : merged) realizer.emit_leaf(item.id, item.tau, out);
  return out;
}

// ---------------------------------------------------------------------------
// Compilation

namespace detail {

struct TreeCoordinates {
  std::vector<std::size_t> index;  // basis elements with non-negligible weight
  std::vector<double> weight;      // coefficient of the raw tree value
  double global_phase = 0.0;
  double residual = 0.0;
  bool branch_split = false;
};

inline TreeCoordinates tree_coordinates(const ComplexMatrix& u, const LieBasis& basis,
                                        const CompileConfig& cfg) {
  TreeCoordinates tc;
  UnitaryLog lg = logm_unitary(u, cfg.unitary_tol);
  ComplexMatrix a = lg.log;
  if (lg.near_branch_cut) {
    // u = (u^{1/2})^2 with the half-angle logarithm well away from the cut
    a = 0.5 * a;
    tc.branch_split = true;
  }
  const auto n = static_cast<double>(u.rows());
  const double phase = a.trace().imag() / n;
  a -= Complex(0.0, phase) * identity(dim_of(u));
  tc.global_phase = tc.branch_split ? 2.0 * phase : phase;

  const Membership m = membership(a, basis, cfg.membership_tol);
  tc.residual = m.residual;
  if (!m.member) {
    throw NotMemberError(m.residual, "compile: target logarithm is outside the generated "
                                     "Lie algebra (residual " + std::to_string(m.residual) + ")");
  }
  std::vector<double> d(basis.size(), 0.0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& coef = basis.coefficients[j];
    for (std::size_t i = 0; i < coef.size(); ++i) d[i] += m.coefficients[j] * coef[i];
  }
  const double floor = 1e-14 * std::max(1.0, a.norm());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (basis.center_index && *basis.center_index == i) continue;
    if (std::abs(d[i]) * basis.raw[i].norm() <= floor) continue;
    tc.index.push_back(i);
    tc.weight.push_back(d[i]);
  }
  return tc;
}

inline std::vector<GateItem> build_slice(const TreeCoordinates& tc, const LieBasis& basis,
                                         int slices, int order, Realizer& realizer) {
  std::vector<GateItem> slice;
  const std::size_t k = tc.index.size();
  if (k == 0) return slice;
  const double m = static_cast<double>(slices);
  if (order == 1) {
    for (std::size_t t = 0; t < k; ++t) {
      realizer.realize(basis.recipes[tc.index[t]], tc.weight[t] / m, slice);
    }
    return slice;
  }
  for (std::size_t t = 0; t + 1 < k; ++t) {
    realizer.realize(basis.recipes[tc.index[t]], tc.weight[t] / (2.0 * m), slice);
  }
  realizer.realize(basis.recipes[tc.index[k - 1]], tc.weight[k - 1] / m, slice);
  for (std::size_t t = k - 1; t-- > 0;) {
    realizer.realize(basis.recipes[tc.index[t]], tc.weight[t] / (2.0 * m), slice);
  }
  return slice;
}

inline void check_compatible(const ComplexMatrix& u, const GeneratorSet& gens,
                             const LieBasis& basis) {
  validate(u, "compile");
  if (dim_of(u) != gens.dim() || dim_of(u) != basis.matrix_dim) {
    fail(ErrorCode::dimension_mismatch,
         "compile: target dim " + std::to_string(dim_of(u)) + ", generators " +
             std::to_string(gens.dim()) + ", basis " + std::to_string(basis.matrix_dim));
  }
  for (const auto& [id, m] : basis.primitives) {
    if (id != kCenterId && gens.find(id) == nullptr) {
      fail(ErrorCode::unknown_id, "compile: basis primitive '" + id + "' not in generator set");
    }
  }
}

}  // namespace detail

/// Synthesizes u from the generators of `gens`. `basis` must be a closure of
/// the same generators. The reported error is measured, never assumed; with
/// target_error set the slice count doubles until it is met or max_slices is
/// reached (report.target_met tells which).
inline GateSequence compile(const ComplexMatrix& u, const GeneratorSet& gens,
                            const LieBasis& basis, const CompileConfig& cfg = {}) {
  cfg.validate();
  detail::check_compatible(u, gens, basis);
  if (!is_unitary(u, cfg.unitary_tol)) {
    detail::fail(ErrorCode::not_unitary, "compile: target is not unitary");
  }
  const detail::TreeCoordinates tc = detail::tree_coordinates(u, basis, cfg);
  detail::Realizer realizer(gens, cfg);
  SequenceEvaluator evaluator(gens);

  GateSequence seq;
  seq.gens = std::string(to_string(gens.family));
  seq.n = gens.n;
  seq.l = gens.l;
  seq.target_dim = dim_of(u);
  for (int m = cfg.slices;; m *= 2) {
    const std::vector<GateItem> slice =
        detail::build_slice(tc, basis, m, cfg.trotter_order, realizer);
    const int reps = tc.branch_split ? 2 * m : m;
    std::vector<GateItem> items;
    items.reserve(slice.size() * static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) items.insert(items.end(), slice.begin(), slice.end());
    if (cfg.merge_adjacent) items = merge_adjacent(items, gens, cfg);

    // the product is slice^reps; evaluate the slice once and square up
    ComplexMatrix slice_value = evaluator.evaluate(slice);
    ComplexMatrix value = identity(dim_of(u));
    for (int r = 0; r < reps; ++r) value = value * slice_value;
    if (cfg.merge_adjacent) value = evaluator.evaluate(items);
    const ErrorMetrics err = error_metrics(u, value);

    seq.items = std::move(items);
    seq.report.frob_error = err.frob_dist;
    seq.report.phase_invariant_error = err.phase_invariant_dist;
    seq.report.slice_count = m;
    seq.report.gate_count = seq.items.size();
    seq.report.global_phase = tc.global_phase;
    seq.report.membership_residual = tc.residual;
    seq.report.branch_split = tc.branch_split;
    seq.report.target_error = cfg.target_error;
    seq.report.target_met = !cfg.target_error || err.phase_invariant_dist <= *cfg.target_error;
    if (seq.report.target_met || m * 2 > cfg.max_slices) break;
  }
  return seq;
}

struct ConvergenceRow {
  int slices = 0;
  double phase_invariant_error = 0.0;
  double frob_error = 0.0;
  std::size_t gate_count = 0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool monotone = true;  // each error <= 1.1 x the previous one (or < 1e-8)
  double improvement = 0.0;  // first error / last error
};

inline std::vector<int> doubling_sweep(int first, int last) {
  std::vector<int> out;
  for (int m = first; m <= last; m *= 2) out.push_back(m);
  return out;
}

/// Errors across a sweep of slice counts for one target.
inline ConvergenceTable compile_report(const ComplexMatrix& u, const GeneratorSet& gens,
                                       const LieBasis& basis, const CompileConfig& base,
                                       const std::vector<int>& sweep) {
  ConvergenceTable table;
  CompileConfig cfg = base;
  cfg.target_error.reset();
  for (int m : sweep) {
    cfg.slices = m;
    const GateSequence seq = compile(u, gens, basis, cfg);
    table.rows.push_back({m, seq.report.phase_invariant_error, seq.report.frob_error,
                          seq.report.gate_count});
  }
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double prev = table.rows[i - 1].phase_invariant_error;
    const double cur = table.rows[i].phase_invariant_error;
    if (cur > 1.1 * prev && cur >= 1e-8) table.monotone = false;
  }
  if (!table.rows.empty() && table.rows.back().phase_invariant_error > 0.0) {
    table.improvement =
        table.rows.front().phase_invariant_error / table.rows.back().phase_invariant_error;
  }
  return table;
}

}  // namespace qtorus
