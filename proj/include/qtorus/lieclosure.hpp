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

// Real Lie algebra generated by anti-Hermitian matrices under commutators.
//
// Every basis element b_j carries a commutator tree r_j over primitive
// generator ids. Gram-Schmidt makes b_j a combination of r_0 .. r_j only,
//
//     b_j = sum_{i <= j} coefficients[j][i] * value(r_i),
//
// so the diagonal entry is the normalization scale of r_j itself and the
// rest undo the projections onto earlier elements. The compiler uses the
// triangular form to turn orthonormal coordinates into tree coordinates.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/errors.hpp"
#include "qtorus/generators.hpp"
#include "qtorus/linalg.hpp"

namespace qtorus {

struct RecipeNode;
using Recipe = std::shared_ptr<const RecipeNode>;

/// Leaf (primitive generator id) or commutator [left, right].
struct RecipeNode {
  std::string leaf;
  Recipe left;
  Recipe right;

  bool is_leaf() const { return left == nullptr; }

  int depth() const {
    return is_leaf() ? 0 : 1 + std::max(left->depth(), right->depth());
  }
};

inline Recipe make_leaf(std::string id) {
  auto node = std::make_shared<RecipeNode>();
  node->leaf = std::move(id);
  return node;
}

inline Recipe make_commutator(Recipe left, Recipe right) {
  auto node = std::make_shared<RecipeNode>();
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

/// "(comm G0 (comm G0G1 Gu))"
inline std::string to_sexpr(const Recipe& r) {
  if (r->is_leaf()) return r->leaf;
  return "(comm " + to_sexpr(r->left) + " " + to_sexpr(r->right) + ")";
}

inline constexpr const char* kCenterId = "phase";

using PrimitiveMap = std::map<std::string, ComplexMatrix, std::less<>>;

inline ComplexMatrix evaluate_recipe(const Recipe& r, const PrimitiveMap& prims) {
  if (r->is_leaf()) {
    const auto it = prims.find(r->leaf);
    if (it == prims.end()) {
      detail::fail(ErrorCode::unknown_id, "evaluate_recipe: unknown generator '" + r->leaf + "'");
    }
    return it->second;
  }
  return commutator(evaluate_recipe(r->left, prims), evaluate_recipe(r->right, prims));
}

struct LieBasis {
  std::size_t matrix_dim = 0;
  std::size_t dim_ambient = 0;  // N^2, the real dimension of u(N)
  std::vector<ComplexMatrix> basis;
  std::vector<Recipe> recipes;
  std::vector<ComplexMatrix> raw;  // value of each recipe tree
  std::vector<std::vector<double>> coefficients;
  std::vector<int> generation;
  PrimitiveMap primitives;
  std::optional<std::size_t> center_index;

  std::size_t size() const { return basis.size(); }

  /// Normalization coefficient relating raw tree j to basis element j.
  double scale(std::size_t j) const { return coefficients[j][j]; }

  int max_generation() const {
    int g = 0;
    for (int x : generation) g = std::max(g, x);
    return g;
  }

  /// Re-evaluates the trees from the primitives and applies the stored
  /// coefficients; should reproduce basis[j].
  ComplexMatrix recipe_value(std::size_t j) const {
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(matrix_dim),
                                            static_cast<Eigen::Index>(matrix_dim));
    for (std::size_t i = 0; i <= j; ++i) {
      if (coefficients[j][i] != 0.0) {
        out += coefficients[j][i] * evaluate_recipe(recipes[i], primitives);
      }
    }
    return out;
  }
};

struct ClosureOptions {
  double tol = 1e-8;            // admission threshold, scaled by N
  double input_tol = kDefaultTol;
  bool adjoin_center = false;   // seed i*I (global phase) as primitive "phase"
  std::size_t max_dim = kDefaultMaxDim;  // cap on N^2
};

namespace detail {

class ClosureBuilder {
 public:
  ClosureBuilder(std::size_t n, const ClosureOptions& opts) : opts_(opts) {
    out_.matrix_dim = n;
    out_.dim_ambient = n * n;
  }

  bool full() const { return out_.size() >= out_.dim_ambient; }

  bool admit(Recipe recipe, ComplexMatrix raw, int generation) {
    if (full()) return false;
    const std::size_t k = out_.size();
    std::vector<double> coef(k + 1, 0.0);
    coef[k] = 1.0;
    ComplexMatrix residual = raw;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < k; ++i) {
        const double p = frob_inner(out_.basis[i], residual);
        if (p == 0.0) continue;
        residual -= p * out_.basis[i];
        const auto& ci = out_.coefficients[i];
        for (std::size_t m = 0; m < ci.size(); ++m) coef[m] -= p * ci[m];
      }
    }
    const double norm = residual.norm();
    const double threshold =
        opts_.tol * static_cast<double>(out_.matrix_dim) * std::max(1.0, raw.norm());
    if (norm <= threshold) return false;
    for (double& c : coef) c /= norm;
    residual /= norm;
    residual = 0.5 * (residual - residual.adjoint());
    out_.basis.push_back(std::move(residual));
    out_.recipes.push_back(std::move(recipe));
    out_.raw.push_back(std::move(raw));
    out_.coefficients.push_back(std::move(coef));
    out_.generation.push_back(generation);
    return true;
  }

  LieBasis& result() { return out_; }

 private:
  ClosureOptions opts_;
  LieBasis out_;
};

}  // namespace detail

/// BFS commutator closure. Generation 0 is Gram-Schmidt over the generators
/// (in order); each later generation commutes every element admitted in the
/// previous generation with every element present when the sweep started.
/// Stops when a sweep admits nothing or the dimension reaches N^2.
inline LieBasis closure(const GeneratorSet& gens, const ClosureOptions& opts = {}) {
  if (gens.elements.empty()) {
    detail::fail(ErrorCode::invalid_argument, "closure: empty generator set");
  }
  const std::size_t n = gens.dim();
  if (n > opts.max_dim / n) {
    detail::fail(ErrorCode::capacity, "closure: N^2 = " + std::to_string(n * n) +
                                          " exceeds cap " + std::to_string(opts.max_dim));
  }
  for (const auto& g : gens.elements) {
    validate(g.matrix, "closure");
    if (dim_of(g.matrix) != n) {
      detail::fail(ErrorCode::dimension_mismatch, "closure: generator '" + g.id + "' has wrong dim");
    }
    if (!is_anti_hermitian(g.matrix, opts.input_tol)) {
      detail::fail(ErrorCode::not_anti_hermitian,
                   "closure: generator '" + g.id + "' is not anti-Hermitian");
    }
  }

  detail::ClosureBuilder builder(n, opts);
  LieBasis& out = builder.result();
  for (const auto& g : gens.elements) {
    out.primitives.emplace(g.id, g.matrix);
    builder.admit(make_leaf(g.id), g.matrix, 0);
  }
  if (opts.adjoin_center) {
    const ComplexMatrix center = kI * identity(n);
    out.primitives.emplace(kCenterId, center);
    if (builder.admit(make_leaf(kCenterId), center, 0)) {
      out.center_index = out.size() - 1;
    }
  }

  std::size_t newest_begin = 0;
  std::size_t newest_end = out.size();
  for (int generation = 1; newest_begin < newest_end && !builder.full(); ++generation) {
    const std::size_t snapshot = out.size();
    for (std::size_t x = newest_begin; x < newest_end && !builder.full(); ++x) {
      for (std::size_t y = 0; y < snapshot && !builder.full(); ++y) {
        if (y >= newest_begin && y <= x) continue;  // each newest pair once
        ComplexMatrix raw = commutator(out.raw[x], out.raw[y]);
        builder.admit(make_commutator(out.recipes[x], out.recipes[y]), std::move(raw),
                      generation);
      }
    }
    newest_begin = snapshot;
    newest_end = out.size();
  }
  return std::move(out);
}

// ---------------------------------------------------------------------------
// Membership

struct Membership {
  bool member = false;
  std::vector<double> coefficients;
  double residual = 0.0;  // ||a - sum c_j b_j||_F
};

/// Coordinates of a in an orthonormal (under frob_inner) family.
inline Membership membership(const ComplexMatrix& a, std::span<const ComplexMatrix> orthonormal,
                             double tol = 1e-8) {
  validate(a, "membership");
  Membership m;
  ComplexMatrix residual = a;
  m.coefficients.reserve(orthonormal.size());
  for (const auto& b : orthonormal) {
    require_same_dim(a, b, "membership");
    const double c = frob_inner(b, a);
    m.coefficients.push_back(c);
    residual -= c * b;
  }
  m.residual = residual.norm();
  m.member = m.residual <= tol * a.norm();
  return m;
}

inline Membership membership(const ComplexMatrix& a, const LieBasis& basis, double tol = 1e-8) {
  if (!is_anti_hermitian(a, kDefaultTol)) {
    detail::fail(ErrorCode::not_anti_hermitian, "membership: input is not anti-Hermitian");
  }
  return membership(a, std::span<const ComplexMatrix>(basis.basis), tol);
}

/// Orthonormal basis (Gram-Schmidt, two passes) of the real span of mats.
inline std::vector<ComplexMatrix> orthonormal_span(const std::vector<ComplexMatrix>& mats,
                                                   double tol = 1e-10) {
  std::vector<ComplexMatrix> out;
  for (const auto& m : mats) {
    ComplexMatrix r = m;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : out) r -= frob_inner(b, r) * b;
    }
    const double norm = r.norm();
    if (norm > tol * std::max(1.0, m.norm())) out.push_back(r / norm);
  }
  return out;
}

/// max_{i,j} |<b_i, b_j> - delta_ij|
inline double orthonormality_error(const LieBasis& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(frob_inner(basis.basis[i], basis.basis[j]) - target));
    }
  }
  return worst;
}

/// max_j ||recipe_value(j) - basis[j]||_F
inline double recipe_fidelity_error(const LieBasis& basis) {
  double worst = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    worst = std::max(worst, (basis.recipe_value(j) - basis.basis[j]).norm());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Spin(2n+1) check

struct SpinReport {
  int n = 1;
  int dim = 0;
  int predicted = 0;            // 2n^2 + n
  int generator_count = 0;      // 2n
  int pair_count = 0;           // n(2n-1)
  int span_rank = 0;            // rank of generators plus pair products
  bool closure_in_span = false;
  bool span_in_closure = false;

  bool pass() const {
    return dim == predicted && span_rank == predicted && closure_in_span && span_in_closure;
  }
};

/// The closure of the 2n Clifford generators has dimension 2n^2 + n and is
/// spanned by the generators together with their pairwise products.
inline SpinReport spin_subgroup_check(int n, const ClosureOptions& opts = {}) {
  const GeneratorSet gammas = clifford_gammas(n, opts.max_dim);
  const LieBasis basis = closure(gammas, opts);
  SpinReport r;
  r.n = n;
  r.dim = static_cast<int>(basis.size());
  r.predicted = 2 * n * n + n;
  std::vector<ComplexMatrix> set;
  for (const auto& g : gammas.elements) set.push_back(g.matrix);
  r.generator_count = static_cast<int>(set.size());
  for (std::size_t j = 0; j < gammas.elements.size(); ++j) {
    for (std::size_t k = j + 1; k < gammas.elements.size(); ++k) {
      set.push_back(gammas.elements[j].matrix * gammas.elements[k].matrix);
      ++r.pair_count;
    }
  }
  const std::vector<ComplexMatrix> span = orthonormal_span(set);
  r.span_rank = static_cast<int>(span.size());
  r.closure_in_span = true;
  for (const auto& b : basis.basis) {
    r.closure_in_span = r.closure_in_span && membership(b, span, 1e-8).member;
  }
  r.span_in_closure = true;
  for (const auto& s : set) {
    r.span_in_closure = r.span_in_closure && membership(s, basis, 1e-8).member;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dimension table

enum class DimensionMeasure {
  lie,             // commutator closure of the generators
  lie_with_phase,  // closure with the global phase i*I adjoined
};

inline std::string_view to_string(DimensionMeasure m) {
  return m == DimensionMeasure::lie ? "lie" : "lie+phase";
}

struct DimensionRow {
  Family family = Family::custom;
  int n = 1;
  int l = 2;
  DimensionMeasure measure = DimensionMeasure::lie;
  long long predicted = 0;
  int dim = 0;             // commutator closure
  int dim_with_phase = 0;  // closure with i*I adjoined
  int generations = 0;
  double recipe_error = 0.0;
  double seconds = 0.0;
  std::string note;

  int measured() const { return measure == DimensionMeasure::lie ? dim : dim_with_phase; }
  bool pass() const { return measured() == predicted; }
};

struct TableOptions {
  int max_n = 3;
  std::vector<Family> families = {Family::clifford_full, Family::clifford_universal,
                                  Family::clifford_two_local, Family::torus_split,
                                  Family::torus_two_local};
  std::vector<std::pair<int, int>> torus_cases = {{1, 3}, {1, 4}, {2, 3}};  // (n, l)
  std::vector<std::pair<int, int>> torus_two_local_cases = {{2, 3}};
  ClosureOptions closure;
};

namespace detail {

inline long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline DimensionRow dimension_row(const GeneratorSet& gens, DimensionMeasure measure,
                                  long long predicted, const ClosureOptions& base) {
  const auto start = std::chrono::steady_clock::now();
  DimensionRow row;
  row.family = gens.family;
  row.n = gens.n;
  row.l = gens.l;
  row.measure = measure;
  row.predicted = predicted;
  ClosureOptions plain = base;
  plain.adjoin_center = false;
  const LieBasis lie = closure(gens, plain);
  row.dim = static_cast<int>(lie.size());
  row.generations = lie.max_generation();
  row.recipe_error = recipe_fidelity_error(lie);
  ClosureOptions with_phase = base;
  with_phase.adjoin_center = true;
  const LieBasis lie_phase = closure(gens, with_phase);
  row.dim_with_phase = static_cast<int>(lie_phase.size());
  row.recipe_error = std::max(row.recipe_error, recipe_fidelity_error(lie_phase));
  for (const auto& note : gens.notes) row.note += (row.note.empty() ? "" : "; ") + note;
  row.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace detail

/// Closure dimensions of the generator families against the predicted
/// formulas: 2n^2+n for the Clifford generators alone, 4^n (resp. l^{2n})
/// for the universal sets, the latter counted with the global phase.
inline std::vector<DimensionRow> dimension_table(const TableOptions& opts = {}) {
  std::vector<DimensionRow> rows;
  const auto wants = [&](Family f) {
    return std::find(opts.families.begin(), opts.families.end(), f) != opts.families.end();
  };
  const auto& co = opts.closure;
  if (wants(Family::clifford_full)) {
    for (int n = 1; n <= opts.max_n; ++n) {
      rows.push_back(detail::dimension_row(clifford_gammas(n, co.max_dim), DimensionMeasure::lie,
                                           2LL * n * n + n, co));
    }
  }
  if (wants(Family::clifford_universal)) {
    for (int n = 1; n <= opts.max_n; ++n) {
      rows.push_back(detail::dimension_row(clifford_universal(n, GammaVariant::three, co.max_dim),
                                           DimensionMeasure::lie_with_phase, detail::ipow(4, n), co));
    }
  }
  if (wants(Family::clifford_two_local)) {
    for (int n = 2; n <= opts.max_n; ++n) {
      rows.push_back(detail::dimension_row(two_local_clifford_set(n, GammaVariant::three, co.max_dim),
                                           DimensionMeasure::lie_with_phase, detail::ipow(4, n), co));
    }
  }
  if (wants(Family::torus_split)) {
    for (const auto& [n, l] : opts.torus_cases) {
      rows.push_back(detail::dimension_row(torus_split(n, l, co.max_dim),
                                           DimensionMeasure::lie_with_phase,
                                           detail::ipow(l, 2 * n), co));
    }
  }
  if (wants(Family::torus_two_local)) {
    for (const auto& [n, l] : opts.torus_two_local_cases) {
      rows.push_back(detail::dimension_row(two_local_torus_set(n, l, co.max_dim),
                                           DimensionMeasure::lie_with_phase,
                                           detail::ipow(l, 2 * n), co));
    }
  }
  return rows;
}

}  // namespace qtorus
