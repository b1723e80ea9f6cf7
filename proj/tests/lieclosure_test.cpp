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


#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qtorus/generators.hpp"
#include "qtorus/lieclosure.hpp"
#include "qtorus/random.hpp"

namespace qtorus {
namespace {

// Fixed-point oracle: span(S), then span(S + [S, S]) until the rank stops
// growing. Independent of the BFS builder and its recipes.
std::size_t brute_force_dimension(const GeneratorSet& gens) {
  std::vector<ComplexMatrix> span;
  for (const auto& g : gens.elements) span.push_back(g.matrix);
  span = orthonormal_span(span, 1e-9);
  for (;;) {
    std::vector<ComplexMatrix> grown = span;
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (std::size_t j = i + 1; j < span.size(); ++j) grown.push_back(commutator(span[i], span[j]));
    }
    grown = orthonormal_span(grown, 1e-9);
    if (grown.size() == span.size()) return span.size();
    span = std::move(grown);
  }
}

GeneratorSet custom_set(std::vector<std::pair<std::string, ComplexMatrix>> items, int n = 1) {
  GeneratorSet s;
  s.family = Family::custom;
  s.n = n;
  for (auto& [id, m] : items) s.elements.push_back({id, m, 0, classify(m)});
  return s;
}

TEST(Closure, CliffordAloneIsOrthogonalAlgebra) {
  const LieBasis b = closure(clifford_gammas(2));
  EXPECT_EQ(b.size(), 10U);
  EXPECT_EQ(b.dim_ambient, 16U);
  EXPECT_EQ(b.size(), brute_force_dimension(clifford_gammas(2)));
  EXPECT_LE(orthonormality_error(b), 1e-12);
}

TEST(Closure, WithGammaUIsFullUnitaryAlgebra) {
  const GeneratorSet s = clifford_universal(2);
  // commutators are traceless: su(4), and u(4) once i*I is adjoined
  EXPECT_EQ(closure(s).size(), 15U);
  EXPECT_EQ(brute_force_dimension(s), 15U);
  ClosureOptions opts;
  opts.adjoin_center = true;
  const LieBasis full = closure(s, opts);
  EXPECT_EQ(full.size(), 16U);
  ASSERT_TRUE(full.center_index.has_value());
  EXPECT_EQ(to_sexpr(full.recipes[*full.center_index]), kCenterId);
}

TEST(Closure, TorusSplitSingleSite) {
  const GeneratorSet s = torus_split(1, 3);
  EXPECT_EQ(closure(s).size(), 8U);
  EXPECT_EQ(brute_force_dimension(s), 8U);
  ClosureOptions opts;
  opts.adjoin_center = true;
  EXPECT_EQ(closure(s, opts).size(), 9U);
}

TEST(Closure, SmallCasesMatchOracle) {
  for (const GeneratorSet& s : {clifford_gammas(1), clifford_universal(1), torus_split(1, 4),
                                two_local_clifford_set(2), torus_split(1, 2)}) {
    EXPECT_EQ(closure(s).size(), brute_force_dimension(s)) << to_string(s.family);
  }
}

TEST(Closure, BasisIsAntiHermitianAndRecipesReproduce) {
  for (const GeneratorSet& s : {two_local_clifford_set(2), torus_split(1, 3)}) {
    const LieBasis b = closure(s);
    for (const auto& m : b.basis) EXPECT_LE(anti_hermiticity_deviation(m), 1e-9);
    EXPECT_LE(recipe_fidelity_error(b), 1e-8);
    for (std::size_t j = 0; j < b.size(); ++j) {
      EXPECT_EQ(b.coefficients[j].size(), j + 1);
      EXPECT_EQ(b.generation[j] == 0, b.recipes[j]->is_leaf());
      EXPECT_LE((evaluate_recipe(b.recipes[j], b.primitives) - b.raw[j]).norm(), 1e-12);
    }
  }
}

TEST(Closure, Deterministic) {
  const LieBasis a = closure(two_local_clifford_set(2));
  const LieBasis b = closure(two_local_clifford_set(2));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    EXPECT_EQ(to_sexpr(a.recipes[j]), to_sexpr(b.recipes[j]));
    EXPECT_EQ(a.basis[j], b.basis[j]);
  }
}

TEST(Closure, InvariantUnderRealRecombination) {
  const GeneratorSet g = clifford_gammas(2);
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  std::vector<std::pair<std::string, ComplexMatrix>> mixed;
  for (int i = 0; i < 4; ++i) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (const auto& e : g.elements) m += normal(rng) * e.matrix;
    mixed.emplace_back("M" + std::to_string(i), m);
  }
  EXPECT_EQ(closure(custom_set(mixed, 2)).size(), 10U);
}

TEST(Closure, MonotoneUnderAddingGenerators) {
  const GeneratorSet u = clifford_universal(2);
  std::vector<std::pair<std::string, ComplexMatrix>> items;
  std::size_t last = 0;
  for (const auto& e : u.elements) {
    items.emplace_back(e.id, e.matrix);
    const std::size_t d = closure(custom_set(items, 2)).size();
    EXPECT_GE(d, last);
    last = d;
  }
  EXPECT_EQ(last, 15U);
}

TEST(Closure, PairProductsRecoverEveryGamma) {
  for (int n : {2, 3}) {
    const GeneratorSet two = two_local_clifford_set(n);
    std::vector<std::pair<std::string, ComplexMatrix>> items;
    for (std::size_t i = 0; i + 1 < two.elements.size(); ++i) {  // drop Gamma_u
      items.emplace_back(two.elements[i].id, two.elements[i].matrix);
    }
    const LieBasis b = closure(custom_set(items, n));
    for (const auto& g : clifford_gammas(n).elements) {
      EXPECT_TRUE(membership(g.matrix, b).member) << g.id << " n=" << n;
    }
  }
}

TEST(Closure, CenterOnlyWithAdjoinedPhase) {
  const ComplexMatrix center = kI * identity(4);
  EXPECT_FALSE(membership(center, closure(two_local_clifford_set(2))).member);
  ClosureOptions opts;
  opts.adjoin_center = true;
  EXPECT_TRUE(membership(center, closure(two_local_clifford_set(2), opts)).member);
}

TEST(Closure, Errors) {
  try {
    closure(torus_T(1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_anti_hermitian);
  }
  ClosureOptions small;
  small.max_dim = 15;
  try {
    closure(clifford_gammas(2), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::capacity);
  }
  EXPECT_THROW(closure(GeneratorSet{}), Error);
  EXPECT_THROW(closure(custom_set({{"a", kI * sigma_x()}, {"b", kI * identity(4)}})), Error);
}

TEST(Membership, BasisElementHasUnitCoordinates) {
  const LieBasis b = closure(clifford_gammas(2));
  const Membership m = membership(b.basis[0], b);
  EXPECT_TRUE(m.member);
  EXPECT_NEAR(m.residual, 0.0, 1e-14);
  EXPECT_NEAR(m.coefficients[0], 1.0, 1e-14);
  for (std::size_t j = 1; j < m.coefficients.size(); ++j) EXPECT_NEAR(m.coefficients[j], 0.0, 1e-14);
}

TEST(Membership, PairProductInsideOrthogonalAlgebra) {
  const GeneratorSet g = clifford_gammas(2);
  const LieBasis b = closure(g);
  // -Gamma_1 Gamma_2 = i sigma_x (x) sigma_x
  const ComplexMatrix xx = kI * tensor(sigma_x(), sigma_x());
  EXPECT_LE(max_abs(-g.elements[1].matrix * g.elements[2].matrix - xx), 1e-15);
  EXPECT_TRUE(membership(xx, b).member);
  // i sigma_z (x) sigma_z is orthogonal to all ten basis directions
  const Membership zz = membership(kI * tensor(sigma_z(), sigma_z()), b);
  EXPECT_FALSE(zz.member);
  EXPECT_NEAR(zz.residual, 2.0, 1e-12);
}

TEST(Membership, DiagonalTargetOutsideOrthogonalAlgebra) {
  const LieBasis b = closure(clifford_gammas(2));
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  a(0, 0) = kI;
  a -= (a.trace() / 4.0) * identity(4);
  const Membership m = membership(a, b);
  EXPECT_FALSE(m.member);
  EXPECT_GT(m.residual, 0.1);
  EXPECT_NEAR(m.residual, 0.5, 1e-12);
}

TEST(Membership, RejectsNonAntiHermitian) {
  const LieBasis b = closure(clifford_gammas(1));
  try {
    membership(sigma_x(), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_anti_hermitian);
  }
  EXPECT_THROW(membership(kI * identity(4), b), Error);
}

TEST(Spin, SubgroupCheck) {
  for (int n : {1, 2, 3}) {
    const SpinReport r = spin_subgroup_check(n);
    EXPECT_TRUE(r.pass()) << n;
    EXPECT_EQ(r.dim, 2 * n * n + n);
    EXPECT_EQ(r.generator_count + r.pair_count, r.predicted);
  }
  const SpinReport one = spin_subgroup_check(1);
  EXPECT_EQ(one.dim, 3);
  const LieBasis b = closure(clifford_gammas(1));
  for (const ComplexMatrix& p : {sigma_x(), sigma_y(), sigma_z()}) {
    EXPECT_TRUE(membership(kI * p, b).member);
  }
}

TEST(Recipe, SexprAndEvaluation) {
  const Recipe r = make_commutator(make_leaf("G0"), make_commutator(make_leaf("G0G1"), make_leaf("Gu")));
  EXPECT_EQ(to_sexpr(r), "(comm G0 (comm G0G1 Gu))");
  EXPECT_EQ(r->depth(), 2);
  PrimitiveMap prims{{"G0", kI * sigma_x()}, {"G0G1", kI * sigma_y()}, {"Gu", kI * sigma_z()}};
  const ComplexMatrix expect =
      commutator(kI * sigma_x(), commutator(kI * sigma_y(), kI * sigma_z()));
  EXPECT_LE(max_abs(evaluate_recipe(r, prims) - expect), 1e-15);
  EXPECT_THROW(evaluate_recipe(make_leaf("missing"), prims), Error);
}

TEST(DimensionTable, SmallTable) {
  TableOptions opts;
  opts.max_n = 2;
  opts.torus_cases = {{1, 3}};
  opts.torus_two_local_cases = {};
  for (const auto& row : dimension_table(opts)) {
    EXPECT_TRUE(row.pass()) << to_string(row.family) << " n=" << row.n << " measured "
                            << row.measured() << " predicted " << row.predicted;
    EXPECT_LE(row.recipe_error, 1e-8);
    EXPECT_EQ(row.dim_with_phase, row.dim + 1);
  }
}

}  // namespace
}  // namespace qtorus
