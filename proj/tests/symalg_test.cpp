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
#include "qtorus/symalg.hpp"

namespace qtorus {
namespace {

// Every monomial at (l, n), phases included.
std::vector<Monomial> all_monomials(int l, int n) {
  std::vector<Monomial> out;
  const int slots = 2 * n;
  int count = 1;
  for (int i = 0; i < slots; ++i) count *= l;
  for (int p = 0; p < 2 * l; ++p) {
    for (int idx = 0; idx < count; ++idx) {
      Monomial m = Monomial::identity(l, n);
      m.phase_exp = p;
      int rest = idx;
      for (auto& e : m.exps) {
        e = rest % l;
        rest /= l;
      }
      out.push_back(m);
    }
  }
  return out;
}

Monomial random_monomial(int l, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> phase(0, 2 * l - 1);
  std::uniform_int_distribution<int> exp(0, l - 1);
  Monomial m = Monomial::identity(l, n);
  m.phase_exp = phase(rng);
  for (auto& e : m.exps) e = exp(rng);
  return m;
}

TEST(MonoMul, IdentityIsNeutral) {
  const Monomial m = parse_monomial("mu^3 T0^2 T1", 3, 1);
  EXPECT_EQ(mono_mul(Monomial::identity(3, 1), m), m);
  EXPECT_EQ(mono_mul(m, Monomial::identity(3, 1)), m);
}

TEST(MonoMul, ReorderingPicksUpInverseZeta) {
  // T0 T1 = zeta T1 T0, so T1 T0 = zeta^{-1} T0 T1 = mu^{-2} T0 T1
  const Monomial t0 = Monomial::generator(3, 1, 0);
  const Monomial t1 = Monomial::generator(3, 1, 1);
  const Monomial p = mono_mul(t1, t0);
  EXPECT_EQ(p.phase_exp, 4);
  EXPECT_EQ(p.exps, (std::vector<int>{1, 1}));
  const GeneratorSet t = torus_T(1, 3);
  EXPECT_LE(max_abs(mono_eval(p, t) - t.elements[1].matrix * t.elements[0].matrix), 1e-12);
  // in ascending order no phase appears
  EXPECT_EQ(mono_mul(t0, t1).phase_exp, 0);
}

TEST(MonoMul, QubitSquareIsIdentity) {
  const Monomial t0 = Monomial::generator(2, 1, 0);
  EXPECT_TRUE(mono_mul(t0, t0).is_identity());
}

TEST(MonoMul, ParameterMismatch) {
  try {
    mono_mul(Monomial::identity(2, 1), Monomial::identity(3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parameter_mismatch);
  }
  EXPECT_THROW(mono_mul(Monomial::identity(2, 1), Monomial::identity(2, 2)), Error);
}

TEST(MonoMul, SwapRoundTripHasNoPhase) {
  for (int l : {2, 3, 5}) {
    const Monomial tj = Monomial::generator(l, 2, 1);
    const Monomial tk = Monomial::generator(l, 2, 3);
    // T_j T_k (T_k T_j)^{-1} = zeta, and undoing both factors leaves nothing
    const Monomial forward = mono_mul(tj, tk);
    const Monomial backward = mono_mul(tk, tj);
    const Monomial ratio = mono_mul(forward, mono_inv(backward));
    EXPECT_EQ(ratio.phase_exp, 2 % (2 * l));
    EXPECT_EQ(ratio.exps, (std::vector<int>(4, 0)));
    EXPECT_TRUE(mono_mul(mono_mul(forward, mono_inv(tk)), mono_inv(tj)).is_identity());
  }
}

TEST(MonoMul, AssociativeExhaustiveSmall) {
  for (int l : {2, 3}) {
    const auto all = all_monomials(l, 1);
    std::mt19937_64 rng(static_cast<unsigned>(l));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const Monomial& c = all[pick(rng)];
        EXPECT_EQ(mono_mul(mono_mul(a, b), c), mono_mul(a, mono_mul(b, c)));
      }
    }
  }
}

TEST(MonoMul, AssociativeRandomTwoSites) {
  std::mt19937_64 rng(17);
  for (int l : {2, 3, 4}) {
    for (int t = 0; t < 300; ++t) {
      const Monomial a = random_monomial(l, 2, rng);
      const Monomial b = random_monomial(l, 2, rng);
      const Monomial c = random_monomial(l, 2, rng);
      EXPECT_EQ(mono_mul(mono_mul(a, b), c), mono_mul(a, mono_mul(b, c)));
    }
  }
}

TEST(MonoMul, DenseHomomorphismExhaustive) {
  for (int l : {2, 3}) {
    const GeneratorSet t = torus_T(1, l);
    const auto all = all_monomials(l, 1);
    std::vector<ComplexMatrix> dense;
    for (const auto& m : all) dense.push_back(mono_eval(m, t));
    double worst = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        worst = std::max(worst, max_abs(mono_eval(mono_mul(all[i], all[j]), t) - dense[i] * dense[j]));
      }
    }
    EXPECT_LE(worst, 1e-12) << "l=" << l;
  }
}

TEST(MonoMul, QubitCaseReproducesClifford) {
  // Gamma_k = i T_k at l = 2
  const GeneratorSet t = torus_T(2, 2);
  const GeneratorSet g = clifford_gammas(2);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Monomial a = random_monomial(2, 2, rng);
    const Monomial b = random_monomial(2, 2, rng);
    auto gamma_eval = [&](const Monomial& m) {
      ComplexMatrix out = mu_pow(2, m.phase_exp) * identity(4);
      for (std::size_t k = 0; k < 4; ++k) {
        for (int e = 0; e < m.exps[k]; ++e) out = out * (g.elements[k].matrix / kI);
      }
      return out;
    };
    EXPECT_LE(max_abs(gamma_eval(mono_mul(a, b)) - gamma_eval(a) * gamma_eval(b)), 1e-12);
  }
}

TEST(MonoPow, OrderAndInverse) {
  for (int l : {2, 3, 4}) {
    for (int k = 0; k < 4; ++k) {
      EXPECT_TRUE(mono_pow(Monomial::generator(l, 2, k), l).is_identity());
    }
  }
  EXPECT_TRUE(mono_inv(Monomial::identity(3, 2)).is_identity());
  EXPECT_EQ(mono_inv(Monomial::generator(3, 1, 0)), mono_pow(Monomial::generator(3, 1, 0), 2));
  EXPECT_TRUE(mono_pow(Monomial::generator(3, 1, 0), 0).is_identity());
  EXPECT_THROW(mono_pow(Monomial::identity(3, 1), -1), Error);
}

TEST(MonoInv, InverseOfRandomMonomials) {
  std::mt19937_64 rng(23);
  for (int l : {2, 3, 5}) {
    for (int t = 0; t < 200; ++t) {
      const Monomial a = random_monomial(l, 2, rng);
      EXPECT_TRUE(mono_mul(mono_inv(a), a).is_identity());
      EXPECT_TRUE(mono_mul(a, mono_inv(a)).is_identity());
    }
  }
}

TEST(MonoEval, Examples) {
  const GeneratorSet t2 = torus_T(1, 2);
  EXPECT_LE(max_abs(mono_eval(Monomial::identity(2, 1), t2) - identity(2)), 1e-15);
  EXPECT_LE(max_abs(mono_eval(Monomial::generator(2, 1, 0), t2) - sigma_x()), 1e-15);
  const GeneratorSet t3 = torus_T(2, 3);
  EXPECT_LE(max_abs(mono_eval(Monomial::identity(3, 2), t3) - identity(9)), 1e-15);
}

TEST(MonoEval, FamilyMismatch) {
  try {
    mono_eval(Monomial::identity(2, 1), clifford_gammas(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::family_mismatch);
  }
  EXPECT_THROW(mono_eval(Monomial::identity(3, 1), torus_T(1, 2)), Error);
}

TEST(Render, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const Monomial m = random_monomial(4, 2, rng);
    const std::string text = render(m);
    EXPECT_EQ(parse_monomial(text, 4, 2), m) << text;
  }
  EXPECT_EQ(render(parse_monomial("mu^2 T0^1 T1^2", 3, 1)), "μ^2 · T0^1 T1^2");
}

TEST(Parse, AsciiAndUnordered) {
  EXPECT_EQ(parse_monomial("mu^2 * T0 * T1^2", 3, 1), parse_monomial("μ^2 · T0^1 T1^2", 3, 1));
  EXPECT_EQ(parse_monomial("T1 T0", 3, 1), mono_mul(Monomial::generator(3, 1, 1),
                                                    Monomial::generator(3, 1, 0)));
  EXPECT_TRUE(parse_monomial("", 3, 1).is_identity());
  EXPECT_EQ(parse_monomial("mu", 3, 1).phase_exp, 1);
}

TEST(Parse, Rejects) {
  for (const char* bad : {"T9", "X0", "T0^", "mu^x", "T0^-1"}) {
    try {
      parse_monomial(bad, 3, 1);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_argument) << bad;
    }
  }
}

TEST(Monomial, ValidateRejectsOutOfRange) {
  Monomial m = Monomial::identity(3, 1);
  m.exps[0] = 3;
  EXPECT_THROW(m.validate(), Error);
  m.exps[0] = 0;
  m.phase_exp = 6;
  EXPECT_THROW(m.validate(), Error);
  EXPECT_THROW(Monomial::generator(3, 1, 2), Error);
  EXPECT_THROW(Monomial::identity(1, 1), Error);
}

TEST(SpanDimension, Examples) {
  EXPECT_EQ(span_dimension(2, 1), 4);
  EXPECT_EQ(span_dimension(3, 1), 9);
  EXPECT_EQ(span_dimension(2, 2), 16);
  EXPECT_EQ(span_dimension(3, 2), 81);
  EXPECT_EQ(span_dimension(4, 1), 16);
}

TEST(SpanDimension, Capacity) {
  try {
    span_dimension(2, 7, 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::capacity);
  }
}

}  // namespace
}  // namespace qtorus
