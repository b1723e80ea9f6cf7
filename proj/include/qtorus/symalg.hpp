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

// Exact monomials mu^p T_0^{e_0} ... T_{2n-1}^{e_{2n-1}} in the torus
// generators, with mu = exp(i pi / l). Multiplication uses only
// T_j T_k = zeta T_k T_j (j < k) and T_k^l = 1, so no matrices are involved
// until mono_eval.

#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qtorus/errors.hpp"
#include "qtorus/generators.hpp"
#include "qtorus/linalg.hpp"

namespace qtorus {

struct Monomial {
  int l = 2;
  int n = 1;
  int phase_exp = 0;       // exponent of mu, in [0, 2l)
  std::vector<int> exps;   // exponent of T_k, each in [0, l); size 2n

  static Monomial identity(int l, int n) {
    Monomial m;
    m.l = l;
    m.n = n;
    m.exps.assign(static_cast<std::size_t>(2 * n), 0);
    m.validate();
    return m;
  }

  /// The single generator T_k.
  static Monomial generator(int l, int n, int k) {
    Monomial m = identity(l, n);
    if (k < 0 || k >= 2 * n) {
      detail::fail(ErrorCode::invalid_argument,
                   "Monomial::generator: index " + std::to_string(k) +
                       " out of range for n=" + std::to_string(n));
    }
    m.exps[static_cast<std::size_t>(k)] = 1 % l;
    return m;
  }

  bool is_identity() const {
    if (phase_exp != 0) return false;
    for (int e : exps) {
      if (e != 0) return false;
    }
    return true;
  }

  void validate() const {
    if (l < 2 || n < 1) {
      detail::fail(ErrorCode::invalid_argument, "Monomial: needs l >= 2 and n >= 1");
    }
    if (exps.size() != static_cast<std::size_t>(2 * n)) {
      detail::fail(ErrorCode::invalid_argument, "Monomial: expected 2n exponents");
    }
    if (phase_exp < 0 || phase_exp >= 2 * l) {
      detail::fail(ErrorCode::invalid_argument, "Monomial: phase exponent out of range");
    }
    for (int e : exps) {
      if (e < 0 || e >= l) {
        detail::fail(ErrorCode::invalid_argument, "Monomial: exponent out of range");
      }
    }
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

namespace detail {

inline int wrap(long long v, int m) {
  return static_cast<int>(((v % m) + m) % m);
}

}  // namespace detail

/// Canonical product a * b. Each T_j of b moved left past a T_k of a with
/// j < k contributes zeta^{-1}, i.e. -2 in the mu exponent.
inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.l != b.l || a.n != b.n) {
    detail::fail(ErrorCode::parameter_mismatch,
                 "mono_mul: (l, n) differ: (" + std::to_string(a.l) + "," +
                     std::to_string(a.n) + ") vs (" + std::to_string(b.l) +
                     "," + std::to_string(b.n) + ")");
  }
  const std::size_t m = a.exps.size();
  long long swaps = 0;
  long long a_suffix = 0;  // sum of a_k for k > j
  for (std::size_t j = m; j-- > 0;) {
    swaps += static_cast<long long>(b.exps[j]) * a_suffix;
    a_suffix += a.exps[j];
  }
  Monomial out = a;
  out.phase_exp = detail::wrap(static_cast<long long>(a.phase_exp) + b.phase_exp - 2 * swaps,
                               2 * a.l);
  for (std::size_t k = 0; k < m; ++k) {
    out.exps[k] = detail::wrap(static_cast<long long>(a.exps[k]) + b.exps[k], a.l);
  }
  return out;
}

inline Monomial mono_pow(const Monomial& a, int p) {
  if (p < 0) detail::fail(ErrorCode::invalid_argument, "mono_pow: exponent must be >= 0");
  Monomial out = Monomial::identity(a.l, a.n);
  Monomial base = a;
  for (unsigned e = static_cast<unsigned>(p); e != 0; e >>= 1) {
    if (e & 1U) out = mono_mul(out, base);
    base = mono_mul(base, base);
  }
  return out;
}

inline Monomial mono_inv(const Monomial& a) {
  Monomial inv = Monomial::identity(a.l, a.n);
  for (std::size_t k = 0; k < a.exps.size(); ++k) {
    inv.exps[k] = detail::wrap(-static_cast<long long>(a.exps[k]), a.l);
  }
  inv.phase_exp = detail::wrap(-static_cast<long long>(a.phase_exp), 2 * a.l);
  // what remains of inv * a is a pure phase; cancel it
  const Monomial rest = mono_mul(inv, a);
  inv.phase_exp = detail::wrap(static_cast<long long>(inv.phase_exp) - rest.phase_exp,
                               2 * a.l);
  return inv;
}

/// Dense value mu^p T_0^{e_0} T_1^{e_1} ... (ascending k).
inline ComplexMatrix mono_eval(const Monomial& a, const GeneratorSet& gens) {
  if (gens.family != Family::torus_full || gens.l != a.l || gens.n != a.n) {
    detail::fail(ErrorCode::family_mismatch,
                 "mono_eval: needs the torus_full generator set for l=" +
                     std::to_string(a.l) + ", n=" + std::to_string(a.n));
  }
  ComplexMatrix out = identity(gens.dim());
  for (std::size_t k = 0; k < a.exps.size(); ++k) {
    for (int e = 0; e < a.exps[k]; ++e) out = out * gens.elements[k].matrix;
  }
  return mu_pow(a.l, a.phase_exp) * out;
}

/// "μ^p · T0^e0 T1^e1 ..." with every exponent written out.
inline std::string render(const Monomial& a) {
  std::ostringstream os;
  os << "μ^" << a.phase_exp << " ·";
  for (std::size_t k = 0; k < a.exps.size(); ++k) {
    os << " T" << k << '^' << a.exps[k];
  }
  return os.str();
}

/// Parses the render() grammar. ASCII "mu" and "*" are accepted for μ and ·,
/// the phase factor is optional, a bare "Tk" means exponent 1, and factors
/// may appear in any order (they are multiplied left to right).
inline Monomial parse_monomial(std::string_view text, int l, int n) {
  Monomial out = Monomial::identity(l, n);
  std::string s(text);
  for (const std::string_view from : {"μ", "·"}) {
    const std::string to = from == "μ" ? "mu" : " ";
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos)) {
      s.replace(pos, from.size(), to);
    }
  }
  for (char& c : s) {
    if (c == '*') c = ' ';
  }
  std::istringstream is(s);
  std::string tok;
  auto bad = [&](const std::string& why) {
    detail::fail(ErrorCode::invalid_argument,
                 "parse_monomial: " + why + " in \"" + std::string(text) + "\"");
  };
  auto read_int = [&](const std::string& digits) {
    if (digits.empty()) bad("missing exponent");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad("bad number '" + digits + "'");
    }
    return std::stoll(digits);
  };
  while (is >> tok) {
    if (tok.rfind("mu", 0) == 0) {
      long long p = 1;
      if (tok.size() > 2) {
        if (tok[2] != '^') bad("bad phase token '" + tok + "'");
        p = read_int(tok.substr(3));
      }
      out.phase_exp = detail::wrap(out.phase_exp + p, 2 * l);
      continue;
    }
    if (tok.empty() || tok[0] != 'T') bad("unexpected token '" + tok + "'");
    const std::size_t caret = tok.find('^');
    const long long k = read_int(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    const long long e = caret == std::string::npos ? 1 : read_int(tok.substr(caret + 1));
    if (k >= 2 * n) bad("generator index " + std::to_string(k) + " out of range");
    Monomial g = Monomial::generator(l, n, static_cast<int>(k));
    out = mono_mul(out, mono_pow(g, static_cast<int>(e % l)));
  }
  return out;
}

/// Complex rank of the l^{2n} phase-free monomial evaluations, from the
/// eigenvalues of their Gram matrix (threshold 1e-9 relative to the largest).
inline int span_dimension(int l, int n, std::size_t max_dim = kDefaultMaxDim) {
  require_levels(l);
  if (n < 1) detail::fail(ErrorCode::invalid_argument, "span_dimension: n must be >= 1");
  detail::checked_power(l, n, max_dim, "span_dimension");
  const std::size_t count = detail::checked_power(l, 2 * n, max_dim, "span_dimension (monomial count)");
  const GeneratorSet gens = torus_T(n, l, max_dim);

  std::vector<ComplexMatrix> mats;
  mats.reserve(count);
  Monomial m = Monomial::identity(l, n);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (auto& e : m.exps) {
      e = static_cast<int>(rest % static_cast<std::size_t>(l));
      rest /= static_cast<std::size_t>(l);
    }
    mats.push_back(mono_eval(m, gens));
  }
  const auto c = static_cast<Eigen::Index>(count);
  ComplexMatrix gram(c, c);
  for (Eigen::Index i = 0; i < c; ++i) {
    for (Eigen::Index j = i; j < c; ++j) {
      const Complex v = (mats[static_cast<std::size_t>(i)].conjugate().cwiseProduct(
                             mats[static_cast<std::size_t>(j)])).sum();
      gram(i, j) = v;
      gram(j, i) = std::conj(v);
    }
  }
  const HermEig eig = herm_eig(gram);
  const double top = eig.values.size() > 0 ? eig.values(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > 1e-9 * top) ++rank;
  }
  return rank;
}

}  // namespace qtorus
