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


// End-to-end checks of the library's headline claims. Prints one PASS/FAIL
// line per criterion and exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtorus/qtorus.hpp"

namespace {

using namespace qtorus;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void relation_suite() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (int n : {1, 2, 3}) worst = std::max(worst, relation_report(clifford_gammas(n)).max_violation());
  for (auto [n, l] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 2},
                      std::pair{2, 3}}) {
    worst = std::max(worst, relation_report(torus_T(n, l)).max_violation());
  }
  const double t = seconds_since(start);
  report(1, "relation suite", worst <= 1e-12 && t < 10.0,
         "max violation " + fmt(worst) + ", " + fmt(t) + " s");
}

std::vector<DimensionRow> dimension_rows(double& elapsed) {
  const auto start = Clock::now();
  const std::vector<DimensionRow> rows = dimension_table();
  elapsed = seconds_since(start);
  return rows;
}

void dimension_table_check(const std::vector<DimensionRow>& rows, double elapsed) {
  bool ok = elapsed < 300.0;
  std::ostringstream detail;
  for (const auto& r : rows) {
    ok = ok && r.pass();
    detail << to_string(r.family) << "(n=" << r.n;
    if (r.family == Family::torus_split || r.family == Family::torus_two_local) detail << ",l=" << r.l;
    detail << ")=" << r.measured() << (r.pass() ? "" : "!=" + std::to_string(r.predicted)) << ' ';
  }
  for (int n = 1; n <= 3; ++n) {
    const SpinReport s = spin_subgroup_check(n);
    ok = ok && s.pass();
  }
  detail << "spin checks ok, " << fmt(elapsed) << " s";
  report(2, "closure dimensions", ok, detail.str());
}

void span_check() {
  bool ok = true;
  std::ostringstream detail;
  for (auto [l, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    const int rank = span_dimension(l, n);
    const long long expect = static_cast<long long>(std::pow(l, 2 * n) + 0.5);
    ok = ok && rank == expect;
    detail << "(" << l << "," << n << ")=" << rank << ' ';
  }
  report(3, "monomial span", ok, detail.str());
}

std::vector<Monomial> every_monomial(int l, int n) {
  std::vector<Monomial> out;
  int count = 1;
  for (int i = 0; i < 2 * n; ++i) count *= l;
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

void symbolic_vs_dense() {
  double worst = 0.0;
  std::size_t pairs = 0;
  for (int l : {2, 3}) {
    const GeneratorSet t = torus_T(1, l);
    const auto all = every_monomial(l, 1);
    std::vector<ComplexMatrix> dense;
    for (const auto& m : all) dense.push_back(mono_eval(m, t));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        worst = std::max(worst, max_abs(mono_eval(mono_mul(all[i], all[j]), t) - dense[i] * dense[j]));
        ++pairs;
      }
    }
  }
  Rng rng(2718);
  for (int l : {2, 3}) {
    const GeneratorSet t = torus_T(2, l);
    std::uniform_int_distribution<int> phase(0, 2 * l - 1);
    std::uniform_int_distribution<int> exp(0, l - 1);
    auto draw = [&] {
      Monomial m = Monomial::identity(l, 2);
      m.phase_exp = phase(rng);
      for (auto& e : m.exps) e = exp(rng);
      return m;
    };
    for (int k = 0; k < 1000; ++k) {
      const Monomial a = draw();
      const Monomial b = draw();
      worst = std::max(worst, max_abs(mono_eval(mono_mul(a, b), t) - mono_eval(a, t) * mono_eval(b, t)));
      ++pairs;
    }
  }
  report(4, "symbolic vs dense products", worst <= 1e-12,
         std::to_string(pairs) + " pairs, max deviation " + fmt(worst));
}

void exp_log_roundtrip() {
  constexpr double kPi = std::numbers::pi;
  Rng rng(31415);
  std::uniform_real_distribution<double> phase(-kPi + 1e-3, kPi - 1e-3);
  double worst = 0.0;
  int count = 0;
  for (std::size_t dim : {2U, 4U, 8U, 9U}) {
    for (int k = 0; k < 200; ++k) {
      // prescribed eigenphases over the whole admissible range, random eigenbasis
      const ComplexMatrix q = random_unitary(dim, rng);
      Eigen::VectorXcd d(static_cast<Eigen::Index>(dim));
      for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = Complex(0.0, phase(rng));
      const ComplexMatrix a = q * d.asDiagonal() * q.adjoint();
      const ComplexMatrix back = logm_unitary(expm_antiherm(a)).log;
      worst = std::max(worst, (back - a).norm());
      ++count;
    }
  }
  report(5, "expm/logm roundtrip", worst <= 1e-9,
         std::to_string(count) + " matrices, max error " + fmt(worst));
}

void compiler_convergence() {
  const GeneratorSet gens = two_local_clifford_set(2);
  const LieBasis basis = closure(gens);
  const std::vector<int> sweep = doubling_sweep(1, 64);

  bool ok = true;
  double worst_final = 0.0;
  int non_monotone = 0;
  Rng rng(20240601);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix u = random_special_unitary(4, rng);
    const ConvergenceTable tab = compile_report(u, gens, basis, {}, sweep);
    worst_final = std::max(worst_final, tab.rows.back().phase_invariant_error);
    if (!tab.monotone) ++non_monotone;
  }
  ok = ok && non_monotone == 0 && worst_final <= 1e-2;

  double worst_primitive = 0.0;
  for (const auto& g : gens.elements) {
    for (double theta : {-std::numbers::pi, -1.0, -0.1, 0.3, 2.0, std::numbers::pi}) {
      CompileConfig cfg;
      cfg.slices = 1;
      const GateSequence seq = compile(expm_antiherm(theta * g.matrix), gens, basis, cfg);
      worst_primitive = std::max(worst_primitive, seq.report.phase_invariant_error);
    }
  }
  ok = ok && worst_primitive <= 1e-10;

  const GeneratorSet gammas = clifford_gammas(2);
  const LieBasis so5 = closure(gammas);
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  a(0, 0) = Complex(0.0, 1.0);
  a -= (a.trace() / 4.0) * identity(4);
  double residual = -1.0;
  try {
    compile(expm_antiherm(a), gammas, so5);
  } catch (const NotMemberError& e) {
    residual = e.residual();
  }
  ok = ok && residual > 0.1;

  report(6, "compiler convergence", ok,
         "20 targets, non-monotone " + std::to_string(non_monotone) + ", worst error at M=64 " +
             fmt(worst_final) + "; primitive targets " + fmt(worst_primitive) +
             "; outside target rejected with residual " + fmt(residual));
}

void recipe_fidelity(const std::vector<DimensionRow>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.recipe_error);
  report(7, "recipe fidelity", worst <= 1e-8,
         std::to_string(rows.size()) + " table rows, both closures each, max error " + fmt(worst));
}

}  // namespace

int main() {
  try {
    relation_suite();
    double elapsed = 0.0;
    const std::vector<DimensionRow> rows = dimension_rows(elapsed);
    dimension_table_check(rows, elapsed);
    span_check();
    symbolic_vs_dense();
    exp_log_roundtrip();
    compiler_convergence();
    recipe_fidelity(rows);
  } catch (const std::exception& e) {
    std::printf("[FAIL] unexpected exception: %s\n", e.what());
    return 1;
  }
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
