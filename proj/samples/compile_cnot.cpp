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


// Compiles CNOT into exponentials of the two-qubit Clifford set. The default
// synthesis is exact at every slice count; plain group commutators show the
// error falling as the slice count doubles.

#include <cstdio>

#include "qtorus/qtorus.hpp"

int main() {
  using namespace qtorus;
  const GeneratorSet gens = two_local_clifford_set(2);
  const LieBasis basis = closure(gens);

  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;

  CompileConfig group;
  group.synthesis = CommutatorSynthesis::group_commutator;
  const ConvergenceTable exact = compile_report(cnot, gens, basis, {}, doubling_sweep(1, 64));
  const ConvergenceTable approx = compile_report(cnot, gens, basis, group, doubling_sweep(1, 64));
  std::printf("%6s %14s %8s %14s %8s\n", "M", "auto error", "gates", "group error", "gates");
  for (std::size_t i = 0; i < exact.rows.size(); ++i) {
    const auto& a = exact.rows[i];
    const auto& b = approx.rows[i];
    std::printf("%6d %14.3e %8zu %14.3e %8zu\n", a.slices, a.phase_invariant_error, a.gate_count,
                b.phase_invariant_error, b.gate_count);
  }
  std::printf("group commutator improvement M=1 to M=64: %.2fx\n", approx.improvement);

  CompileConfig cfg;
  cfg.slices = 1;
  const GateSequence seq = compile(cnot, gens, basis, cfg);
  std::printf("\nM = 1 sequence (%zu gates):\n", seq.items.size());
  for (std::size_t i = 0; i < seq.items.size() && i < 12; ++i) {
    std::printf("  exp(%+.6f * %s)\n", seq.items[i].tau, seq.items[i].id.c_str());
  }
  if (seq.items.size() > 12) std::printf("  ...\n");
  return 0;
}
