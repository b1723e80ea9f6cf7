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


// Prints the Lie closure dimension of each generator family next to the
// dimension of the full unitary algebra.

#include <cstdio>

#include "qtorus/qtorus.hpp"

int main() {
  using namespace qtorus;
  ClosureOptions with_phase;
  with_phase.adjoin_center = true;

  const GeneratorSet sets[] = {
      clifford_gammas(2),       clifford_universal(2), two_local_clifford_set(3),
      torus_split(1, 3),        two_local_torus_set(2, 3),
  };
  std::printf("%-20s %3s %3s %6s %10s %6s\n", "family", "n", "l", "lie", "lie+phase", "N^2");
  for (const auto& s : sets) {
    const LieBasis plain = closure(s);
    const LieBasis full = closure(s, with_phase);
    std::printf("%-20s %3d %3d %6zu %10zu %6zu\n", std::string(to_string(s.family)).c_str(), s.n,
                s.l, plain.size(), full.size(), plain.dim_ambient);
  }
  return 0;
}
