// Copyright 2026 The Premise Forge Authors.
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

#ifndef PREMISE_FORGE_SPICE_HPP
#define PREMISE_FORGE_SPICE_HPP

#include <cstddef>
#include <vector>

#include "premise_forge/premise.hpp"

namespace pforge {

struct TupleMatch {
  std::size_t matched = 0;
  std::size_t gen_total = 0;
  std::size_t ref_total = 0;
};

// Greedy exact-lemma matching: each generated tuple takes the first unused
// identical reference tuple.
inline TupleMatch MatchTuples(const std::vector<Premise> &gen, const std::vector<Premise> &ref) {
  TupleMatch m{0, gen.size(), ref.size()};
  std::vector<bool> used(ref.size(), false);
  for (const auto &g : gen) {
    for (std::size_t r = 0; r < ref.size(); ++r) {
      if (!used[r] && ref[r] == g) {
        used[r] = true;
        ++m.matched;
        break;
      }
    }
  }
  return m;
}

// Tuple F-score. Both sets empty -> 1 (a contentless question counts as a
// duplicate); exactly one empty -> 0.
inline double SpiceF1(const std::vector<Premise> &gen, const std::vector<Premise> &ref) {
  if (gen.empty() && ref.empty()) return 1.0;
  if (gen.empty() || ref.empty()) return 0.0;
  const TupleMatch m = MatchTuples(gen, ref);
  if (m.matched == 0) return 0.0;
  const double precision = static_cast<double>(m.matched) / static_cast<double>(m.gen_total);
  const double recall = static_cast<double>(m.matched) / static_cast<double>(m.ref_total);
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace pforge

#endif  // PREMISE_FORGE_SPICE_HPP
