// Copyright 2026 The EML Authors.
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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "eml/error.hpp"
#include "eml/invariants.hpp"

namespace eml {

InvariantTriple brute_force_invariants(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) throw InputError("brute_force_invariants: graph has no edges");
  if (m > kBruteForceEdgeLimit) {
    throw InputError("brute_force_invariants: " + std::to_string(m) +
                     " edges exceed the limit of " +
                     std::to_string(kBruteForceEdgeLimit));
  }
  int ind = 0;
  int min_maximal = m + 1;
  int match = 0;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << m); ++subset) {
    // Matching: members pairwise disjoint.
    Word covered = 0;
    bool matching = true;
    for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
      const Edge& e = edges[std::countr_zero(rest)];
      if (covered & e.mask()) {
        matching = false;
        break;
      }
      covered |= e.mask();
    }
    if (!matching) continue;
    const int size = std::popcount(subset);
    match = std::max(match, size);

    // Maximal: no edge outside the subset can be added.
    bool maximal = true;
    for (int j = 0; j < m && maximal; ++j) {
      if (!((subset >> j) & 1) && (covered & edges[j].mask()) == 0) {
        maximal = false;
      }
    }
    if (maximal) min_maximal = std::min(min_maximal, size);

    // Induced: no edge of G meets two distinct members.
    bool induced = true;
    for (int j = 0; j < m && induced; ++j) {
      int met = 0;
      for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
        const int k = std::countr_zero(rest);
        if (k != j && (edges[k].mask() & edges[j].mask()) != 0) ++met;
      }
      if ((subset >> j) & 1) {
        if (met > 0) induced = false;
      } else if (met >= 2) {
        induced = false;
      }
    }
    if (induced) ind = std::max(ind, size);
  }
  return InvariantTriple{ind, min_maximal, match};
}

}  // namespace eml
