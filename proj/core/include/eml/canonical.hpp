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

#ifndef EML_CANONICAL_HPP_
#define EML_CANONICAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eml/graph.hpp"

namespace eml {

struct CanonicalLabeling {
  // Vertex v of the input sits at position labeling[v] of `graph`.
  std::vector<int> labeling;
  Graph graph;
  // Search-tree leaves visited; a cost measure only.
  std::uint64_t leaves = 0;
};

// Partition refinement plus individualization, keeping the least relabelled
// adjacency over the leaves and pruning sibling branches that lie in one
// orbit of the automorphisms found so far. Isomorphic inputs give equal
// `graph`; labels are dropped.
CanonicalLabeling canonical_labeling(const Graph& g);

// graph6 of the canonical graph: equal iff the inputs are isomorphic.
std::string canonical_form(const Graph& g);

// Allocation-light form for hot loops. `rows` is a symmetric loop-free
// adjacency on rows.size() <= 64 vertices; `out` receives the canonical
// rows and `labeling`, when non-null, the relabelling.
void canonical_rows(std::span<const Word> rows, std::vector<Word>& out,
                    std::vector<int>* labeling = nullptr);

}  // namespace eml

#endif  // EML_CANONICAL_HPP_
