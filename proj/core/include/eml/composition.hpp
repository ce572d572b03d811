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

#ifndef EML_COMPOSITION_HPP_
#define EML_COMPOSITION_HPP_

#include <string>
#include <vector>

#include "eml/graph.hpp"
#include "eml/invariants.hpp"

namespace eml {

// Which either/or hypothesis a star-join part is claimed to satisfy.
enum class PartTag {
  kPendantNeighbor,    // (a): the attach vertex satisfies (*1)
  kCompleteBipartite,  // (b): the part is complete bipartite
};

const char* to_string(PartTag tag);

struct StarJoinPart {
  Graph graph;
  int attach = 0;
  PartTag tag = PartTag::kCompleteBipartite;
};

// Parts H_1..H_s, each with an attach vertex v_i. The star join adds one
// hub adjacent to exactly v_1..v_s.
struct StarJoinSpec {
  std::vector<StarJoinPart> parts;

  // Throws InputError unless s >= 2, every part is connected and every
  // attach vertex is in range.
  void validate() const;
};

// Disjoint union of the parts (in order) plus the hub as the last vertex.
Graph star_join(const StarJoinSpec& spec);

struct PartCheck {
  int index = 0;
  bool ind_match_is_one = false;
  bool tag_holds = false;    // ind-match hypothesis report
  bool star2_holds = false;  // min-match hypothesis report
  std::string failure;       // empty when the checked clauses hold
};

struct HypothesisReport {
  bool passed = true;
  std::vector<PartCheck> parts;
};

// Per part: ind-match(H_i) = 1, and the tagged clause ((*1) at v_i, or H_i
// complete bipartite) holds.
HypothesisReport check_thm_ind_hypotheses(const StarJoinSpec& spec,
                                          const SolverBudget& budget = {});
// Per part: v_i satisfies (*2). ind_match_is_one is filled in for
// information but does not affect `passed`.
HypothesisReport check_thm_min_hypotheses(const StarJoinSpec& spec,
                                          const SolverBudget& budget = {});

// (s, sum of min-match(H_i), match). The match entry is sum |V(H_i)|/2 when
// every part has a perfect matching and is computed by the solver on the
// joined graph otherwise. Throws ContractError naming the first part whose
// hypotheses fail.
InvariantTriple predicted_invariants(const StarJoinSpec& spec,
                                     const SolverBudget& budget = {});
bool all_parts_perfectly_matchable(const StarJoinSpec& spec);

bool is_complete_bipartite(const Graph& g);

// The witness specs for p < q: case 1 realises (p, q, q) from complete
// bipartite parts; case 2 realises q < r <= 2q-p+1 with a G_{2(r-q)} part;
// case 3 realises 2q-p+1 < r <= 2q from G_m parts and K_2 parts. Throws
// InputError outside the case's parameter range.
StarJoinSpec thm34_spec(int which, int p, int q, int r);

}  // namespace eml

#endif  // EML_COMPOSITION_HPP_
