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

#include "eml/composition.hpp"

#include <string>
#include <vector>

#include "eml/constructions.hpp"
#include "eml/error.hpp"

namespace eml {

const char* to_string(PartTag tag) {
  switch (tag) {
    case PartTag::kPendantNeighbor:
      return "a";
    case PartTag::kCompleteBipartite:
      return "b";
  }
  return "?";
}

void StarJoinSpec::validate() const {
  if (parts.size() < 2) {
    throw InputError("a star join needs at least 2 parts, got " +
                     std::to_string(parts.size()));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const StarJoinPart& part = parts[i];
    if (part.graph.order() == 0 || !is_connected(part.graph)) {
      throw InputError("part " + std::to_string(i + 1) + " is not connected");
    }
    if (part.attach < 0 || part.attach >= part.graph.order()) {
      throw InputError("part " + std::to_string(i + 1) +
                       ": attach vertex out of range");
    }
  }
}

Graph star_join(const StarJoinSpec& spec) {
  spec.validate();
  long total = 1;
  for (const auto& part : spec.parts) total += part.graph.order();
  if (total > kMaxVertices) {
    throw CapacityError("star join would have " + std::to_string(total) +
                        " vertices; the cap is 64");
  }
  GraphBuilder b(0);
  std::vector<int> attach;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const Graph& h = spec.parts[i].graph;
    const int offset = b.order();
    for (int v = 0; v < h.order(); ++v) {
      b.add_vertex("H" + std::to_string(i + 1) + "." + h.label(v));
    }
    for (const Edge& e : h.edges()) b.add_edge(offset + e.u, offset + e.v);
    attach.push_back(offset + spec.parts[i].attach);
  }
  const int hub = b.add_vertex("v");
  for (int a : attach) b.add_edge(a, hub);
  return b.build();
}

bool is_complete_bipartite(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  // In a connected complete bipartite graph one side is N(0) and the other
  // is everything else.
  const Word right = g.row(0);
  const Word left = g.vertices().bits() & ~right;
  for (int v : VertexSet(left)) {
    if (g.row(v) != right) return false;
  }
  for (int v : VertexSet(right)) {
    if (g.row(v) != left) return false;
  }
  return true;
}

namespace {

std::string PartName(int index) { return "part " + std::to_string(index + 1); }

}  // namespace

HypothesisReport check_thm_ind_hypotheses(const StarJoinSpec& spec,
                                          const SolverBudget& budget) {
  spec.validate();
  HypothesisReport report;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const StarJoinPart& part = spec.parts[i];
    PartCheck check;
    check.index = static_cast<int>(i);
    check.ind_match_is_one = induced_matching_number(part.graph, budget) == 1;
    check.tag_holds = part.tag == PartTag::kPendantNeighbor
                          ? satisfies_star1(part.graph, part.attach)
                          : is_complete_bipartite(part.graph);
    if (!check.ind_match_is_one) {
      check.failure = PartName(check.index) + ": ind-match is not 1";
    } else if (!check.tag_holds) {
      check.failure =
          PartName(check.index) +
          (part.tag == PartTag::kPendantNeighbor
               ? ": attach vertex " + part.graph.label(part.attach) +
                     " has no degree-1 neighbour (*1)"
               : std::string(": tagged (b) but not complete bipartite"));
    }
    if (!check.failure.empty()) report.passed = false;
    report.parts.push_back(std::move(check));
  }
  return report;
}

HypothesisReport check_thm_min_hypotheses(const StarJoinSpec& spec,
                                          const SolverBudget& budget) {
  spec.validate();
  HypothesisReport report;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const StarJoinPart& part = spec.parts[i];
    PartCheck check;
    check.index = static_cast<int>(i);
    check.ind_match_is_one = induced_matching_number(part.graph, budget) == 1;
    check.star2_holds = satisfies_star2(part.graph, part.attach, budget);
    if (!check.star2_holds) {
      check.failure = PartName(check.index) + ": attach vertex " +
                      part.graph.label(part.attach) +
                      " is missed by some minimum maximal matching (*2)";
      report.passed = false;
    }
    report.parts.push_back(std::move(check));
  }
  return report;
}

bool all_parts_perfectly_matchable(const StarJoinSpec& spec) {
  for (const auto& part : spec.parts) {
    if (!has_perfect_matching(part.graph)) return false;
  }
  return true;
}

InvariantTriple predicted_invariants(const StarJoinSpec& spec,
                                     const SolverBudget& budget) {
  for (const HypothesisReport& report :
       {check_thm_ind_hypotheses(spec, budget),
        check_thm_min_hypotheses(spec, budget)}) {
    for (const PartCheck& check : report.parts) {
      if (!check.failure.empty()) {
        throw ContractError("star-join hypotheses fail: " + check.failure);
      }
    }
  }
  InvariantTriple t;
  t.p = static_cast<int>(spec.parts.size());
  for (const auto& part : spec.parts) {
    t.q += min_maximal_matching_number(part.graph, budget);
  }
  if (all_parts_perfectly_matchable(spec)) {
    for (const auto& part : spec.parts) t.r += part.graph.order() / 2;
  } else {
    t.r = matching_number(star_join(spec), budget);
  }
  return t;
}

namespace {

StarJoinPart Bipartite(int a) {
  return StarJoinPart{complete_bipartite(a, a), 0,
                      PartTag::kCompleteBipartite};
}

// G_m attached at x1, whose pendant y1 gives (*1).
StarJoinPart Whiskered(int m) {
  return StarJoinPart{g_r(m), 0, PartTag::kPendantNeighbor};
}

}  // namespace

StarJoinSpec thm34_spec(int which, int p, int q, int r) {
  StarJoinSpec spec;
  switch (which) {
    case 1: {
      bound34_1(p, q);  // range check
      if (r != q) throw InputError("case 1 realises r = q");
      const BoundParams d = divide(q, p);
      for (int i = 0; i < p - d.b; ++i) spec.parts.push_back(Bipartite(d.a));
      for (int i = 0; i < d.b; ++i) spec.parts.push_back(Bipartite(d.a + 1));
      break;
    }
    case 2: {
      bound34_2(p, q, r);
      const BoundParams d = divide(2 * q - r, p - 1);
      for (int i = 0; i < p - d.b - 1; ++i) {
        spec.parts.push_back(Bipartite(d.a));
      }
      for (int i = 0; i < d.b; ++i) spec.parts.push_back(Bipartite(d.a + 1));
      spec.parts.push_back(Whiskered(2 * (r - q)));
      break;
    }
    case 3: {
      bound34_3(p, q, r);
      const int groups = p - 2 * q + r;
      const BoundParams d = divide(r - q, groups);
      for (int i = 0; i < groups - d.b; ++i) {
        spec.parts.push_back(Whiskered(2 * d.a));
      }
      for (int i = 0; i < d.b; ++i) spec.parts.push_back(Whiskered(2 * d.a + 2));
      for (int i = 0; i < 2 * q - r; ++i) {
        spec.parts.push_back(Bipartite(1));
      }
      break;
    }
    default:
      throw InputError("witness case must be 1, 2 or 3");
  }
  return spec;
}

}  // namespace eml
