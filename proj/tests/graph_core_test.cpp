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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "eml/canonical.hpp"
#include "eml/constructions.hpp"
#include "eml/error.hpp"
#include "eml/graph.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"

namespace eml {
namespace {

Graph P4() { return path(4); }

TEST(GraphTest, FromEdgesRejectsBadInput) {
  const std::vector<Edge> loop = {Edge(1, 1)};
  EXPECT_THROW(Graph::FromEdges(3, loop), InputError);
  const std::vector<Edge> out_of_range = {Edge(0, 3)};
  EXPECT_THROW(Graph::FromEdges(3, out_of_range), InputError);
  EXPECT_THROW(Graph::FromEdges(65, {}), CapacityError);
  EXPECT_THROW(Graph::FromEdges(2, {}, {"a", "a"}), InputError);
}

TEST(GraphTest, DuplicateEdgesCollapse) {
  const std::vector<Edge> edges = {Edge(0, 1), Edge(1, 0)};
  EXPECT_EQ(Graph::FromEdges(2, edges).size(), 1);
}

TEST(GraphTest, Degree) {
  for (int v = 0; v < 4; ++v) EXPECT_EQ(degree(complete(4), v), 3);
  const Graph g = g_r(5);
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(degree(g, g.vertex("y" + std::to_string(k))), 1);
  }
  for (int v = 0; v < 5; ++v) EXPECT_EQ(degree(cycle(5), v), 2);
}

TEST(GraphTest, ClosedNeighborhood) {
  EXPECT_EQ(closed_neighborhood(complete(4), 0), VertexSet({0, 1, 2, 3}));
  const Graph g = g_r(3);
  const VertexSet want = {g.vertex("x1"), g.vertex("x2"), g.vertex("x3"),
                          g.vertex("y1")};
  EXPECT_EQ(closed_neighborhood(g, g.vertex("x1")), want);
  EXPECT_EQ(closed_neighborhood(Graph::FromEdges(1, {}), 0), VertexSet({0}));
}

TEST(GraphTest, IsIndependent) {
  EXPECT_FALSE(is_independent(complete(4), VertexSet({0, 1})));
  const Graph g = g_r(4);
  VertexSet ys;
  for (int k = 1; k <= 4; ++k) ys = ys.with(g.vertex("y" + std::to_string(k)));
  EXPECT_TRUE(is_independent(g, ys));
  EXPECT_TRUE(is_independent(g, VertexSet()));
}

TEST(GraphTest, IsMatching) {
  const Graph c5 = cycle(5);
  EXPECT_TRUE(is_matching(c5, Matching({Edge(0, 1), Edge(2, 3)})));
  EXPECT_FALSE(is_matching(c5, Matching({Edge(0, 1), Edge(1, 2)})));
  EXPECT_FALSE(is_matching(c5, Matching({Edge(0, 2)})));
  const Graph g = g_r(4);
  std::vector<Edge> pm;
  for (int k = 1; k <= 4; ++k) {
    pm.emplace_back(g.vertex("x" + std::to_string(k)),
                    g.vertex("y" + std::to_string(k)));
  }
  EXPECT_TRUE(is_matching(g, Matching(pm)));
}

TEST(GraphTest, IsMaximalMatching) {
  const Graph g = g_r(4);
  const Matching m({Edge(g.vertex("x1"), g.vertex("x3")),
                    Edge(g.vertex("x2"), g.vertex("x4"))});
  EXPECT_TRUE(is_maximal_matching(g, m));
  EXPECT_FALSE(is_maximal_matching(cycle(5), Matching({Edge(0, 1)})));
  EXPECT_TRUE(is_maximal_matching(complete(2), Matching({Edge(0, 1)})));
}

TEST(GraphTest, MaximalityChecksAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = testing::RandomGraph(2 + trial % 9, 0.4, rng);
    std::vector<Edge> all = g.edges();
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Edge> m;
    Word used = 0;
    const std::size_t take = all.empty() ? 0 : rng() % (all.size() + 1);
    for (std::size_t i = 0; i < take; ++i) {
      if (used & all[i].mask()) continue;
      used |= all[i].mask();
      m.push_back(all[i]);
    }
    const Matching matching(m);
    EXPECT_EQ(is_maximal_matching(g, matching),
              is_maximal_matching_by_extension(g, matching))
        << emit_graph6(g) << " " << to_string(matching);
  }
}

TEST(GraphTest, IsInducedMatching) {
  const Graph two_k2 = Graph::FromEdges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_TRUE(is_induced_matching(two_k2, Matching({Edge(0, 1), Edge(2, 3)})));
  EXPECT_FALSE(is_induced_matching(P4(), Matching({Edge(0, 1), Edge(2, 3)})));
  const Graph g = g1(4);
  std::vector<Edge> m;
  for (int i = 1; i < 4; ++i) {
    m.emplace_back(g.vertex("x" + std::to_string(i)),
                   g.vertex("y" + std::to_string(i)));
  }
  m.emplace_back(g.vertex("z3"), g.vertex("z4"));
  EXPECT_TRUE(is_induced_matching(g, Matching(m)));
}

TEST(GraphTest, InducedSubgraph) {
  const Graph g = g4(3);
  VertexSet xy;
  for (int i = 1; i <= 3; ++i) {
    xy = xy.with(g.vertex("x" + std::to_string(i)));
    xy = xy.with(g.vertex("y" + std::to_string(i)));
  }
  EXPECT_EQ(canonical_form(induced_subgraph(g, xy)),
            canonical_form(complete_bipartite(3, 3)));
  EXPECT_EQ(induced_subgraph(g, VertexSet()).order(), 0);
  EXPECT_EQ(induced_subgraph(g, g.vertices()), g);
}

TEST(GraphTest, ConnectedComponents) {
  const Graph two_k2 = Graph::FromEdges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto parts = connected_components(two_k2);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].size(), 2);
  EXPECT_EQ(parts[1].size(), 2);
  EXPECT_EQ(connected_components(cycle(6)).size(), 1u);
  EXPECT_TRUE(connected_components(Graph()).empty());
}

TEST(Graph6Test, Examples) {
  EXPECT_EQ(parse_graph6("D~{"), complete(5));
  EXPECT_EQ(emit_graph6(Graph::FromEdges(1, {})), "@");
  EXPECT_EQ(emit_graph6(complete(4)), "C~");
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D~"), ParseError);
  EXPECT_THROW(parse_graph6("D~{{"), ParseError);
  EXPECT_THROW(parse_graph6("D\x7f{"), ParseError);
}

TEST(Graph6Test, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int n : {0, 1, 2, 5, 17, 40, 62, 63, 64}) {
    for (int rep = 0; rep < 20; ++rep) {
      const Graph g = testing::RandomGraph(n, 0.3, rng);
      const std::string text = emit_graph6(g);
      EXPECT_EQ(parse_graph6(text), g);
      EXPECT_EQ(emit_graph6(parse_graph6(text)), text);
    }
  }
}

TEST(CanonicalTest, RelabelledCycleSameKey) {
  std::mt19937_64 rng(3);
  const Graph c5 = cycle(5);
  EXPECT_EQ(canonical_form(c5), canonical_form(testing::Shuffled(c5, rng)));
}

TEST(CanonicalTest, PathAndStarDiffer) {
  EXPECT_NE(canonical_form(path(4)), canonical_form(star(3)));
}

TEST(CanonicalTest, AllLabelledPathsOnFourVertices) {
  std::set<std::string> keys;
  int labelled = 0;
  const std::string want = canonical_form(path(4));
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = testing::FromPairMask(4, mask);
    if (g.size() != 3 || !is_connected(g)) continue;
    bool is_path = false;
    for (int v = 0; v < 4; ++v) is_path |= degree(g, v) == 1;
    int leaves = 0;
    for (int v = 0; v < 4; ++v) leaves += degree(g, v) == 1;
    if (!is_path || leaves != 2) continue;
    ++labelled;
    keys.insert(canonical_form(g));
  }
  EXPECT_EQ(labelled, 12);
  ASSERT_EQ(keys.size(), 1u);
  EXPECT_EQ(*keys.begin(), want);
}

TEST(CanonicalTest, MatchesPermutationMinimumClasses) {
  // Two graphs share a canonical form exactly when their n!-minimum keys
  // agree.
  std::mt19937_64 rng(5);
  std::vector<Graph> pool;
  for (int i = 0; i < 150; ++i) {
    pool.push_back(testing::RandomGraph(6, 0.5, rng));
    pool.push_back(testing::Shuffled(pool.back(), rng));
  }
  std::vector<std::vector<Word>> brute;
  std::vector<std::string> canon;
  for (const Graph& g : pool) {
    brute.push_back(testing::PermutationMinimum(g));
    canon.push_back(canonical_form(g));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      EXPECT_EQ(brute[i] == brute[j], canon[i] == canon[j]);
    }
  }
}

TEST(CanonicalTest, InvariantUnderRelabellingLargeOrders) {
  std::mt19937_64 rng(9);
  for (int n : {12, 24, 40, 64}) {
    for (double density : {0.1, 0.5}) {
      const Graph g = testing::RandomGraph(n, density, rng);
      EXPECT_EQ(canonical_form(g), canonical_form(testing::Shuffled(g, rng)));
    }
  }
  // Highly regular inputs exercise the automorphism pruning.
  for (const Graph& g : {complete_bipartite(8, 8), cycle(30), g_r(12),
                         whisker(cycle(10))}) {
    EXPECT_EQ(canonical_form(g), canonical_form(testing::Shuffled(g, rng)));
  }
}

TEST(CanonicalTest, LabelingMapsOntoCanonicalGraph) {
  std::mt19937_64 rng(13);
  const Graph g = testing::RandomGraph(10, 0.4, rng);
  const CanonicalLabeling c = canonical_labeling(g);
  EXPECT_EQ(relabel(g, c.labeling), c.graph);
}

}  // namespace
}  // namespace eml
