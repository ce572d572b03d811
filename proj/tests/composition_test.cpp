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

#include <vector>

#include "eml/composition.hpp"
#include "eml/constructions.hpp"
#include "eml/error.hpp"
#include "eml/graph.hpp"
#include "eml/invariants.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"

namespace eml {
namespace {

StarJoinPart Part(Graph g, int attach, PartTag tag) {
  return StarJoinPart{std::move(g), attach, tag};
}

StarJoinSpec Spec(std::vector<StarJoinPart> parts) {
  StarJoinSpec spec;
  spec.parts = std::move(parts);
  return spec;
}

TEST(StarJoinTest, TwoEdges) {
  const StarJoinSpec spec =
      Spec({Part(complete(2), 0, PartTag::kCompleteBipartite),
            Part(complete(2), 0, PartTag::kCompleteBipartite)});
  const Graph g = star_join(spec);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(is_tree(g));
  EXPECT_EQ(degree(g, 4), 2);
  EXPECT_TRUE(g.has_edge(4, 0));
  EXPECT_TRUE(g.has_edge(4, 2));
}

TEST(StarJoinTest, FirstWitnessEdgeCount) {
  const StarJoinSpec spec = thm34_spec(1, 2, 3, 3);
  EXPECT_EQ(star_join(spec).size(), 7);
  EXPECT_EQ(bound34_1(2, 3), 7);
}

TEST(StarJoinTest, ThirdWitnessSmallCase) {
  const StarJoinSpec spec = thm34_spec(3, 2, 3, 6);
  const Graph g = star_join(spec);
  EXPECT_EQ(g.size(), bound34_3(2, 3, 6));
  EXPECT_EQ(triple(g), (InvariantTriple{2, 3, 6}));
}

TEST(StarJoinTest, Validation) {
  EXPECT_THROW(star_join(Spec({Part(complete(2), 0, PartTag::kPendantNeighbor)})),
               InputError);
  EXPECT_THROW(star_join(Spec({Part(complete(2), 2, PartTag::kPendantNeighbor),
                               Part(complete(2), 0, PartTag::kPendantNeighbor)})),
               InputError);
  const Graph split = Graph::FromEdges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_THROW(star_join(Spec({Part(split, 0, PartTag::kPendantNeighbor),
                               Part(complete(2), 0, PartTag::kPendantNeighbor)})),
               InputError);
  EXPECT_THROW(thm34_spec(4, 2, 3, 3), InputError);
  EXPECT_THROW(thm34_spec(1, 3, 3, 3), InputError);
}

TEST(IndHypothesesTest, Examples) {
  const auto k33 = Spec({Part(complete_bipartite(3, 3), 0, PartTag::kCompleteBipartite),
                         Part(complete(2), 0, PartTag::kCompleteBipartite)});
  EXPECT_TRUE(check_thm_ind_hypotheses(k33).passed);
  const Graph gr = g_r(3);
  const auto pendant = Spec({Part(gr, gr.vertex("x1"), PartTag::kPendantNeighbor),
                             Part(complete(2), 0, PartTag::kPendantNeighbor)});
  EXPECT_TRUE(check_thm_ind_hypotheses(pendant).passed);
  const auto c5 = Spec({Part(cycle(5), 0, PartTag::kPendantNeighbor),
                        Part(complete(2), 0, PartTag::kPendantNeighbor)});
  const HypothesisReport report = check_thm_ind_hypotheses(c5);
  EXPECT_FALSE(report.passed);
  EXPECT_FALSE(report.parts[0].tag_holds);
  EXPECT_FALSE(report.parts[0].failure.empty());
  EXPECT_TRUE(report.parts[1].tag_holds);
}

TEST(IndHypothesesTest, WrongTagFails) {
  const auto spec = Spec({Part(cycle(4), 0, PartTag::kCompleteBipartite),
                          Part(path(4), 1, PartTag::kCompleteBipartite)});
  const HypothesisReport report = check_thm_ind_hypotheses(spec);
  EXPECT_TRUE(report.parts[0].tag_holds);
  EXPECT_FALSE(report.parts[1].tag_holds);
  EXPECT_FALSE(report.passed);
}

TEST(MinHypothesesTest, Examples) {
  const auto k22 = Spec({Part(complete_bipartite(2, 2), 1, PartTag::kCompleteBipartite),
                         Part(complete_bipartite(2, 2), 3, PartTag::kCompleteBipartite)});
  EXPECT_TRUE(check_thm_min_hypotheses(k22).passed);
  const Graph gr = g_r(4);
  const auto pendant = Spec({Part(gr, gr.vertex("x2"), PartTag::kPendantNeighbor),
                             Part(complete(2), 0, PartTag::kPendantNeighbor)});
  EXPECT_TRUE(check_thm_min_hypotheses(pendant).passed);
  const auto p3 = Spec({Part(path(3), 0, PartTag::kPendantNeighbor),
                        Part(complete(2), 0, PartTag::kPendantNeighbor)});
  const HypothesisReport report = check_thm_min_hypotheses(p3);
  EXPECT_FALSE(report.passed);
  EXPECT_FALSE(report.parts[0].star2_holds);
}

TEST(PredictedInvariantsTest, Examples) {
  const auto k22 = Spec({Part(complete_bipartite(2, 2), 0, PartTag::kCompleteBipartite),
                         Part(complete_bipartite(2, 2), 0, PartTag::kCompleteBipartite)});
  EXPECT_EQ(predicted_invariants(k22), (InvariantTriple{2, 4, 4}));
  EXPECT_EQ(triple(star_join(k22)), (InvariantTriple{2, 4, 4}));
  const auto mixed = Spec({Part(complete(2), 0, PartTag::kCompleteBipartite),
                           Part(complete_bipartite(2, 2), 0, PartTag::kCompleteBipartite)});
  EXPECT_EQ(predicted_invariants(mixed), (InvariantTriple{2, 3, 3}));
  const StarJoinSpec second = thm34_spec(2, 2, 3, 4);
  EXPECT_EQ(second.parts.size(), 2u);
  EXPECT_EQ(predicted_invariants(second), (InvariantTriple{2, 3, 4}));
  const Graph g = star_join(second);
  const testing::OracleValues oracle = testing::Oracle(g);
  EXPECT_EQ((InvariantTriple{oracle.ind, oracle.min, oracle.match}),
            (InvariantTriple{2, 3, 4}));
}

TEST(PredictedInvariantsTest, RejectsFailedHypotheses) {
  const auto p3 = Spec({Part(path(3), 0, PartTag::kPendantNeighbor),
                        Part(complete(2), 0, PartTag::kPendantNeighbor)});
  EXPECT_THROW(predicted_invariants(p3), ContractError);
}

TEST(CompleteBipartiteTest, Recognition) {
  EXPECT_TRUE(is_complete_bipartite(complete_bipartite(2, 5)));
  EXPECT_TRUE(is_complete_bipartite(complete(2)));
  EXPECT_TRUE(is_complete_bipartite(cycle(4)));
  EXPECT_FALSE(is_complete_bipartite(cycle(6)));
  EXPECT_FALSE(is_complete_bipartite(path(4)));
  EXPECT_FALSE(is_complete_bipartite(complete(3)));
}

}  // namespace
}  // namespace eml
