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

#include <map>
#include <vector>

#include "eml/constructions.hpp"
#include "eml/enumerate.hpp"
#include "eml/error.hpp"
#include "eml/invariants.hpp"
#include "eml/search.hpp"
#include "gtest/gtest.h"

namespace eml {
namespace {

TEST(ValidateTripleTest, NamesViolatedInequality) {
  EXPECT_NO_THROW(validate_triple({1, 1, 1}));
  EXPECT_NO_THROW(validate_triple({2, 3, 6}));
  try {
    validate_triple({1, 2, 5});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("r <= 2q"), std::string::npos);
  }
  EXPECT_THROW(validate_triple({0, 1, 1}), InputError);
  EXPECT_THROW(validate_triple({3, 2, 3}), InputError);
  EXPECT_THROW(validate_triple({1, 3, 2}), InputError);
}

TEST(FormulaTest, PredictedMinVertices) {
  EXPECT_EQ(predicted_min_vertices({1, 2, 2}), 4);
  EXPECT_EQ(predicted_min_vertices({2, 2, 2}), 5);
  EXPECT_EQ(predicted_min_vertices({2, 2, 3}), 6);
  EXPECT_EQ(predicted_min_vertices({1, 1, 1}), 2);
}

TEST(FormulaTest, EdgeFloors) {
  EXPECT_EQ(proven_edge_floor({1, 2, 4}), 10);
  EXPECT_EQ(proven_edge_floor({2, 2, 3}), 5);
  EXPECT_EQ(proven_edge_floor({3, 3, 3}), 6);
  const auto bound = best_known_edge_bound({2, 3, 3});
  ASSERT_TRUE(bound.has_value());
  EXPECT_EQ(bound->first, 7);
  EXPECT_EQ(best_known_edge_bound({1, 4, 6})->first, f1(4, 6));
}

TEST(MinVerticesTest, Examples) {
  Searcher searcher;
  const SearchReport a = searcher.min_vertices({1, 2, 2});
  EXPECT_EQ(a.status, SearchStatus::kCertified);
  EXPECT_EQ(a.value, 4);
  EXPECT_EQ(searcher.min_vertices({2, 2, 2}).value, 5);
  const SearchReport c = searcher.min_vertices({2, 2, 3});
  EXPECT_EQ(c.value, 6);
  ASSERT_FALSE(c.witnesses.empty());
  const Graph w = parse_graph6(c.witnesses.front());
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(triple(w), (InvariantTriple{2, 2, 3}));
}

TEST(MinVerticesTest, BudgetTooSmallIsInconclusive) {
  Searcher searcher;
  const SearchReport r = searcher.min_vertices({2, 2, 3}, 5);
  EXPECT_EQ(r.status, SearchStatus::kInconclusive);
  EXPECT_FALSE(r.value.has_value());
  EXPECT_EQ(r.lower_bound, 6);
}

TEST(MinEdgesTest, Examples) {
  Searcher searcher;
  EXPECT_EQ(searcher.min_edges({2, 2, 3}).value, 5);
  EXPECT_EQ(searcher.min_edges({3, 3, 3}).value, 6);
  const SearchReport r = searcher.min_edges({1, 2, 4});
  EXPECT_EQ(r.status, SearchStatus::kCertified);
  EXPECT_EQ(r.value, 10);
  for (const auto& w : r.witnesses) {
    const Graph g = parse_graph6(w);
    EXPECT_EQ(g.size(), 10);
    EXPECT_EQ(triple(g), (InvariantTriple{1, 2, 4}));
  }
}

TEST(MinEdgesTest, TrustedFloorsAgree) {
  SearchOptions options;
  options.trust_proven_floors = true;
  Searcher trusting(options);
  Searcher plain;
  for (InvariantTriple t : {InvariantTriple{2, 2, 3}, InvariantTriple{2, 2, 2},
                            InvariantTriple{1, 2, 3}}) {
    EXPECT_EQ(trusting.min_edges(t).value, plain.min_edges(t).value);
  }
}

TEST(CensusTest, CountsSumToClassCount) {
  Searcher searcher;
  EXPECT_TRUE(searcher.census(1).empty());
  const std::vector<std::uint64_t> classes = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t total = 0;
    for (const CensusRow& row : searcher.census(n)) {
      EXPECT_TRUE(row.triple.satisfies_chain());
      EXPECT_LE(2 * row.triple.r, n);
      total += row.count;
    }
    EXPECT_EQ(total, classes[n - 1]) << "n=" << n;
  }
}

TEST(CensusTest, RowsMatchDirectScan) {
  Searcher searcher;
  std::map<InvariantTriple, std::pair<std::uint64_t, int>> want;
  for (const Graph& g : enumerate_connected_graphs(6)) {
    auto& [count, least] = want[triple(g)];
    if (count == 0 || g.size() < least) least = g.size();
    ++count;
  }
  const auto rows = searcher.census(6);
  ASSERT_EQ(rows.size(), want.size());
  for (const CensusRow& row : rows) {
    EXPECT_EQ(row.count, want[row.triple].first);
    EXPECT_EQ(row.min_edges, want[row.triple].second);
  }
}

TEST(VerifyTest, NotPerfectlyMatchable) {
  Searcher searcher;
  VerifyScope scope;
  scope.claims = {"notpm"};
  const VerificationReport report = searcher.verify_theorems(scope);
  EXPECT_GT(report.passed, 0);
  EXPECT_EQ(report.failed, 0);
}

TEST(VerifyTest, UnknownClaim) {
  Searcher searcher;
  VerifyScope scope;
  scope.claims = {"nonsense"};
  EXPECT_THROW(searcher.verify_theorems(scope), InputError);
}

TEST(UpperBoundTest, ExampleBound) {
  Searcher searcher;
  BoundScope scope;
  scope.q_max = 4;
  scope.p_max = 2;
  scope.r_max = 6;
  scope.certify_r_max = 3;
  const VerificationReport report = searcher.check_upper_bounds(scope);
  EXPECT_EQ(report.failed, 0);
  bool saw = false;
  for (const ClaimCheck& c : report.checks) {
    if (c.instance == "(2,3,3)" && c.bound == 7) saw = true;
  }
  EXPECT_TRUE(saw);
}

TEST(TreeCheckTest, SmallOrders) {
  Searcher searcher;
  const TreeReport r = searcher.tree_conjecture_check(8);
  EXPECT_FALSE(r.counterexample_found);
  EXPECT_EQ(r.total, 1u + 1 + 1 + 2 + 3 + 6 + 11 + 23);
}

TEST(TreeCheckTest, PathsAndStars) {
  for (int n = 2; n <= 10; ++n) {
    const Graph p = path(n);
    EXPECT_EQ(induced_matching_number(p), min_maximal_matching_number(p));
    EXPECT_EQ(min_maximal_matching_number(p), (n + 1) / 3) << n;
  }
  for (int m = 1; m <= 8; ++m) {
    EXPECT_EQ(induced_matching_number(star(m)), 1);
    EXPECT_EQ(min_maximal_matching_number(star(m)), 1);
  }
}

TEST(ConditionalTest, SmallP) {
  Searcher searcher;
  const ConditionalReport report = searcher.conditional_theorem42_check(2);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].bound, 7);
  EXPECT_EQ(report.rows[0].search.value, 7);
  EXPECT_EQ(report.rows[0].verdict, "supports");
}

}  // namespace
}  // namespace eml
