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

#ifndef EML_SEARCH_HPP_
#define EML_SEARCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eml/graph.hpp"
#include "eml/invariants.hpp"

namespace eml {

enum class Objective { kVertices, kEdges };
enum class SearchStatus { kCertified, kInconclusive };
enum class Outcome { kPass, kFail, kInconclusive };

const char* to_string(Objective objective);
const char* to_string(SearchStatus status);
const char* to_string(Outcome outcome);

// Throws InputError naming the first violated inequality of
// 1 <= p <= q <= r <= 2q.
void validate_triple(const InvariantTriple& t);

// The least order allowed by the vertex-count theorem: 2r, or 2r+1 when
// p >= 2 and q = r.
int predicted_min_vertices(const InvariantTriple& t);
// Largest proven lower bound on the edge count: C(r+1, 2) when p = 1,
// otherwise 2r-1 (q < r) or 2r (q = r).
std::int64_t proven_edge_floor(const InvariantTriple& t);
// Least edge count among the explicit constructions that realise t, with
// the name of the construction; nullopt when none applies.
std::optional<std::pair<std::int64_t, std::string>> best_known_edge_bound(
    const InvariantTriple& t);

struct SearchOptions {
  int workers = 1;
  // Witnesses kept per result.
  int witnesses = 1;
  SolverBudget solver_budget;
  // Stop a min_edges scan as soon as the incumbent meets
  // proven_edge_floor(t). Off by default: the certificate then rests on
  // the exhaustive scan alone.
  bool trust_proven_floors = false;
};

struct SearchReport {
  InvariantTriple target;
  Objective objective = Objective::kVertices;
  SearchStatus status = SearchStatus::kInconclusive;
  // Certified minimum.
  std::optional<int> value;
  // Best graph found (equal to value once certified).
  std::optional<int> upper_bound;
  // Every smaller value has been ruled out.
  int lower_bound = 0;
  int budget = 0;
  std::string budget_source;
  std::vector<std::string> witnesses;
  std::uint64_t scanned = 0;
  double elapsed_seconds = 0;
  std::string note;
};

struct CensusRow {
  int n = 0;
  InvariantTriple triple;
  std::uint64_t count = 0;
  int min_edges = 0;
  // First graphs (in enumeration order) with min_edges edges.
  std::vector<std::string> witnesses;
};

struct ClaimCheck {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string observed;
  Outcome outcome = Outcome::kPass;
  std::string counterexample;
  std::optional<std::int64_t> bound;
  std::optional<std::int64_t> witness_edges;
  std::optional<std::int64_t> certified_min;
};

struct VerificationReport {
  std::vector<ClaimCheck> checks;
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;

  void add(ClaimCheck check);
  bool refuted() const { return failed > 0; }
};

inline const std::vector<std::string>& verify_claim_ids() {
  static const std::vector<std::string> ids = {
      "min-vertices", "graph-sets", "min-edges", "notpm", "minE-minV", "lowerbound"};
  return ids;
}

struct VerifyScope {
  // Subset of verify_claim_ids(); empty selects all.
  std::vector<std::string> claims;
  // Vertex-count claims cover every triple with r <= r_max.
  int r_max = 4;
  // Exhaustive per-graph claims scan every connected graph of order <= n_max.
  int n_max = 8;
  // Edge-count claims cover the instances with r <= edge_r_max.
  int edge_r_max = 4;
  // minE >= minV - 1 over every triple with r <= pair_r_max.
  int pair_r_max = 3;
};

struct BoundScope {
  int q_max = 7;
  int p_max = 4;
  int r_max = 8;
  // Certify min_edges (for the gap) only where r <= certify_r_max.
  int certify_r_max = 3;
};

struct TreeOrderRow {
  int n = 0;
  std::uint64_t trees = 0;
};

struct TreeReport {
  int n_max = 0;
  std::vector<TreeOrderRow> orders;
  std::uint64_t total = 0;
  bool counterexample_found = false;
  std::string counterexample;
  int ind_match = 0;
  int min_match = 0;
  double elapsed_seconds = 0;
};

struct ConditionalRow {
  int p = 0;
  std::int64_t bound = 0;  // 2p+3
  std::int64_t floor = 0;  // 2p+2
  SearchReport search;
  // "supports", "below-bound", "inconclusive".
  std::string verdict;
};

struct ConditionalReport {
  std::vector<ConditionalRow> rows;
};

// Owns the per-order tables (triple -> count, least edge count, witnesses)
// so repeated queries reuse one scan. Thread-compatible, not thread-safe.
class Searcher {
 public:
  explicit Searcher(SearchOptions options = {});

  const SearchOptions& options() const { return options_; }

  // Scans n = 2r, 2r+1, ... up to n_budget (default and cap 10).
  SearchReport min_vertices(const InvariantTriple& t,
                            std::optional<int> n_budget = std::nullopt);
  // Scans n upward from 2r over graphs with at most `budget` edges (default
  // best_known_edge_bound) and stops once n-1 exceeds the incumbent.
  SearchReport min_edges(const InvariantTriple& t,
                         std::optional<int> edge_budget = std::nullopt);
  // Rows sorted by triple. Order 1 has no edges and so no rows.
  std::vector<CensusRow> census(int n);

  VerificationReport verify_theorems(const VerifyScope& scope);
  VerificationReport check_upper_bounds(const BoundScope& scope);
  TreeReport tree_conjecture_check(int n_max);
  ConditionalReport conditional_theorem42_check(int p_max);

  // Graphs examined by all scans so far.
  std::uint64_t graphs_scanned() const { return scanned_; }

 private:
  struct Entry {
    std::uint64_t count = 0;
    int min_edges = 0;
    std::vector<std::string> witnesses;
  };
  struct Level {
    std::map<InvariantTriple, Entry> entries;
    std::uint64_t graphs = 0;
  };

  // Full table of order n (edge_limit < 0) or of the graphs with at most
  // edge_limit edges.
  const Level& level(int n, int edge_limit);

  SearchOptions options_;
  std::map<std::pair<int, int>, Level> levels_;
  std::map<InvariantTriple, SearchReport> certified_edges_;
  std::map<InvariantTriple, SearchReport> certified_vertices_;
  std::uint64_t scanned_ = 0;
};

}  // namespace eml

#endif  // EML_SEARCH_HPP_
