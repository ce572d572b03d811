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

#ifndef EML_INVARIANTS_HPP_
#define EML_INVARIANTS_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eml/graph.hpp"

namespace eml {

// Limits on a single solver call. Unset fields mean unlimited.
struct SolverBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit_seconds;

  // Throws InputError for a zero node limit or a non-positive time limit.
  void validate() const;
};

// (p, q, r) = (ind-match, min-match, match).
struct InvariantTriple {
  int p = 0;
  int q = 0;
  int r = 0;

  // 1 <= p <= q <= r <= 2q: the parameter domain of the extremal problems.
  bool satisfies_chain() const { return 1 <= p && p <= q && q <= r && r <= 2 * q; }
  std::string to_string() const;
  auto operator<=>(const InvariantTriple&) const = default;
};

// Exact solvers. Every one of them returns 0 on an edgeless graph (the
// independence number excepted, which is n there). Each throws
// ResourceError when `budget` runs out, carrying the bounds reached.
int matching_number(const Graph& g, const SolverBudget& budget = {});
int min_maximal_matching_number(const Graph& g,
                                const SolverBudget& budget = {});
int induced_matching_number(const Graph& g, const SolverBudget& budget = {});
int independence_number(const Graph& g, const SolverBudget& budget = {});

// Optimal witnesses. Each is the lexicographically least optimum under the
// fixed edge order (vertex order for the independent set), so repeated runs
// agree exactly.
Matching maximum_matching(const Graph& g, const SolverBudget& budget = {});
Matching minimum_maximal_matching(const Graph& g,
                                  const SolverBudget& budget = {});
Matching maximum_induced_matching(const Graph& g,
                                  const SolverBudget& budget = {});
VertexSet maximum_independent_set(const Graph& g,
                                  const SolverBudget& budget = {});

// Requires at least one edge (InputError otherwise). Verifies
// 1 <= p <= q <= r <= 2q and 2r <= n before returning and throws
// InternalFault if either fails.
InvariantTriple triple(const Graph& g, const SolverBudget& budget = {});

bool has_perfect_matching(const Graph& g);

// Visits every maximal matching of g exactly once, in a fixed order. With
// `size_filter` only those of that size are visited. `visit` returns false
// to stop early; the function returns false iff it was stopped.
bool for_each_maximal_matching(
    const Graph& g, std::optional<int> size_filter,
    const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_maximal_matchings(
    const Graph& g, std::optional<int> size_filter = std::nullopt);

// (*1): v has a neighbour of degree one.
bool satisfies_star1(const Graph& g, int v);
// (*2): v is covered by every maximal matching of minimum size.
bool satisfies_star2(const Graph& g, int v, const SolverBudget& budget = {});

// Ground truth by classifying all 2^|E| edge subsets. Accepts any graph
// with 1 <= |E| <= 24; throws InputError otherwise.
InvariantTriple brute_force_invariants(const Graph& g);

inline constexpr int kBruteForceEdgeLimit = 24;

}  // namespace eml

#endif  // EML_INVARIANTS_HPP_
