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
#include <chrono>
#include <string>
#include <vector>

#include "eml/error.hpp"
#include "eml/invariants.hpp"
#include "solver_internal.hpp"

namespace eml {

namespace internal {

Meter::Meter(const SolverBudget& budget) {
  budget.validate();
  if (budget.node_limit) node_limit_ = *budget.node_limit;
  if (budget.time_limit_seconds) {
    has_deadline_ = true;
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(*budget.time_limit_seconds));
  }
}

int GreedyMatchingSize(const Graph& g, Word mask) {
  int size = 0;
  Word free = mask;
  for (Word rest = mask; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    if (!(free & Bit(u))) continue;
    const Word nb = g.row(u) & free;
    if (nb != 0) {
      free &= ~(Bit(u) | (nb & -nb));
      ++size;
    }
  }
  return size;
}

namespace {

// Minimum maximal matching by branching on the lowest edge {u, v} still
// free: every maximal matching extending the current one saturates u or v,
// so one of the free edges at u or at v is chosen next.
class MinMaximalSearch {
 public:
  MinMaximalSearch(const Graph& g, Meter& meter, int* best)
      : g_(g), meter_(meter), best_(best) {}

  void dfs(Word free, int chosen) {
    meter_.tick();
    int u = -1;
    Word u_nb = 0;
    for (Word rest = free; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      const Word nb = g_.row(x) & free;
      if (nb != 0) {
        u = x;
        u_nb = nb;
        break;
      }
    }
    if (u < 0) {
      if (chosen < *best_) *best_ = chosen;
      return;
    }
    // A maximal matching of what is left has at least half as many edges as
    // any matching of it, in particular the greedy one.
    const int lower = (internal::GreedyMatchingSize(g_, free) + 1) / 2;
    if (chosen + lower >= *best_) return;
    const int v = std::countr_zero(u_nb);
    for (Word rest = u_nb; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      dfs(free & ~(Bit(u) | Bit(w)), chosen + 1);
      if (chosen + lower >= *best_) return;
    }
    for (Word rest = g_.row(v) & free & ~Bit(u); rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      dfs(free & ~(Bit(v) | Bit(w)), chosen + 1);
      if (chosen + lower >= *best_) return;
    }
  }

 private:
  const Graph& g_;
  Meter& meter_;
  int* best_;
};

template <int W>
int InducedMatchingWide(const std::vector<Edge>& edges, const Graph& g,
                        Word mask, Meter& meter, int* best) {
  const int m = static_cast<int>(edges.size());
  std::vector<Bits<W>> compatible(m);
  std::vector<Word> reach(m);
  for (int i = 0; i < m; ++i) {
    reach[i] = (g.row(edges[i].u) | g.row(edges[i].v) | edges[i].mask()) & mask;
  }
  Bits<W> all;
  for (int i = 0; i < m; ++i) {
    all.set(i);
    for (int j = 0; j < m; ++j) {
      if (i != j && (reach[i] & edges[j].mask()) == 0) compatible[i].set(j);
    }
  }
  CliqueSearch<W>(compatible, meter, best).run(all);
  return *best;
}

}  // namespace

int MinMaximalOn(const Graph& g, Word mask, Meter& meter, int* best) {
  // Any maximal matching is an upper bound; the greedy one is at hand.
  *best = GreedyMatchingSize(g, mask);
  MinMaximalSearch(g, meter, best).dfs(mask, 0);
  return *best;
}

int IndependenceOn(const Graph& g, Word mask, Meter& meter, int* best) {
  std::vector<Bits<1>> complement(g.order());
  for (int v = 0; v < g.order(); ++v) {
    complement[v].w[0] = ~g.row(v) & mask & ~Bit(v);
  }
  Bits<1> cand;
  cand.w[0] = mask;
  *best = 0;
  CliqueSearch<1>(complement, meter, best).run(cand);
  return *best;
}

int InducedMatchingOn(const Graph& g, Word mask, Meter& meter, int* best) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if ((e.mask() & mask) == e.mask()) edges.push_back(e);
  }
  *best = 0;
  const std::size_t m = edges.size();
  if (m == 0) return 0;
  if (m <= 64) return InducedMatchingWide<1>(edges, g, mask, meter, best);
  if (m <= 128) return InducedMatchingWide<2>(edges, g, mask, meter, best);
  if (m <= 256) return InducedMatchingWide<4>(edges, g, mask, meter, best);
  if (m <= 512) return InducedMatchingWide<8>(edges, g, mask, meter, best);
  if (m <= 1024) return InducedMatchingWide<16>(edges, g, mask, meter, best);
  return InducedMatchingWide<32>(edges, g, mask, meter, best);
}

}  // namespace internal

using internal::BudgetExhausted;
using internal::Meter;

void SolverBudget::validate() const {
  if (node_limit && *node_limit == 0) {
    throw InputError("node budget must be positive");
  }
  if (time_limit_seconds && !(*time_limit_seconds > 0)) {
    throw InputError("time budget must be positive");
  }
}

std::string InvariantTriple::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," +
         std::to_string(r) + ")";
}

namespace {

// Upper bounds used when a search is cut short and nothing better is known.
int TrivialMaxBound(Word mask) {
  return std::popcount(mask) / 2;
}

[[noreturn]] void Exhausted(const char* what, int lower, int upper) {
  throw ResourceError(std::string(what) + ": solver budget exhausted", lower,
                      upper);
}

int MinMaximalValue(const Graph& g, Word mask, Meter& meter, const char* what) {
  int best = 0;
  try {
    return internal::MinMaximalOn(g, mask, meter, &best);
  } catch (const BudgetExhausted&) {
    const int lower = (internal::GreedyMatchingSize(g, mask) + 1) / 2;
    Exhausted(what, lower, best);
  }
}

int IndependenceValue(const Graph& g, Word mask, Meter& meter,
                      const char* what) {
  int best = 0;
  try {
    return internal::IndependenceOn(g, mask, meter, &best);
  } catch (const BudgetExhausted&) {
    Exhausted(what, best, std::popcount(mask));
  }
}

int InducedValue(const Graph& g, Word mask, Meter& meter, const char* what) {
  int best = 0;
  try {
    return internal::InducedMatchingOn(g, mask, meter, &best);
  } catch (const BudgetExhausted&) {
    Exhausted(what, best, TrivialMaxBound(mask));
  }
}

}  // namespace

int matching_number(const Graph& g, const SolverBudget& budget) {
  budget.validate();
  return internal::MatchingNumberOn(g, g.vertices().bits());
}

int min_maximal_matching_number(const Graph& g, const SolverBudget& budget) {
  Meter meter(budget);
  return MinMaximalValue(g, g.vertices().bits(), meter, "min-match");
}

int induced_matching_number(const Graph& g, const SolverBudget& budget) {
  Meter meter(budget);
  return InducedValue(g, g.vertices().bits(), meter, "ind-match");
}

int independence_number(const Graph& g, const SolverBudget& budget) {
  Meter meter(budget);
  return IndependenceValue(g, g.vertices().bits(), meter, "independence");
}

// The witnesses below share one argument. Walking the edges in order and
// keeping an edge whenever some optimum still contains everything kept so
// far yields the optimum whose sorted edge list is lexicographically least:
// the first kept edge is the least edge lying in any optimum, and so on.

Matching maximum_matching(const Graph& g, const SolverBudget& budget) {
  budget.validate();
  const Word all = g.vertices().bits();
  int need = internal::MatchingNumberOn(g, all);
  Word avail = all;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (need == 0) break;
    if ((avail & e.mask()) != e.mask()) continue;
    if (internal::MatchingNumberOn(g, avail & ~e.mask()) == need - 1) {
      kept.push_back(e);
      avail &= ~e.mask();
      --need;
    }
  }
  return Matching(std::move(kept));
}

Matching minimum_maximal_matching(const Graph& g, const SolverBudget& budget) {
  Meter meter(budget);
  const Word all = g.vertices().bits();
  int need = MinMaximalValue(g, all, meter, "min-match");
  Word avail = all;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (need == 0) break;
    if ((avail & e.mask()) != e.mask()) continue;
    if (MinMaximalValue(g, avail & ~e.mask(), meter, "min-match") ==
        need - 1) {
      kept.push_back(e);
      avail &= ~e.mask();
      --need;
    }
  }
  return Matching(std::move(kept));
}

Matching maximum_induced_matching(const Graph& g, const SolverBudget& budget) {
  Meter meter(budget);
  const Word all = g.vertices().bits();
  int need = InducedValue(g, all, meter, "ind-match");
  Word avail = all;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (need == 0) break;
    if ((avail & e.mask()) != e.mask()) continue;
    const Word blocked = closed_neighborhood(g, VertexSet(e.mask())).bits();
    if (InducedValue(g, avail & ~blocked, meter, "ind-match") == need - 1) {
      kept.push_back(e);
      avail &= ~blocked;
      --need;
    }
  }
  return Matching(std::move(kept));
}

VertexSet maximum_independent_set(const Graph& g, const SolverBudget& budget) {
  Meter meter(budget);
  const Word all = g.vertices().bits();
  int need = IndependenceValue(g, all, meter, "independence");
  Word avail = all;
  Word kept = 0;
  for (int v = 0; v < g.order() && need > 0; ++v) {
    if (!(avail & Bit(v))) continue;
    const Word blocked = g.row(v) | Bit(v);
    if (IndependenceValue(g, avail & ~blocked, meter, "independence") ==
        need - 1) {
      kept |= Bit(v);
      avail &= ~blocked;
      --need;
    }
  }
  return VertexSet(kept);
}

InvariantTriple triple(const Graph& g, const SolverBudget& budget) {
  if (g.size() == 0) {
    throw InputError(
        "triple: the invariants chain needs a graph with at least one edge");
  }
  Meter meter(budget);
  const Word all = g.vertices().bits();
  InvariantTriple t;
  t.r = internal::MatchingNumberOn(g, all);
  t.q = MinMaximalValue(g, all, meter, "min-match");
  t.p = InducedValue(g, all, meter, "ind-match");
  if (!t.satisfies_chain() || 2 * t.r > g.order()) {
    throw InternalFault("solver produced " + t.to_string() +
                        " violating 1 <= p <= q <= r <= 2q, 2r <= n on " +
                        emit_graph6(g));
  }
  return t;
}

bool has_perfect_matching(const Graph& g) {
  return g.order() > 0 && 2 * matching_number(g) == g.order();
}

namespace {

class MaximalMatchingWalker {
 public:
  MaximalMatchingWalker(const Graph& g, std::optional<int> size,
                        const std::function<bool(const Matching&)>& visit)
      : edges_(g.edges()), size_(size), visit_(visit) {
    // later_[i]: vertices touched by edges i..m-1.
    later_.assign(edges_.size() + 1, 0);
    for (int i = static_cast<int>(edges_.size()) - 1; i >= 0; --i) {
      later_[i] = later_[i + 1] | edges_[i].mask();
    }
  }

  bool run() { return walk(0, 0); }

 private:
  // Decides edges i.. given the covered vertices; returns false to stop.
  bool walk(std::size_t i, Word covered) {
    if (size_ && static_cast<int>(chosen_.size()) > *size_) return true;
    if (i == edges_.size()) {
      if (size_ && static_cast<int>(chosen_.size()) != *size_) return true;
      for (const Edge& e : edges_) {
        if ((covered & e.mask()) == 0) return true;  // not maximal
      }
      return visit_(Matching(chosen_));
    }
    const Edge& e = edges_[i];
    if ((covered & e.mask()) == 0) {
      chosen_.push_back(e);
      const bool go_on = walk(i + 1, covered | e.mask());
      chosen_.pop_back();
      if (!go_on) return false;
      // Leaving e out needs some later edge to cover one of its ends.
      if ((later_[i + 1] & e.mask()) == 0) return true;
    }
    return walk(i + 1, covered);
  }

  std::vector<Edge> edges_;
  std::vector<Word> later_;
  std::optional<int> size_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<Edge> chosen_;
};

}  // namespace

bool for_each_maximal_matching(
    const Graph& g, std::optional<int> size_filter,
    const std::function<bool(const Matching&)>& visit) {
  return MaximalMatchingWalker(g, size_filter, visit).run();
}

std::vector<Matching> enumerate_maximal_matchings(
    const Graph& g, std::optional<int> size_filter) {
  std::vector<Matching> out;
  for_each_maximal_matching(g, size_filter, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool satisfies_star1(const Graph& g, int v) {
  for (int w : g.neighbors(v)) {
    if (degree(g, w) == 1) return true;
  }
  return false;
}

bool satisfies_star2(const Graph& g, int v, const SolverBudget& budget) {
  if (v < 0 || v >= g.order()) {
    throw InputError("vertex id " + std::to_string(v) + " out of range");
  }
  const int q = min_maximal_matching_number(g, budget);
  Meter meter(budget);
  bool covered_by_all = true;
  try {
    for_each_maximal_matching(g, q, [&](const Matching& m) {
      meter.tick();
      if (!m.vertices().contains(v)) {
        covered_by_all = false;
        return false;
      }
      return true;
    });
  } catch (const BudgetExhausted&) {
    throw ResourceError("(*2) check: solver budget exhausted", 0, 1);
  }
  return covered_by_all;
}

}  // namespace eml
