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

#ifndef EML_SRC_SOLVER_INTERNAL_HPP_
#define EML_SRC_SOLVER_INTERNAL_HPP_

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

#include "eml/graph.hpp"
#include "eml/invariants.hpp"

namespace eml::internal {

struct BudgetExhausted {};

// Counts search nodes against a SolverBudget. The clock is only sampled
// every 1024 ticks.
class Meter {
 public:
  explicit Meter(const SolverBudget& budget);

  void tick() {
    if (++nodes_ > node_limit_) throw BudgetExhausted{};
    if (has_deadline_ && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExhausted{};
    }
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_ = 0;
  std::uint64_t node_limit_ = std::numeric_limits<std::uint64_t>::max();
  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

// Fixed-width bitset used by the clique search. W words.
template <int W>
struct Bits {
  std::array<Word, W> w{};

  bool any() const {
    for (Word x : w)
      if (x) return true;
    return false;
  }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= Bit(i & 63); }
  void reset(int i) { w[i >> 6] &= ~Bit(i & 63); }
  int first() const {
    for (int k = 0; k < W; ++k)
      if (w[k]) return k * 64 + std::countr_zero(w[k]);
    return -1;
  }
  int count() const {
    int c = 0;
    for (Word x : w) c += std::popcount(x);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int k = 0; k < W; ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
  Bits and_not(const Bits& o) const {
    Bits r;
    for (int k = 0; k < W; ++k) r.w[k] = w[k] & ~o.w[k];
    return r;
  }
};

// Branch and bound for a maximum clique of the graph `adj` inside `cand`,
// pruning with greedy colour classes (each class is an independent set, so
// the number of classes bounds the clique size). `*best` holds the
// incumbent on entry and exit.
template <int W>
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bits<W>>& adj, Meter& meter, int* best)
      : adj_(adj), meter_(meter), best_(best) {}

  void run(const Bits<W>& cand) {
    if (cand.any()) expand(0, cand);
  }

 private:
  void expand(int depth, Bits<W> cand) {
    meter_.tick();
    int order[W * 64];
    int colour[W * 64];
    int len = 0;
    Bits<W> uncoloured = cand;
    int k = 0;
    while (uncoloured.any()) {
      ++k;
      Bits<W> q = uncoloured;
      for (int v = q.first(); v >= 0; v = q.first()) {
        q.reset(v);
        q = q.and_not(adj_[v]);
        uncoloured.reset(v);
        order[len] = v;
        colour[len] = k;
        ++len;
      }
    }
    for (int i = len - 1; i >= 0; --i) {
      if (depth + colour[i] <= *best_) return;
      const int v = order[i];
      const Bits<W> next = cand & adj_[v];
      if (!next.any()) {
        if (depth + 1 > *best_) *best_ = depth + 1;
      } else {
        expand(depth + 1, next);
      }
      cand.reset(v);
    }
  }

  const std::vector<Bits<W>>& adj_;
  Meter& meter_;
  int* best_;
};

// Solvers restricted to the induced subgraph G[mask].
int MatchingNumberOn(const Graph& g, Word mask);
int MinMaximalOn(const Graph& g, Word mask, Meter& meter, int* best_so_far);
int IndependenceOn(const Graph& g, Word mask, Meter& meter, int* best_so_far);
int InducedMatchingOn(const Graph& g, Word mask, Meter& meter,
                      int* best_so_far);

// Size of a greedy maximal matching of G[mask] taken in edge order.
int GreedyMatchingSize(const Graph& g, Word mask);

}  // namespace eml::internal

#endif  // EML_SRC_SOLVER_INTERNAL_HPP_
