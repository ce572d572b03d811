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

#include "eml/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eml/canonical.hpp"
#include "eml/error.hpp"

namespace eml {

namespace {

using Rows = std::vector<Word>;

struct RowsHash {
  std::size_t operator()(const Rows& rows) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Word w : rows) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

int EdgeCount(const Rows& rows) {
  int twice = 0;
  for (Word w : rows) twice += std::popcount(w);
  return twice / 2;
}

bool ConnectedWithout(const Rows& rows, int skip) {
  const int n = static_cast<int>(rows.size());
  const Word all = LowMask(n) & ~Bit(skip);
  if (all == 0) return true;
  Word seen = all & (~all + 1);
  Word frontier = seen;
  while (frontier != 0) {
    Word next = 0;
    for (int v : VertexSet(frontier)) next |= rows[v];
    next &= all & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

// Children of one parent, in canonical labelling, in mask order.
class ChildGenerator {
 public:
  ChildGenerator(const Rows& parent, int edge_limit)
      : parent_(parent), k_(static_cast<int>(parent.size())),
        limit_(edge_limit) {}

  std::vector<Rows> Run() {
    std::vector<Rows> out;
    std::unordered_set<Rows, RowsHash> seen;
    const int parent_edges = EdgeCount(parent_);
    Rows child(k_ + 1);
    Rows canon;
    std::vector<int> labeling;
    for (Word s = 1; s < Bit(k_); ++s) {
      const int d = std::popcount(s);
      if (parent_edges + d > limit_) continue;
      for (int v = 0; v < k_; ++v) {
        child[v] = parent_[v] | (((s >> v) & 1) ? Bit(k_) : 0);
      }
      child[k_] = s;
      // The new vertex must have least degree among the non-cut vertices;
      // the candidates are the non-cut vertices of that degree.
      Word candidates = Bit(k_);
      bool ok = true;
      for (int v = 0; v < k_ && ok; ++v) {
        const int dv = std::popcount(child[v]);
        if (dv > d || !ConnectedWithout(child, v)) continue;
        if (dv < d) ok = false;
        candidates |= Bit(v);
      }
      if (!ok) continue;
      canonical_rows(child, canon, &labeling);
      if (candidates != Bit(k_)) {
        int w = -1;
        for (int v : VertexSet(candidates)) {
          if (w < 0 || labeling[v] > labeling[w]) w = v;
        }
        if (w != k_ && !SameAsParent(child, w)) continue;
      }
      if (seen.insert(canon).second) out.push_back(canon);
    }
    return out;
  }

 private:
  bool SameAsParent(const Rows& child, int w) {
    Rows reduced;
    reduced.reserve(k_);
    for (int v = 0; v <= k_; ++v) {
      if (v == w) continue;
      const Word row = child[v];
      const Word low = row & LowMask(w);
      const Word high = (row >> 1) & ~LowMask(w);
      reduced.push_back(low | high);
    }
    Rows canon;
    canonical_rows(reduced, canon);
    return canon == parent_;
  }

  const Rows& parent_;
  int k_;
  int limit_;
};

// Children of parents[begin, end) concatenated in parent order.
void ExpandBlock(const std::vector<Rows>& parents, std::size_t begin,
                 std::size_t end, int edge_limit, int workers,
                 std::vector<Rows>& out) {
  std::vector<std::vector<Rows>> per_parent(end - begin);
  std::atomic<std::size_t> next{begin};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= end) return;
      per_parent[i - begin] = ChildGenerator(parents[i], edge_limit).Run();
    }
  };
  const int threads =
      std::max(1, std::min<int>(workers, static_cast<int>(end - begin)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (auto& children : per_parent) {
    for (auto& rows : children) out.push_back(std::move(rows));
  }
}

constexpr std::size_t kBlock = 1024;

int LimitAt(const EnumerationOptions& options, int n, int level) {
  if (!options.max_edges) return level * (level - 1) / 2;
  return *options.max_edges - (n - level);
}

}  // namespace

bool for_each_connected_graph(int n, const EnumerationOptions& options,
                              const std::function<bool(const Graph&)>& visit) {
  if (n < 1 || n > kConnectedEnvelope) {
    throw InputError("connected-graph enumeration supports 1 <= n <= " +
                     std::to_string(kConnectedEnvelope) + ", got " +
                     std::to_string(n));
  }
  if (options.workers < 1) throw InputError("workers must be >= 1");
  if (options.max_edges && *options.max_edges < n - 1) return true;
  std::vector<Rows> level = {Rows{0}};
  for (int k = 1; k < n - 1; ++k) {
    std::vector<Rows> next;
    const int limit = LimitAt(options, n, k + 1);
    for (std::size_t b = 0; b < level.size(); b += kBlock) {
      ExpandBlock(level, b, std::min(level.size(), b + kBlock), limit,
                  options.workers, next);
    }
    level.swap(next);
  }
  if (n == 1) return visit(Graph::FromRows(level[0]));
  // The last level is streamed block by block.
  const int limit = LimitAt(options, n, n);
  std::vector<Rows> block;
  for (std::size_t b = 0; b < level.size(); b += kBlock) {
    block.clear();
    ExpandBlock(level, b, std::min(level.size(), b + kBlock), limit,
                options.workers, block);
    for (Rows& rows : block) {
      if (!visit(Graph::FromRows(std::move(rows)))) return false;
    }
  }
  return true;
}

std::vector<Graph> enumerate_connected_graphs(int n,
                                              const EnumerationOptions& options) {
  std::vector<Graph> out;
  for_each_connected_graph(n, options, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

bool for_each_tree(int n, const std::function<bool(const Graph&)>& visit) {
  if (n < 1 || n > kTreeEnvelope) {
    throw InputError("tree enumeration supports 1 <= n <= " +
                     std::to_string(kTreeEnvelope) + ", got " +
                     std::to_string(n));
  }
  std::vector<Rows> level = {Rows{0}};
  Rows canon;
  for (int k = 1; k < n; ++k) {
    std::vector<Rows> next;
    std::unordered_set<Rows, RowsHash> seen;
    for (const Rows& tree : level) {
      for (int v = 0; v < k; ++v) {
        Rows child = tree;
        child.push_back(Bit(v));
        child[v] |= Bit(k);
        canonical_rows(child, canon);
        if (seen.insert(canon).second) next.push_back(canon);
      }
    }
    level.swap(next);
  }
  for (Rows& rows : level) {
    if (!visit(Graph::FromRows(std::move(rows)))) return false;
  }
  return true;
}

std::vector<Graph> enumerate_trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace eml
