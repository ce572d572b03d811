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

// Maximum cardinality matching on G[mask] by Edmonds' blossom shrinking,
// after a greedy start.

#include <array>
#include <bit>

#include "solver_internal.hpp"

namespace eml::internal {

namespace {

constexpr int kNone = -1;

class Blossom {
 public:
  Blossom(const Graph& g, Word mask) : g_(g), mask_(mask) {
    mate_.fill(kNone);
  }

  int run() {
    int size = 0;
    // Greedy start in edge order.
    for (Word rest = mask_; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (mate_[u] != kNone) continue;
      Word free = g_.row(u) & mask_ & ~matched_;
      if (free != 0) {
        const int v = std::countr_zero(free);
        mate_[u] = v;
        mate_[v] = u;
        matched_ |= Bit(u) | Bit(v);
        ++size;
      }
    }
    for (Word rest = mask_ & ~matched_; rest != 0; rest &= rest - 1) {
      const int root = std::countr_zero(rest);
      if (mate_[root] != kNone) continue;
      int v = find_path(root);
      if (v == kNone) continue;
      ++size;
      while (v != kNone) {
        const int pv = parent_[v];
        const int ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        matched_ |= Bit(v) | Bit(pv);
        v = ppv;
      }
    }
    return size;
  }

 private:
  int lca(int a, int b) const {
    Word seen = 0;
    for (;;) {
      a = base_[a];
      seen |= Bit(a);
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen & Bit(b)) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child, Word& blossom) {
    while (base_[v] != b) {
      blossom |= Bit(base_[v]) | Bit(base_[mate_[v]]);
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    Word used = Bit(root);
    parent_.fill(kNone);
    for (int i = 0; i < 64; ++i) base_[i] = i;
    std::array<int, 64> queue;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int v = queue[head++];
      for (Word nb = g_.row(v) & mask_; nb != 0; nb &= nb - 1) {
        const int to = std::countr_zero(nb);
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const int cur = lca(v, to);
          Word blossom = 0;
          mark_path(v, cur, to, blossom);
          mark_path(to, cur, v, blossom);
          for (Word all = mask_; all != 0; all &= all - 1) {
            const int i = std::countr_zero(all);
            if (blossom & Bit(base_[i])) {
              base_[i] = cur;
              if (!(used & Bit(i))) {
                used |= Bit(i);
                queue[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          const int next = mate_[to];
          used |= Bit(next);
          queue[tail++] = next;
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  Word mask_;
  Word matched_ = 0;
  std::array<int, 64> mate_;
  std::array<int, 64> parent_;
  std::array<int, 64> base_;
};

}  // namespace

int MatchingNumberOn(const Graph& g, Word mask) {
  return Blossom(g, mask).run();
}

}  // namespace eml::internal
