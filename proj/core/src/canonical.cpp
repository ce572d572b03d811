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

#include "eml/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <utility>

namespace eml {

namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class Canonizer {
 public:
  Canonizer(std::span<const Word> rows) : rows_(rows), n_(static_cast<int>(rows.size())) {}

  void Run() {
    std::vector<Word> cells;
    if (n_ > 0) {
      cells.push_back(LowMask(n_));
      Refine(cells);
    }
    std::vector<int> prefix;
    Search(cells, prefix);
  }

  const std::vector<Word>& best_rows() const { return best_rows_; }
  const std::vector<int>& best_labeling() const { return best_perm_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  // Splits cells by the (hashed) count of neighbours in every cell until
  // nothing splits. Sub-cell order follows the hash, so it is invariant.
  void Refine(std::vector<Word>& cells) const {
    std::array<std::pair<std::uint64_t, int>, kMaxVertices> items;
    std::vector<Word> next;
    next.reserve(n_);
    for (;;) {
      bool split = false;
      next.clear();
      for (Word cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        int count = 0;
        for (int v : VertexSet(cell)) {
          std::uint64_t h = 0;
          for (std::size_t i = 0; i < cells.size(); ++i) {
            h = Mix(h, static_cast<std::uint64_t>(
                           std::popcount(rows_[v] & cells[i])));
          }
          items[count++] = {h, v};
        }
        std::sort(items.begin(), items.begin() + count);
        Word current = Bit(items[0].second);
        for (int i = 1; i < count; ++i) {
          if (items[i].first != items[i - 1].first) {
            next.push_back(current);
            current = 0;
            split = true;
          }
          current |= Bit(items[i].second);
        }
        next.push_back(current);
      }
      cells.swap(next);
      if (!split) return;
    }
  }

  void Leaf(const std::vector<Word>& cells) {
    ++leaves_;
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[std::countr_zero(cells[i])] = i;
    std::vector<Word> out(n_, 0);
    for (int v = 0; v < n_; ++v) {
      Word row = 0;
      for (int u : VertexSet(rows_[v])) row |= Bit(perm[u]);
      out[perm[v]] = row;
    }
    if (best_perm_.empty()) {
      first_perm_ = perm;
      first_rows_ = out;
      best_perm_ = std::move(perm);
      best_rows_ = std::move(out);
      return;
    }
    if (out == first_rows_) {
      AddAutomorphism(first_perm_, perm);
    } else if (out == best_rows_) {
      AddAutomorphism(best_perm_, perm);
    } else if (out < best_rows_) {
      best_perm_ = std::move(perm);
      best_rows_ = std::move(out);
    }
  }

  // a and b relabel g to the same graph, so v -> a^-1(b(v)) fixes g.
  void AddAutomorphism(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> inverse(n_);
    for (int v = 0; v < n_; ++v) inverse[a[v]] = v;
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inverse[b[v]];
      identity &= gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  int Find(std::array<int, kMaxVertices>& parent, int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  // Orbit representatives under the automorphisms that fix `prefix`.
  void Orbits(const std::vector<int>& prefix,
              std::array<int, kMaxVertices>& parent) const {
    std::iota(parent.begin(), parent.begin() + n_, 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int v : prefix) {
        if (gamma[v] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = Find(parent, v);
        const int b = Find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  void Search(const std::vector<Word>& cells, std::vector<int>& prefix) {
    if (static_cast<int>(cells.size()) == n_) {
      Leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;
    const Word cell = cells[target];
    Word explored_roots = 0;
    std::size_t seen_automorphisms = 0;
    std::array<int, kMaxVertices> parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    for (int v : VertexSet(cell)) {
      if (automorphisms_.size() != seen_automorphisms) {
        Orbits(prefix, parent);
        seen_automorphisms = automorphisms_.size();
        Word roots = 0;
        for (int u : VertexSet(explored_roots)) roots |= Bit(Find(parent, u));
        explored_roots = roots;
      }
      const int root = Find(parent, v);
      if (explored_roots & Bit(root)) continue;
      explored_roots |= Bit(root);

      std::vector<Word> child;
      child.reserve(n_);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(Bit(v));
          child.push_back(cell & ~Bit(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      Refine(child);
      prefix.push_back(v);
      Search(child, prefix);
      prefix.pop_back();
    }
  }

  std::span<const Word> rows_;
  int n_;
  std::vector<int> first_perm_;
  std::vector<Word> first_rows_;
  std::vector<int> best_perm_;
  std::vector<Word> best_rows_;
  std::vector<std::vector<int>> automorphisms_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

void canonical_rows(std::span<const Word> rows, std::vector<Word>& out,
                    std::vector<int>* labeling) {
  Canonizer c(rows);
  c.Run();
  out = c.best_rows();
  if (labeling != nullptr) *labeling = c.best_labeling();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  Canonizer c(g.rows());
  c.Run();
  CanonicalLabeling result;
  result.labeling = c.best_labeling();
  result.graph = Graph::FromRows(c.best_rows());
  result.leaves = c.leaves();
  return result;
}

std::string canonical_form(const Graph& g) {
  std::vector<Word> rows;
  canonical_rows(g.rows(), rows);
  return emit_graph6(Graph::FromRows(std::move(rows)));
}

}  // namespace eml
