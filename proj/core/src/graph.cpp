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

#include "eml/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "eml/error.hpp"

namespace eml {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) {
      throw InputError("vertex id " + std::to_string(v) + " out of range");
    }
    bits_ |= Bit(v);
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

Matching::Matching(std::initializer_list<Edge> edges)
    : Matching(std::vector<Edge>(edges)) {}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

VertexSet Matching::vertices() const {
  Word bits = 0;
  for (const Edge& e : edges_) bits |= e.mask();
  return VertexSet(bits);
}

namespace {

void CheckLabels(const std::vector<std::string>& labels, int n) {
  if (labels.empty()) return;
  if (static_cast<int>(labels.size()) != n) {
    throw InputError("label map must name all " + std::to_string(n) +
                     " vertices, got " + std::to_string(labels.size()));
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != n) {
    throw InputError("label map is not injective");
  }
}

void CheckVertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw InputError("vertex id " + std::to_string(v) +
                     " out of range for order " + std::to_string(g.order()));
  }
}

}  // namespace

Graph Graph::FromEdges(int n, std::span<const Edge> edges,
                       std::vector<std::string> labels) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) +
                        " exceeds the 64-vertex cap");
  }
  std::vector<Word> rows(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge " + to_string(e) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    rows[e.u] |= Bit(e.v);
    rows[e.v] |= Bit(e.u);
  }
  return FromRows(std::move(rows), std::move(labels));
}

Graph Graph::FromRows(std::vector<Word> rows, std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) +
                        " exceeds the 64-vertex cap");
  }
  const Word all = LowMask(n);
  int twice_edges = 0;
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~all) != 0) {
      throw InputError("row " + std::to_string(v) + " names a vertex >= n");
    }
    if ((rows[v] & Bit(v)) != 0) {
      throw InputError("loop at vertex " + std::to_string(v));
    }
    for (Word rest = rows[v]; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if ((rows[w] & Bit(v)) == 0) {
        throw InputError("adjacency is not symmetric at (" +
                         std::to_string(v) + "," + std::to_string(w) + ")");
      }
    }
    twice_edges += std::popcount(rows[v]);
  }
  CheckLabels(labels, n);
  Graph g;
  g.rows_ = std::move(rows);
  g.labels_ = std::move(labels);
  g.edge_count_ = twice_edges / 2;
  return g;
}

VertexSet Graph::neighbors(int v) const {
  CheckVertex(*this, v);
  return VertexSet(rows_[v]);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  return (rows_[u] & Bit(v)) != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (Word rest = rows_[u] & ~LowMask(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

std::string Graph::label(int v) const {
  CheckVertex(*this, v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

int Graph::vertex(std::string_view name) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
    if (labels_[v] == name) return v;
  }
  throw InputError("no vertex labeled '" + std::string(name) + "'");
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  CheckLabels(labels, order());
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) +
                        " exceeds the 64-vertex cap");
  }
  rows_.assign(n, 0);
  labels_.assign(n, std::string());
}

int GraphBuilder::add_vertex(std::string label) {
  if (order() >= kMaxVertices) {
    throw CapacityError("construction exceeds the 64-vertex cap");
  }
  rows_.push_back(0);
  labels_.push_back(std::move(label));
  return order() - 1;
}

void GraphBuilder::check(int v) const {
  if (v < 0 || v >= order()) {
    throw InputError("vertex id " + std::to_string(v) + " out of range");
  }
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  rows_[u] |= Bit(v);
  rows_[v] |= Bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::set_label(int v, std::string label) {
  check(v);
  labels_[v] = std::move(label);
  return *this;
}

Graph GraphBuilder::build() const {
  const bool any_named = std::any_of(labels_.begin(), labels_.end(),
                                     [](const auto& s) { return !s.empty(); });
  std::vector<std::string> labels;
  if (any_named) {
    labels = labels_;
    for (int v = 0; v < order(); ++v) {
      if (labels[v].empty()) labels[v] = std::to_string(v);
    }
  }
  return Graph::FromRows(rows_, std::move(labels));
}

int degree(const Graph& g, int v) {
  CheckVertex(g, v);
  return std::popcount(g.row(v));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  CheckVertex(g, v);
  return VertexSet(g.row(v) | Bit(v));
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  Word out = s.bits();
  for (int v : s) {
    CheckVertex(g, v);
    out |= g.row(v);
  }
  return VertexSet(out);
}

bool is_independent(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw InputError("vertex set is not contained in V(G)");
  }
  for (int v : s) {
    if ((g.row(v) & s.bits()) != 0) return false;
  }
  return true;
}

bool is_matching(const Graph& g, const Matching& m) {
  Word covered = 0;
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e.u, e.v)) return false;
    if ((covered & e.mask()) != 0) return false;
    covered |= e.mask();
  }
  return true;
}

namespace {

void RequireMatching(const Graph& g, const Matching& m, const char* op) {
  if (!is_matching(g, m)) {
    throw ContractError(std::string(op) + ": " + to_string(m) +
                        " is not a matching of the graph");
  }
}

}  // namespace

bool is_maximal_matching(const Graph& g, const Matching& m) {
  RequireMatching(g, m, "is_maximal_matching");
  return is_independent(g, g.vertices() - m.vertices());
}

bool is_maximal_matching_by_extension(const Graph& g, const Matching& m) {
  RequireMatching(g, m, "is_maximal_matching_by_extension");
  const Word covered = m.vertices().bits();
  for (const Edge& e : g.edges()) {
    if ((covered & e.mask()) == 0) return false;
  }
  return true;
}

bool is_induced_matching(const Graph& g, const Matching& m) {
  RequireMatching(g, m, "is_induced_matching");
  const auto& es = m.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Word reach = g.row(es[i].u) | g.row(es[i].v);
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if ((reach & es[j].mask()) != 0) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) {
    throw InputError("induced_subgraph: W is not contained in V(G)");
  }
  const std::vector<int> keep = w.to_vector();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  std::vector<Word> rows(keep.size(), 0);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    for (int u : VertexSet(g.row(keep[i]) & w.bits())) {
      rows[i] |= Bit(index[u]);
    }
    labels.push_back(g.label(keep[i]));
  }
  return Graph::FromRows(std::move(rows), std::move(labels));
}

namespace {

Word ComponentOf(const Graph& g, int start, Word within) {
  Word seen = Bit(start);
  Word frontier = seen;
  while (frontier != 0) {
    Word next = 0;
    for (Word rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.row(std::countr_zero(rest));
    }
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  Word left = g.vertices().bits();
  while (left != 0) {
    const Word comp = ComponentOf(g, std::countr_zero(left), left);
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return ComponentOf(g, 0, g.vertices().bits()) == g.vertices().bits();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  if (total > kMaxVertices) {
    throw CapacityError("disjoint union of order " + std::to_string(total) +
                        " exceeds the 64-vertex cap");
  }
  std::vector<Word> rows;
  rows.reserve(total);
  int offset = 0;
  for (const Graph& p : parts) {
    for (int v = 0; v < p.order(); ++v) rows.push_back(p.row(v) << offset);
    offset += p.order();
  }
  return Graph::FromRows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw InputError("relabel: permutation has the wrong length");
  }
  Word image = 0;
  for (int x : perm) {
    if (x < 0 || x >= n || (image & Bit(x)) != 0) {
      throw InputError("relabel: not a permutation of 0..n-1");
    }
    image |= Bit(x);
  }
  std::vector<Word> rows(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : VertexSet(g.row(v))) rows[perm[v]] |= Bit(perm[w]);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(n);
    for (int v = 0; v < n; ++v) labels[perm[v]] = g.labels()[v];
  }
  return Graph::FromRows(std::move(rows), std::move(labels));
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string to_string(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.edges().size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(m.edges()[i]);
  }
  return out + "}";
}

}  // namespace eml
