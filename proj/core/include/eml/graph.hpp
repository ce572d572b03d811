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

#ifndef EML_GRAPH_HPP_
#define EML_GRAPH_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eml {

inline constexpr int kMaxVertices = 64;

using Word = std::uint64_t;

inline constexpr Word Bit(int v) { return Word{1} << v; }

// All of {0, ..., n-1}.
inline constexpr Word LowMask(int n) {
  return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

// A subset of the vertex ids {0..63} of some host graph.
class VertexSet {
 public:
  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    Iterator() = default;
    explicit Iterator(Word rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet Range(int n) { return VertexSet(LowMask(n)); }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const {
    return v >= 0 && v < 64 && ((bits_ >> v) & 1) != 0;
  }
  // Smallest member; undefined on the empty set.
  int front() const { return std::countr_zero(bits_); }

  VertexSet with(int v) const { return VertexSet(bits_ | Bit(v)); }
  VertexSet without(int v) const { return VertexSet(bits_ & ~Bit(v)); }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

 private:
  Word bits_ = 0;
};

// Unordered vertex pair stored with u < v. Edges order lexicographically,
// which is the fixed edge order every solver uses for tie-breaking.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Word mask() const { return Bit(u) | Bit(v); }
  auto operator<=>(const Edge&) const = default;
};

// A set of edges, kept sorted. Whether it is a matching of some graph is a
// question for is_matching(); the type only fixes the representation.
class Matching {
 public:
  Matching() = default;
  Matching(std::initializer_list<Edge> edges);
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  // V(M): every endpoint of every member.
  VertexSet vertices() const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

// Immutable simple graph on at most 64 vertices. Row v of the adjacency
// holds N(v) as a bitset. Optional per-vertex names ("x3", "z1") are
// metadata for printing and construction tests; no algorithm reads them.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Throws CapacityError for n > 64 and InputError
  // for loops, out-of-range endpoints, or a label list that is not a set of
  // n distinct names.
  static Graph FromEdges(int n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {});
  // Rows must already be symmetric and loop-free; checked.
  static Graph FromRows(std::vector<Word> rows,
                        std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return edge_count_; }
  Word row(int v) const { return rows_[v]; }
  const std::vector<Word>& rows() const { return rows_; }
  VertexSet vertices() const { return VertexSet::Range(order()); }
  VertexSet neighbors(int v) const;
  bool has_edge(int u, int v) const;
  // All edges, lexicographic by (u, v).
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Name of v, or its decimal id when unnamed.
  std::string label(int v) const;
  // Vertex carrying `name`; throws InputError when absent.
  int vertex(std::string_view name) const;

  Graph with_labels(std::vector<std::string> labels) const;

  // Equality is on the adjacency relation only.
  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  std::vector<Word> rows_;
  std::vector<std::string> labels_;
  int edge_count_ = 0;
};

// Accumulates edges, then freezes into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  // Appends a vertex named `label`, returning its id.
  int add_vertex(std::string label);
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& set_label(int v, std::string label);
  int order() const { return static_cast<int>(rows_.size()); }
  Graph build() const;

 private:
  void check(int v) const;
  std::vector<Word> rows_;
  std::vector<std::string> labels_;
};

int degree(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, int v);
// Union of closed neighbourhoods N[S].
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

bool is_independent(const Graph& g, VertexSet s);
bool is_matching(const Graph& g, const Matching& m);
// Complement-independence test; throws ContractError when `m` is not a
// matching of `g`.
bool is_maximal_matching(const Graph& g, const Matching& m);
// No edge of E(G) \ M can be added. Same contract; used as a cross-check.
bool is_maximal_matching_by_extension(const Graph& g, const Matching& m);
bool is_induced_matching(const Graph& g, const Matching& m);

// G[W], vertices renumbered in increasing order of their old ids. Labels
// carry over; an unlabeled host yields labels holding the old ids.
Graph induced_subgraph(const Graph& g, VertexSet w);
// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
// Vertex i of part k becomes offset_k + i.
Graph disjoint_union(std::span<const Graph> parts);
// Vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

std::string to_string(const Edge& e);
std::string to_string(const Matching& m);

// graph6 text for one graph, without a trailing newline.
std::string emit_graph6(const Graph& g);
// Accepts one graph6 line (optionally prefixed by ">>graph6<<"). Trailing
// '\n' / '\r' are ignored. Throws ParseError with the offending offset.
Graph parse_graph6(std::string_view text);

}  // namespace eml

#endif  // EML_GRAPH_HPP_
