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

#ifndef EML_ENUMERATE_HPP_
#define EML_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "eml/graph.hpp"

namespace eml {

inline constexpr int kConnectedEnvelope = 10;
inline constexpr int kTreeEnvelope = 18;

struct EnumerationOptions {
  // Only graphs with at most this many edges.
  std::optional<int> max_edges;
  int workers = 1;
};

// One graph per isomorphism class of connected graphs on n vertices, each in
// canonical labelling. Graphs of order n are grown from those of order n-1
// by a new vertex; a child is kept only when the new vertex is (up to
// isomorphism of the deleted graph) the canonical minimum-degree non-cut
// vertex, and duplicates under one parent are dropped. The order is fixed
// by parent order and neighbourhood mask, whatever the worker count.
// `visit` returns false to stop; the function then returns false.
// Throws InputError for n outside [1, 10].
bool for_each_connected_graph(int n, const EnumerationOptions& options,
                              const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_connected_graphs(
    int n, const EnumerationOptions& options = {});

// One tree per isomorphism class, n in [1, 18], grown by leaf addition.
bool for_each_tree(int n, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> enumerate_trees(int n);

}  // namespace eml

#endif  // EML_ENUMERATE_HPP_
