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

#include "eml/constructions.hpp"

#include <string>
#include <vector>

#include "eml/error.hpp"

namespace eml {

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void RequireOrder(long n, const char* family) {
  if (n > kMaxVertices) {
    throw CapacityError(std::string(family) + " would have " +
                        std::to_string(n) + " vertices; the cap is 64");
  }
}

// Appends vertices named prefix1..prefix<count>, returning the first id.
int AddFamily(GraphBuilder& b, const std::string& prefix, int count) {
  const int first = b.order();
  for (int i = 1; i <= count; ++i) b.add_vertex(prefix + std::to_string(i));
  return first;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Graph complete(int n) {
  Require(n >= 1, "complete graph requires n >= 1");
  RequireOrder(n, "K_n");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph complete_bipartite(int m, int n) {
  Require(m >= 1 && n >= 1, "complete bipartite graph requires m, n >= 1");
  RequireOrder(static_cast<long>(m) + n, "K_{m,n}");
  GraphBuilder b(0);
  const int x = AddFamily(b, "x", m);
  const int y = AddFamily(b, "y", n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) b.add_edge(x + i, y + j);
  return b.build();
}

Graph cycle(int n) {
  Require(n >= 3, "cycle requires n >= 3");
  RequireOrder(n, "C_n");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path(int n) {
  Require(n >= 1, "path requires n >= 1");
  RequireOrder(n, "P_n");
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph star(int m) {
  Require(m >= 1, "star requires m >= 1");
  RequireOrder(m + 1L, "K_{1,m}");
  GraphBuilder b(m + 1);
  for (int v = 1; v <= m; ++v) b.add_edge(0, v);
  return b.build();
}

Graph whisker(const Graph& g) {
  const int n = g.order();
  Require(n >= 1, "whisker requires a non-empty graph");
  RequireOrder(2L * n, "W(G)");
  GraphBuilder b(0);
  for (int v = 0; v < n; ++v) {
    b.add_vertex(g.has_labels() ? g.labels()[v] : "v" + std::to_string(v + 1));
  }
  const int w = AddFamily(b, "w", n);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v) b.add_edge(v, w + v);
  return b.build();
}

Graph g_r(int r) {
  Require(r >= 2, "G_r requires r >= 2");
  RequireOrder(2L * r, "G_r");
  GraphBuilder b(0);
  const int x = AddFamily(b, "x", r);
  const int y = AddFamily(b, "y", r);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) b.add_edge(x + i, x + j);
    b.add_edge(x + i, y + i);
  }
  return b.build();
}

Graph g1(int q) {
  Require(q >= 2, "g1 requires q >= 2");
  RequireOrder(2L * q + 2, "g1");
  GraphBuilder b(0);
  const int x = AddFamily(b, "x", q - 1);
  const int y = AddFamily(b, "y", q - 1);
  const int z = AddFamily(b, "z", 4);
  for (int i = 0; i < q - 1; ++i) {
    b.add_edge(x + i, y + i);
    b.add_edge(y + i, z + 1);
  }
  for (int i = 0; i < 3; ++i) b.add_edge(z + i, z + i + 1);
  return b.build();
}

Graph g2(int q, int r) {
  Require(q >= 2 && q + 2 <= r && r <= 2 * q,
          "g2 requires q >= 2 and q+2 <= r <= 2q");
  RequireOrder(2L * r, "g2");
  const int pairs = 2 * q - r + 1;
  const int path_len = 2 * r - 2 * q + 2;
  const int hangers = r - q - 2;
  GraphBuilder b(0);
  const int x = AddFamily(b, "x", pairs);
  const int y = AddFamily(b, "y", pairs);
  const int z = AddFamily(b, "z", path_len);
  const int u = AddFamily(b, "u", hangers);
  const int v = AddFamily(b, "v", hangers);
  for (int i = 0; i < pairs; ++i) {
    b.add_edge(x + i, y + i);
    b.add_edge(y + i, z + 1);
  }
  for (int i = 0; i + 1 < path_len; ++i) b.add_edge(z + i, z + i + 1);
  for (int i = 1; i <= hangers; ++i) {
    b.add_edge(u + i - 1, v + i - 1);
    b.add_edge(v + i - 1, z + (2 * i + 5) - 1);
  }
  return b.build();
}

Graph g3(int r) {
  Require(r >= 2, "g3 requires r >= 2");
  RequireOrder(2L * r + 1, "g3");
  GraphBuilder b(0);
  const int x = AddFamily(b, "x", r);
  const int y = AddFamily(b, "y", r);
  const int z = b.add_vertex("z");
  for (int i = 0; i < r; ++i) {
    b.add_edge(x + i, y + i);
    b.add_edge(y + i, z);
  }
  return b.build();
}

Graph g4(int q) {
  Require(q >= 2, "g4 requires q >= 2");
  RequireOrder(2L * q + 2, "g4");
  GraphBuilder b(0);
  const int x = AddFamily(b, "x", q);
  const int y = AddFamily(b, "y", q);
  const int z = AddFamily(b, "z", 2);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) b.add_edge(x + i, y + j);
  b.add_edge(x + q - 1, z);
  b.add_edge(y + q - 1, z + 1);
  return b.build();
}

Graph g5(int q, int r) {
  Require(q + 2 <= r && r <= 2 * q - 2, "g5 requires q+2 <= r <= 2q-2");
  const int side = q - 1;
  const int clique = r - q + 1;
  RequireOrder(2L * side + 2L * clique, "g5");
  GraphBuilder b(0);
  const int x = AddFamily(b, "x", side);
  const int y = AddFamily(b, "y", side);
  const int z = AddFamily(b, "z", clique);
  const int w = AddFamily(b, "w", clique);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) b.add_edge(x + i, y + j);
    // x_i ~ z_{r-q-1+j}, j = 1, 2.
    for (int j = 1; j <= 2; ++j) b.add_edge(x + i, z + (r - q - 1 + j) - 1);
    // y_i ~ z_j, j = 1..r-q-1.
    for (int j = 1; j <= r - q - 1; ++j) b.add_edge(y + i, z + j - 1);
  }
  for (int i = 0; i < clique; ++i) {
    for (int j = i + 1; j < clique; ++j) b.add_edge(z + i, z + j);
    b.add_edge(z + i, w + i);
  }
  return b.build();
}

std::int64_t f1(int q, int r) {
  Require(q + 2 <= r && r <= 2 * q - 2, "f1 requires q+2 <= r <= 2q-2");
  return static_cast<std::int64_t>(r) * (q - 1) + binomial(r - q + 2, 2);
}

std::int64_t f2(int q, int r) {
  Require(q + 2 <= r && r <= 2 * q - 2, "f2 requires q+2 <= r <= 2q-2");
  return 2 * static_cast<std::int64_t>(r - q) + binomial(2 * q, 2);
}

BoundParams divide(std::int64_t dividend, std::int64_t divisor) {
  Require(divisor >= 1, "divide requires a positive divisor");
  Require(dividend >= 0, "divide requires a non-negative dividend");
  return BoundParams{dividend / divisor, dividend % divisor, divisor,
                     dividend};
}

std::int64_t bound34_1(int p, int q) {
  Require(2 <= p && p < q, "case 1 requires 2 <= p < q");
  const BoundParams d = divide(q, p);
  return (d.a * d.a + 1) * p + (2 * d.a + 1) * d.b;
}

std::int64_t bound34_2(int p, int q, int r) {
  Require(2 <= p && p < q && q < r && r <= 2 * q - p + 1,
          "case 2 requires 2 <= p < q < r <= 2q-p+1");
  const BoundParams d = divide(2 * q - r, p - 1);
  return d.a * d.a * (p - 1) + (2 * d.a + 1) * d.b + p +
         binomial(2 * (r - q) + 1, 2);
}

std::int64_t bound34_3(int p, int q, int r) {
  Require(2 <= p && p < q && 2 * q - p + 1 < r && r <= 2 * q,
          "case 3 requires 2 <= p < q and 2q-p+1 < r <= 2q");
  const std::int64_t parts = p - 2 * q + r;
  const BoundParams d = divide(r - q, parts);
  return p + 2 * q - r + parts * binomial(2 * d.a + 1, 2) +
         d.b * (4 * d.a + 3);
}

}  // namespace eml
