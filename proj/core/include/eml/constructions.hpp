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

#ifndef EML_CONSTRUCTIONS_HPP_
#define EML_CONSTRUCTIONS_HPP_

#include <cstdint>

#include "eml/graph.hpp"

namespace eml {

// Named graph families. Vertices are numbered family by family in the order
// the families are listed (X, then Y, then Z, ...), and each generator
// records the names x1, y2, z3, ... in the label map. All throw InputError
// on a parameter outside the family's range and CapacityError past 64
// vertices.

// K_n, n >= 1.
Graph complete(int n);
// K_{m,n}: x1..xm then y1..yn, every x joined to every y. m, n >= 1.
Graph complete_bipartite(int m, int n);
// C_n, n >= 3.
Graph cycle(int n);
// P_n, n >= 1.
Graph path(int n);
// K_{1,m}, m >= 1: centre first.
Graph star(int m);

// W(G): a pendant w_i hung on every vertex v_i. The original vertices keep
// their ids (and names, or v1..vn when unnamed); w1..wn follow.
Graph whisker(const Graph& g);

// Clique on x1..xr with a pendant y_k on each x_k. r >= 2.
Graph g_r(int r);

// Pendant pairs x_i - y_i (i < q) hung on z2 of the path z1-z2-z3-z4.
// q >= 2. Triple (q, q, q+1) with 2q+1 edges.
Graph g1(int q);

// Tree on 2r vertices with triple (q, q, r): pendant pairs x_i - y_i on z2
// of the path z1..z_{2r-2q+2}, plus pendant pairs u_i - v_i hung on
// z_{2i+5}. Requires q >= 2 and q+2 <= r <= 2q.
Graph g2(int q, int r);

// Spider: legs z - y_i - x_i, i = 1..r. r >= 2.
Graph g3(int r);

// K_{q,q} on X_q, Y_q plus pendants z1 on x_q and z2 on y_q. q >= 2.
Graph g4(int q);

// K_{q-1,q-1} on X, Y; clique on Z_{r-q+1} with pendant w_i on each z_i;
// every x joined to z_{r-q}, z_{r-q+1}; every y joined to z_1..z_{r-q-1}.
// Requires q+2 <= r <= 2q-2.
Graph g5(int q, int r);

// Edge-count formulas for (1, q, r) graphs. Both require q+2 <= r <= 2q-2.
std::int64_t f1(int q, int r);
std::int64_t f2(int q, int r);

// dividend = a * divisor + b with 0 <= b < divisor.
struct BoundParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t divisor = 1;
  std::int64_t dividend = 0;
};
BoundParams divide(std::int64_t dividend, std::int64_t divisor);

// Edge counts of the star-join witnesses for p < q (see composition.hpp):
// case 1 realises (p, q, q), case 2 (p, q, r) with q < r <= 2q-p+1, case 3
// (p, q, r) with 2q-p+1 < r <= 2q.
std::int64_t bound34_1(int p, int q);
std::int64_t bound34_2(int p, int q, int r);
std::int64_t bound34_3(int p, int q, int r);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace eml

#endif  // EML_CONSTRUCTIONS_HPP_
