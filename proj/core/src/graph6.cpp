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

#include <string>
#include <string_view>
#include <vector>

#include "eml/error.hpp"
#include "eml/graph.hpp"

namespace eml {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void AppendSixBits(std::string& out, int value) {
  out.push_back(static_cast<char>(value + 63));
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    AppendSixBits(out, n);
  } else {
    out.push_back('~');
    AppendSixBits(out, (n >> 12) & 63);
    AppendSixBits(out, (n >> 6) & 63);
    AppendSixBits(out, n & 63);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        AppendSixBits(out, acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) AppendSixBits(out, acc << (6 - filled));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 text", base);

  auto six = [&](std::size_t pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("byte outside the printable graph6 range", base + pos);
    }
    return static_cast<int>(c) - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError("8-byte order header: graph exceeds the 64-vertex cap",
                       base);
    }
    if (text.size() < 4) throw ParseError("truncated order header", base);
    n = (static_cast<long>(six(1)) << 12) | (six(2) << 6) | six(3);
    if (n < 63) throw ParseError("non-canonical extended order header", base);
    pos = 4;
  } else {
    n = six(0);
    pos = 1;
  }
  if (n > kMaxVertices) {
    throw ParseError("order " + std::to_string(n) +
                         " exceeds the 64-vertex cap",
                     base);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) {
    throw ParseError("truncated adjacency bits: expected " +
                         std::to_string(bytes) + " bytes",
                     base + text.size());
  }
  if (text.size() > pos + bytes) {
    throw ParseError("trailing bytes after adjacency bits", base + pos + bytes);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = six(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    const int last = six(pos + bytes - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError("non-zero padding bits", base + pos + bytes - 1);
    }
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

}  // namespace eml
