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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "eml/canonical.hpp"
#include "eml/constructions.hpp"
#include "eml/enumerate.hpp"
#include "eml/graph.hpp"
#include "eml/invariants.hpp"
#include "eml/search.hpp"

namespace eml {
namespace {

Graph Random(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

void BM_MatchingNumber(benchmark::State& state) {
  const Graph g = Random(static_cast<int>(state.range(0)), 0.2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(g));
}
BENCHMARK(BM_MatchingNumber)->Arg(16)->Arg(64);

void BM_MinMaximalMatching(benchmark::State& state) {
  const Graph g = Random(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(min_maximal_matching_number(g));
}
BENCHMARK(BM_MinMaximalMatching)->Arg(12)->Arg(20)->Arg(28);

void BM_InducedMatching(benchmark::State& state) {
  const Graph g = Random(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(induced_matching_number(g));
}
BENCHMARK(BM_InducedMatching)->Arg(12)->Arg(24)->Arg(40);

void BM_IndependenceNumber(benchmark::State& state) {
  const Graph g = Random(static_cast<int>(state.range(0)), 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Arg(32)->Arg(64);

void BM_TripleOfWitness(benchmark::State& state) {
  const Graph g = g5(7, 12);
  for (auto _ : state) benchmark::DoNotOptimize(triple(g));
}
BENCHMARK(BM_TripleOfWitness);

void BM_CanonicalRandom(benchmark::State& state) {
  const Graph g = Random(static_cast<int>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRandom)->Arg(10)->Arg(32)->Arg(64);

void BM_CanonicalRegular(benchmark::State& state) {
  const Graph g = complete_bipartite(8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRegular);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_connected_graph(n, {}, [&](const Graph&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n).size());
}
BENCHMARK(BM_EnumerateTrees)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    Searcher searcher;
    benchmark::DoNotOptimize(searcher.census(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Census)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace eml

BENCHMARK_MAIN();
