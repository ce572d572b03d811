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

#include "eml/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "eml/composition.hpp"
#include "eml/constructions.hpp"
#include "eml/enumerate.hpp"
#include "eml/error.hpp"

namespace eml {

const char* to_string(Objective objective) {
  return objective == Objective::kVertices ? "vertices" : "edges";
}

const char* to_string(SearchStatus status) {
  return status == SearchStatus::kCertified ? "certified" : "inconclusive";
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kFail:
      return "fail";
    case Outcome::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

void validate_triple(const InvariantTriple& t) {
  const std::string at = " in " + t.to_string();
  if (t.p < 1) throw InputError("need 1 <= p" + at);
  if (t.p > t.q) throw InputError("need p <= q" + at);
  if (t.q > t.r) throw InputError("need q <= r" + at);
  if (t.r > 2 * t.q) throw InputError("need r <= 2q" + at);
}

int predicted_min_vertices(const InvariantTriple& t) {
  return t.p >= 2 && t.q == t.r ? 2 * t.r + 1 : 2 * t.r;
}

std::int64_t proven_edge_floor(const InvariantTriple& t) {
  if (t.p == 1) return binomial(t.r + 1, 2);
  return t.q == t.r ? 2 * t.r : 2 * t.r - 1;
}

std::optional<std::pair<std::int64_t, std::string>> best_known_edge_bound(
    const InvariantTriple& t) {
  std::optional<std::pair<std::int64_t, std::string>> best;
  auto offer = [&](std::int64_t edges, std::string name) {
    if (!best || edges < best->first) best.emplace(edges, std::move(name));
  };
  const int p = t.p, q = t.q, r = t.r;
  if (p == 1) {
    if (r == 1) offer(1, "K2");
    if (r >= 2 && (r == 2 * q - 1 || r == 2 * q)) offer(binomial(r + 1, 2), "gr");
    if (r == q) offer(static_cast<std::int64_t>(q) * q, "Kqq");
    if (q >= 2 && r == q + 1) offer(static_cast<std::int64_t>(q) * q + 2, "g4");
    if (q + 2 <= r && r <= 2 * q - 2) {
      offer(f1(q, r), "g5");
      offer(f2(q, r), "f2");
    }
  } else if (p == q) {
    if (r == q) offer(2 * r, "g3");
    if (r == q + 1) offer(2 * q + 1, "g1");
    if (q + 2 <= r && r <= 2 * q) offer(2 * r - 1, "g2");
  } else {
    if (r == q) {
      offer(bound34_1(p, q), "starjoin-1");
    } else if (r <= 2 * q - p + 1) {
      offer(bound34_2(p, q, r), "starjoin-2");
    } else {
      offer(bound34_3(p, q, r), "starjoin-3");
    }
  }
  return best;
}

void VerificationReport::add(ClaimCheck check) {
  switch (check.outcome) {
    case Outcome::kPass:
      ++passed;
      break;
    case Outcome::kFail:
      ++failed;
      break;
    case Outcome::kInconclusive:
      ++inconclusive;
      break;
  }
  checks.push_back(std::move(check));
}

namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class Fn>
void ParallelFor(std::size_t count, int workers, const Fn& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const int threads =
      static_cast<int>(std::min<std::size_t>(std::max(1, workers), count));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
}

constexpr std::size_t kChunk = 4096;

std::vector<InvariantTriple> AllTriples(int r_max) {
  std::vector<InvariantTriple> out;
  for (int r = 1; r <= r_max; ++r)
    for (int q = (r + 1) / 2; q <= r; ++q)
      for (int p = 1; p <= q; ++p) {
        if (q >= 1) out.push_back({p, q, r});
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Str(std::int64_t v) { return std::to_string(v); }

ClaimCheck Check(std::string claim, std::string instance, std::string expected) {
  ClaimCheck c;
  c.claim = std::move(claim);
  c.instance = std::move(instance);
  c.expected = std::move(expected);
  return c;
}

}  // namespace

Searcher::Searcher(SearchOptions options) : options_(std::move(options)) {
  if (options_.workers < 1) throw InputError("workers must be >= 1");
  if (options_.witnesses < 0) throw InputError("witnesses must be >= 0");
  options_.solver_budget.validate();
}

const Searcher::Level& Searcher::level(int n, int edge_limit) {
  if (edge_limit >= n * (n - 1) / 2) edge_limit = -1;
  if (auto full = levels_.find({n, -1}); full != levels_.end()) {
    return full->second;
  }
  const std::pair<int, int> key{n, edge_limit};
  if (auto it = levels_.find(key); it != levels_.end()) return it->second;

  Level table;
  std::vector<Graph> chunk;
  std::vector<InvariantTriple> triples;
  auto flush = [&] {
    triples.assign(chunk.size(), InvariantTriple{});
    ParallelFor(chunk.size(), options_.workers, [&](std::size_t i) {
      triples[i] = triple(chunk[i], options_.solver_budget);
    });
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      Entry& e = table.entries[triples[i]];
      const int edges = chunk[i].size();
      if (e.count++ == 0 || edges < e.min_edges) {
        e.min_edges = edges;
        e.witnesses.clear();
      }
      if (edges == e.min_edges &&
          static_cast<int>(e.witnesses.size()) < options_.witnesses) {
        e.witnesses.push_back(emit_graph6(chunk[i]));
      }
    }
    chunk.clear();
  };
  EnumerationOptions eo;
  eo.workers = options_.workers;
  if (edge_limit >= 0) eo.max_edges = edge_limit;
  for_each_connected_graph(n, eo, [&](const Graph& g) {
    ++table.graphs;
    if (g.size() == 0) return true;
    chunk.push_back(g);
    if (chunk.size() == kChunk) flush();
    return true;
  });
  flush();
  scanned_ += table.graphs;
  return levels_.emplace(key, std::move(table)).first->second;
}

SearchReport Searcher::min_vertices(const InvariantTriple& t,
                                    std::optional<int> n_budget) {
  validate_triple(t);
  const auto start = Clock::now();
  SearchReport report;
  report.target = t;
  report.objective = Objective::kVertices;
  report.budget = n_budget.value_or(kConnectedEnvelope);
  report.budget_source = n_budget ? "argument" : "envelope";
  if (report.budget < 1 || report.budget > kConnectedEnvelope) {
    throw InputError("vertex budget must lie in [1, " +
                     std::to_string(kConnectedEnvelope) + "]");
  }
  // 2 match(G) <= |V(G)| rules out every smaller order.
  report.lower_bound = 2 * t.r;
  for (int n = 2 * t.r; n <= report.budget; ++n) {
    const Level& lvl = level(n, -1);
    report.scanned += lvl.graphs;
    if (auto it = lvl.entries.find(t); it != lvl.entries.end()) {
      report.status = SearchStatus::kCertified;
      report.value = n;
      report.upper_bound = n;
      report.lower_bound = n;
      report.witnesses = it->second.witnesses;
      break;
    }
    report.lower_bound = n + 1;
  }
  if (!report.value) {
    report.note = "no connected graph of order <= " +
                  std::to_string(report.budget) + " realises the triple";
  }
  report.elapsed_seconds = Since(start);
  if (report.value) certified_vertices_[t] = report;
  return report;
}

SearchReport Searcher::min_edges(const InvariantTriple& t,
                                 std::optional<int> edge_budget) {
  validate_triple(t);
  const auto start = Clock::now();
  SearchReport report;
  report.target = t;
  report.objective = Objective::kEdges;
  if (edge_budget) {
    report.budget = *edge_budget;
    report.budget_source = "argument";
  } else {
    const auto bound = best_known_edge_bound(t);
    if (!bound) {
      throw InputError("no construction bounds " + t.to_string() +
                       "; pass an edge budget");
    }
    report.budget = static_cast<int>(bound->first);
    report.budget_source = bound->second;
  }
  if (report.budget < 1) throw InputError("edge budget must be >= 1");
  const int floor = static_cast<int>(proven_edge_floor(t));
  const int k = options_.witnesses;

  std::optional<int> best;
  bool exhausted = false;
  int n = 2 * t.r;
  for (;; ++n) {
    // Ties still count as witnesses, but only a smaller graph can change
    // the value.
    const int limit = best ? *best : report.budget;
    if (n - 1 > (best ? *best - 1 : report.budget)) {
      exhausted = true;
      break;
    }
    if (options_.trust_proven_floors && best && *best <= floor) {
      exhausted = true;
      report.note = "stopped at the proven floor " + std::to_string(floor);
      break;
    }
    if (n > kConnectedEnvelope) break;
    const Level& lvl = level(n, limit);
    report.scanned += lvl.graphs;
    auto it = lvl.entries.find(t);
    if (it == lvl.entries.end() || it->second.min_edges > limit) continue;
    const Entry& e = it->second;
    if (!best || e.min_edges < *best) {
      best = e.min_edges;
      report.witnesses = e.witnesses;
    } else {
      for (const auto& w : e.witnesses) {
        if (static_cast<int>(report.witnesses.size()) >= k) break;
        report.witnesses.push_back(w);
      }
    }
  }
  report.upper_bound = best;
  if (exhausted && best) {
    report.status = SearchStatus::kCertified;
    report.value = best;
    report.lower_bound = *best;
  } else if (exhausted) {
    report.lower_bound = report.budget + 1;
    report.note = "none with <= " + std::to_string(report.budget) + " edges";
  } else {
    // Orders past the envelope need at least envelope edges.
    report.lower_bound =
        std::min(best ? *best : report.budget + 1, kConnectedEnvelope);
    report.note = "orders above " + std::to_string(kConnectedEnvelope) +
                  " not scanned";
  }
  report.elapsed_seconds = Since(start);
  if (report.value) certified_edges_[t] = report;
  return report;
}

std::vector<CensusRow> Searcher::census(int n) {
  if (n < 1 || n > kConnectedEnvelope) {
    throw InputError("census supports 1 <= n <= " +
                     std::to_string(kConnectedEnvelope));
  }
  const Level& lvl = level(n, -1);
  std::vector<CensusRow> rows;
  for (const auto& [t, e] : lvl.entries) {
    rows.push_back(CensusRow{n, t, e.count, e.min_edges, e.witnesses});
  }
  return rows;
}

VerificationReport Searcher::verify_theorems(const VerifyScope& scope) {
  for (const auto& c : scope.claims) {
    const auto& ids = verify_claim_ids();
    if (std::find(ids.begin(), ids.end(), c) == ids.end()) {
      throw InputError("unknown claim '" + c + "'");
    }
  }
  if (scope.r_max < 1 || 2 * scope.r_max + 1 > kConnectedEnvelope) {
    throw InputError("r_max must satisfy 2 r_max + 1 <= " +
                     std::to_string(kConnectedEnvelope));
  }
  if (scope.n_max < 2 || scope.n_max > kConnectedEnvelope) {
    throw InputError("n_max must lie in [2, " +
                     std::to_string(kConnectedEnvelope) + "]");
  }
  if (scope.edge_r_max < 1 || scope.pair_r_max < 1) {
    throw InputError("edge_r_max and pair_r_max must be >= 1");
  }
  auto selected = [&](const std::string& id) {
    return scope.claims.empty() ||
           std::find(scope.claims.begin(), scope.claims.end(), id) !=
               scope.claims.end();
  };
  VerificationReport report;

  if (selected("min-vertices")) {
    for (const InvariantTriple& t : AllTriples(scope.r_max)) {
      const int want = predicted_min_vertices(t);
      const SearchReport s =
          min_vertices(t, std::min(want, kConnectedEnvelope));
      ClaimCheck c = Check("min-vertices", t.to_string(), "min|V| = " + Str(want));
      if (s.value) {
        c.observed = "min|V| = " + Str(*s.value);
        c.outcome = *s.value == want ? Outcome::kPass : Outcome::kFail;
        if (c.outcome == Outcome::kFail && !s.witnesses.empty()) {
          c.counterexample = s.witnesses.front();
        }
      } else {
        c.observed = "no graph of order <= " + Str(want);
        c.outcome = Outcome::kFail;
      }
      report.add(std::move(c));
    }
  }

  if (selected("graph-sets")) {
    const int top = std::min(kConnectedEnvelope, 2 * scope.r_max + 1);
    for (int n = 2; n <= top; ++n) {
      std::set<InvariantTriple> tight, predicted;
      std::string example;
      for (const CensusRow& row : census(n)) {
        if (2 * row.triple.r == n || 2 * row.triple.r + 1 == n) {
          tight.insert(row.triple);
        }
      }
      for (const InvariantTriple& t : AllTriples(n / 2)) {
        if (2 * t.r + 1 == n || (2 * t.r == n && predicted_min_vertices(t) == n)) {
          predicted.insert(t);
        }
      }
      ClaimCheck c = Check("graph-sets", "n=" + Str(n),
                   Str(static_cast<std::int64_t>(predicted.size())) +
                       " triples with 2r in {n-1, n}");
      std::string diff;
      for (const auto& t : tight) {
        if (!predicted.count(t)) diff += " +" + t.to_string();
      }
      for (const auto& t : predicted) {
        if (!tight.count(t)) diff += " -" + t.to_string();
      }
      c.observed = Str(static_cast<std::int64_t>(tight.size())) + " triples" +
                   (diff.empty() ? "" : ";" + diff);
      c.outcome = diff.empty() ? Outcome::kPass : Outcome::kFail;
      report.add(std::move(c));
    }
  }

  if (selected("min-edges")) {
    std::vector<std::pair<InvariantTriple, std::int64_t>> instances;
    for (int q = 1; 2 * q - 1 <= scope.edge_r_max; ++q) {
      instances.push_back({{1, q, 2 * q - 1}, binomial(2 * q, 2)});
      if (2 * q <= scope.edge_r_max) {
        instances.push_back({{1, q, 2 * q}, binomial(2 * q + 1, 2)});
      }
    }
    for (int q = 2; q <= scope.edge_r_max; ++q) {
      for (int r = q + 1; r <= std::min(2 * q, scope.edge_r_max); ++r) {
        instances.push_back({{q, q, r}, 2 * r - 1});
      }
      instances.push_back({{q, q, q}, 2 * q});
    }
    std::sort(instances.begin(), instances.end());
    for (const auto& [t, want] : instances) {
      const SearchReport s = min_edges(t);
      ClaimCheck c = Check("min-edges", t.to_string(), "min|E| = " + Str(want));
      c.bound = want;
      if (s.value) {
        c.certified_min = *s.value;
        c.observed = "min|E| = " + Str(*s.value);
        c.outcome = *s.value == want ? Outcome::kPass : Outcome::kFail;
        if (c.outcome == Outcome::kFail && !s.witnesses.empty()) {
          c.counterexample = s.witnesses.front();
        }
      } else if (s.status == SearchStatus::kInconclusive &&
                 s.lower_bound <= s.budget) {
        c.observed = "inconclusive: " + s.note;
        c.outcome = Outcome::kInconclusive;
      } else {
        c.observed = s.note;
        c.outcome = Outcome::kFail;
      }
      report.add(std::move(c));
    }
  }

  if (selected("notpm")) {
    for (int n = 2; n <= scope.n_max; n += 2) {
      ClaimCheck c = Check("notpm", "n=" + Str(n),
                   "no graph with ind-match >= 2, min-match = match, and a "
                   "perfect matching");
      std::uint64_t graphs = 0;
      for (const CensusRow& row : census(n)) {
        graphs += row.count;
        const InvariantTriple& t = row.triple;
        if (t.p >= 2 && t.q == t.r && 2 * t.r == n && c.counterexample.empty()) {
          c.counterexample = row.witnesses.empty() ? "" : row.witnesses.front();
          c.outcome = Outcome::kFail;
        }
      }
      c.observed = c.outcome == Outcome::kFail
                       ? "counterexample found"
                       : "none among " + Str(static_cast<std::int64_t>(graphs)) +
                             " graphs";
      report.add(std::move(c));
    }
  }

  if (selected("minE-minV")) {
    std::set<InvariantTriple> targets;
    for (const auto& t : AllTriples(scope.pair_r_max)) targets.insert(t);
    for (const auto& [t, s] : certified_edges_) {
      if (certified_vertices_.count(t)) targets.insert(t);
    }
    for (const InvariantTriple& t : targets) {
      const int v_budget = std::min(predicted_min_vertices(t), kConnectedEnvelope);
      const SearchReport v = certified_vertices_.count(t)
                                 ? certified_vertices_.at(t)
                                 : min_vertices(t, v_budget);
      const SearchReport e =
          certified_edges_.count(t) ? certified_edges_.at(t) : min_edges(t);
      ClaimCheck c = Check("minE-minV", t.to_string(), "min|E| >= min|V| - 1");
      if (v.value && e.value) {
        c.observed = "min|E| = " + Str(*e.value) + ", min|V| = " + Str(*v.value);
        c.outcome = *e.value >= *v.value - 1 ? Outcome::kPass : Outcome::kFail;
        if (c.outcome == Outcome::kFail) c.counterexample = e.witnesses.front();
      } else {
        c.observed = "not certified";
        c.outcome = Outcome::kInconclusive;
      }
      report.add(std::move(c));
    }
  }

  if (selected("lowerbound")) {
    for (int n = 2; n <= scope.n_max; ++n) {
      ClaimCheck c = Check("lowerbound", "n=" + Str(n),
                   "|E| >= 2r-1 (p >= 2, q < r), >= 2r (p >= 2, q = r), "
                   ">= C(r+1,2) (p = 1)");
      int rows = 0;
      for (const CensusRow& row : census(n)) {
        ++rows;
        if (row.min_edges < proven_edge_floor(row.triple) &&
            c.counterexample.empty()) {
          c.outcome = Outcome::kFail;
          c.counterexample = row.witnesses.empty() ? "" : row.witnesses.front();
          c.observed = row.triple.to_string() + " with " + Str(row.min_edges) +
                       " edges";
        }
      }
      if (c.outcome == Outcome::kPass) {
        c.observed = "all " + Str(rows) + " triples respect the floors";
      }
      report.add(std::move(c));
    }
    for (const auto& [t, s] : certified_edges_) {
      const std::int64_t floor = proven_edge_floor(t);
      ClaimCheck c = Check("lowerbound", t.to_string(), "min|E| >= " + Str(floor));
      c.bound = floor;
      c.certified_min = *s.value;
      c.observed = "min|E| = " + Str(*s.value);
      c.outcome = *s.value >= floor ? Outcome::kPass : Outcome::kFail;
      if (c.outcome == Outcome::kFail) c.counterexample = s.witnesses.front();
      report.add(std::move(c));
    }
  }
  return report;
}

namespace {

// One constructed witness against its claimed triple and edge bound.
ClaimCheck CheckConstruction(const std::string& claim, const InvariantTriple& t,
                             const Graph& g, std::int64_t bound, bool exact,
                             const SolverBudget& budget) {
  ClaimCheck c = Check(claim, t.to_string(),
               t.to_string() + (exact ? " with |E| = " : " with |E| <= ") +
                   Str(bound));
  c.bound = bound;
  c.witness_edges = g.size();
  const InvariantTriple got = triple(g, budget);
  c.observed = got.to_string() + " with |E| = " + Str(g.size());
  const bool edges_ok = exact ? g.size() == bound : g.size() <= bound;
  c.outcome = got == t && edges_ok ? Outcome::kPass : Outcome::kFail;
  if (c.outcome == Outcome::kFail) c.counterexample = emit_graph6(g);
  return c;
}

}  // namespace

VerificationReport Searcher::check_upper_bounds(const BoundScope& scope) {
  if (scope.q_max < 2 || scope.p_max < 2 || scope.r_max < 3) {
    throw InputError("bound scope needs q_max >= 2, p_max >= 2, r_max >= 3");
  }
  const SolverBudget& budget = options_.solver_budget;
  VerificationReport report;
  auto certify = [&](ClaimCheck& c, const InvariantTriple& t) {
    if (t.r > scope.certify_r_max || c.outcome != Outcome::kPass) return;
    const SearchReport s = min_edges(t, static_cast<int>(*c.bound));
    if (s.value) {
      c.certified_min = *s.value;
      c.observed += "; certified min|E| = " + Str(*s.value) + " (gap " +
                    Str(*c.bound - *s.value) + ")";
    }
  };

  for (int q = 2; q <= scope.q_max; ++q) {
    const InvariantTriple t{1, q, q};
    ClaimCheck c = CheckConstruction("kqq-bound", t, complete_bipartite(q, q),
                                     static_cast<std::int64_t>(q) * q, true,
                                     budget);
    certify(c, t);
    report.add(std::move(c));
  }
  for (int q = 2; q <= scope.q_max; ++q) {
    const InvariantTriple t{1, q, q + 1};
    ClaimCheck c = CheckConstruction(
        "g4-bound", t, g4(q), static_cast<std::int64_t>(q) * q + 2, true, budget);
    certify(c, t);
    report.add(std::move(c));
  }
  for (int q = 4; q <= scope.q_max; ++q) {
    for (int r = q + 2; r <= 2 * q - 2; ++r) {
      const InvariantTriple t{1, q, r};
      ClaimCheck c = CheckConstruction("g5-bound", t, g5(q, r), f1(q, r), true,
                                       budget);
      c.bound = std::min(f1(q, r), f2(q, r));
      c.observed += "; f1 = " + Str(f1(q, r)) + ", f2 = " + Str(f2(q, r));
      certify(c, t);
      report.add(std::move(c));
    }
  }
  for (int p = 2; p <= scope.p_max; ++p) {
    for (int q = p + 1; q <= scope.r_max; ++q) {
      for (int r = q; r <= std::min(2 * q, scope.r_max); ++r) {
        const int which = r == q ? 1 : (r <= 2 * q - p + 1 ? 2 : 3);
        const std::int64_t bound = which == 1   ? bound34_1(p, q)
                                   : which == 2 ? bound34_2(p, q, r)
                                                : bound34_3(p, q, r);
        const InvariantTriple t{p, q, r};
        const Graph g = star_join(thm34_spec(which, p, q, r));
        ClaimCheck c = CheckConstruction("starjoin-" + Str(which), t, g, bound,
                                         true, budget);
        certify(c, t);
        report.add(std::move(c));
      }
    }
  }
  for (int p = 2; p <= std::min(3, scope.p_max); ++p) {
    const std::pair<std::int64_t, std::int64_t> cases[] = {
        {bound34_1(p, p + 1), 2 * p + 3},
        {bound34_2(p, p + 1, p + 2), 2 * p + 5},
        {bound34_3(p, p + 1, p + 4), 2 * p + 11}};
    const std::string names[] = {"(p,p+1,p+1)", "(p,p+1,p+2)", "(p,p+1,p+4)"};
    for (int i = 0; i < 3; ++i) {
      ClaimCheck c = Check("starjoin-small", names[i] + " p=" + Str(p),
                   "bound = " + Str(cases[i].second));
      c.bound = cases[i].first;
      c.observed = "bound = " + Str(cases[i].first);
      c.outcome = cases[i].first == cases[i].second ? Outcome::kPass
                                                    : Outcome::kFail;
      report.add(std::move(c));
    }
  }
  return report;
}

TreeReport Searcher::tree_conjecture_check(int n_max) {
  if (n_max < 1 || n_max > kTreeEnvelope) {
    throw InputError("tree check supports 1 <= n_max <= " +
                     std::to_string(kTreeEnvelope));
  }
  const auto start = Clock::now();
  TreeReport report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max && !report.counterexample_found; ++n) {
    const std::vector<Graph> trees = enumerate_trees(n);
    report.orders.push_back({n, trees.size()});
    report.total += trees.size();
    scanned_ += trees.size();
    if (n == 1) continue;
    std::vector<std::pair<int, int>> values(trees.size());
    ParallelFor(trees.size(), options_.workers, [&](std::size_t i) {
      values[i] = {induced_matching_number(trees[i], options_.solver_budget),
                   min_maximal_matching_number(trees[i], options_.solver_budget)};
    });
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (values[i].first != values[i].second) {
        report.counterexample_found = true;
        report.counterexample = emit_graph6(trees[i]);
        report.ind_match = values[i].first;
        report.min_match = values[i].second;
        break;
      }
    }
  }
  report.elapsed_seconds = Since(start);
  return report;
}

ConditionalReport Searcher::conditional_theorem42_check(int p_max) {
  if (p_max < 2 || p_max > 4) throw InputError("p_max must lie in [2, 4]");
  ConditionalReport report;
  for (int p = 2; p <= p_max; ++p) {
    ConditionalRow row;
    row.p = p;
    row.bound = 2 * p + 3;
    row.floor = 2 * p + 2;
    row.search = min_edges({p, p + 1, p + 1}, static_cast<int>(row.bound));
    if (!row.search.value) {
      row.verdict = "inconclusive";
    } else if (*row.search.value == row.bound) {
      row.verdict = "supports";
    } else {
      row.verdict = "below-bound";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace eml
