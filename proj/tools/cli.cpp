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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cache.hpp"
#include "eml/composition.hpp"
#include "eml/constructions.hpp"
#include "eml/enumerate.hpp"
#include "eml/error.hpp"
#include "eml/graph.hpp"
#include "eml/invariants.hpp"
#include "eml/search.hpp"
#include "record.hpp"

namespace eml::cli {

namespace {

struct RunConfig {
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  bool has_budget_nodes = false;
  bool has_budget_seconds = false;
  int workers = 1;
  std::string format = "json";
  std::string cache;
  int witnesses = 1;

  SolverBudget budget() const {
    SolverBudget b;
    if (has_budget_nodes) b.node_limit = budget_nodes;
    if (has_budget_seconds) b.time_limit_seconds = budget_seconds;
    b.validate();
    return b;
  }

  SearchOptions search_options() const {
    SearchOptions o;
    o.workers = workers;
    o.witnesses = witnesses;
    o.solver_budget = budget();
    return o;
  }

  // Flags that change results, in normal form. Workers, format and cache
  // location do not.
  void append_normal(std::vector<std::string>& args) const {
    if (has_budget_nodes) args.push_back("budget-nodes=" + std::to_string(budget_nodes));
    if (has_budget_seconds) {
      std::ostringstream s;
      s << budget_seconds;
      args.push_back("budget-seconds=" + s.str());
    }
    args.push_back("witnesses=" + std::to_string(witnesses));
  }

  Json budget_json() const {
    Json j = Json::object();
    j["nodes"] = has_budget_nodes ? Json(budget_nodes) : Json();
    j["seconds"] = has_budget_seconds ? Json(budget_seconds) : Json();
    return j;
  }
};

struct Outcome2 {
  ResultRecord record;
  int exit = kExitOk;
};

// A parsed command: its normal form and inputs are fixed before any work,
// so the cache can be consulted first.
struct Command {
  std::string name;
  std::vector<std::string> arguments;
  Json inputs;
  bool cacheable = false;
  std::function<void(Outcome2&)> run;

  std::string normal_form() const {
    std::string s = name;
    for (const auto& a : arguments) s += " " + a;
    return s;
  }
};

Json TripleJson(const InvariantTriple& t) {
  return Json{{"p", t.p}, {"q", t.q}, {"r", t.r}};
}

Json MatchingJson(const Matching& m) {
  Json out = Json::array();
  for (const Edge& e : m.edges()) out.push_back(Json::array({e.u, e.v}));
  return out;
}

Json SearchJson(const SearchReport& r) {
  Json j;
  j["target"] = TripleJson(r.target);
  j["objective"] = to_string(r.objective);
  j["status"] = to_string(r.status);
  j["value"] = r.value ? Json(*r.value) : Json();
  j["upper_bound"] = r.upper_bound ? Json(*r.upper_bound) : Json();
  j["lower_bound"] = r.lower_bound;
  j["budget"] = r.budget;
  j["budget_source"] = r.budget_source;
  j["witnesses"] = r.witnesses;
  j["scanned"] = r.scanned;
  j["note"] = r.note;
  return j;
}

Json CheckJson(const ClaimCheck& c) {
  Json j;
  j["claim"] = c.claim;
  j["instance"] = c.instance;
  j["expected"] = c.expected;
  j["observed"] = c.observed;
  j["outcome"] = to_string(c.outcome);
  j["counterexample"] = c.counterexample.empty() ? Json() : Json(c.counterexample);
  j["bound"] = c.bound ? Json(*c.bound) : Json();
  j["witness_edges"] = c.witness_edges ? Json(*c.witness_edges) : Json();
  j["certified_min"] = c.certified_min ? Json(*c.certified_min) : Json();
  return j;
}

// ---------------------------------------------------------------- invariants

Json DescribeGraph(const Graph& g, const RunConfig& cfg) {
  const SolverBudget budget = cfg.budget();
  Json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  if (g.size() > 0) {
    j["triple"] = TripleJson(triple(g, budget));
  } else {
    j["triple"] = TripleJson({0, 0, 0});
  }
  j["alpha"] = independence_number(g, budget);
  j["perfect_matching"] = has_perfect_matching(g);
  j["connected"] = g.order() > 0 && is_connected(g);
  if (cfg.witnesses > 0) {
    Json w;
    w["maximum_matching"] = MatchingJson(maximum_matching(g, budget));
    w["minimum_maximal_matching"] =
        MatchingJson(minimum_maximal_matching(g, budget));
    w["maximum_induced_matching"] =
        MatchingJson(maximum_induced_matching(g, budget));
    w["maximum_independent_set"] =
        maximum_independent_set(g, budget).to_vector();
    j["witnesses"] = w;
  }
  return j;
}

Command PlanInvariants(const std::string& source, std::istream& in,
                       const RunConfig& cfg) {
  Command c;
  c.name = "invariants";
  c.arguments = {source};
  cfg.append_normal(c.arguments);
  c.inputs = {{"source", source == "-" ? "stdin" : source},
              {"budget", cfg.budget_json()},
              {"witnesses", cfg.witnesses}};
  c.run = [source, &in, cfg](Outcome2& result) {
    std::ifstream file;
    std::istream* stream = &in;
    if (source != "-") {
      file.open(source);
      if (!file) throw InputError("cannot open '" + source + "'");
      stream = &file;
    }
    Json graphs = Json::array();
    int errors = 0;
    std::string line;
    for (int number = 1; std::getline(*stream, line); ++number) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
        line.pop_back();
      }
      if (line.empty()) continue;
      Json entry;
      entry["line"] = number;
      try {
        entry.update(DescribeGraph(parse_graph6(line), cfg));
      } catch (const ResourceError& e) {
        entry["graph6"] = line;
        entry["error"] = std::string(e.what()) + " [" +
                         std::to_string(e.lower_bound()) + ", " +
                         std::to_string(e.upper_bound()) + "]";
        result.exit = kExitBudget;
        ++errors;
      } catch (const InputError& e) {
        entry["graph6"] = line;
        entry["error"] = e.what();
        ++errors;
      }
      graphs.push_back(std::move(entry));
    }
    const int ok = static_cast<int>(graphs.size()) - errors;
    result.record.outputs["graphs"] = graphs;
    result.record.outputs["summary"] = {{"graphs", ok}, {"errors", errors}};
  };
  return c;
}

// ----------------------------------------------------------------- construct

using Params = std::map<std::string, std::vector<std::string>>;

Params ParseParams(const std::vector<std::string>& raw) {
  Params params;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("parameter '" + item + "' is not key=value");
    }
    params[item.substr(0, eq)].push_back(item.substr(eq + 1));
  }
  return params;
}

class ParamReader {
 public:
  ParamReader(const std::string& family, Params params)
      : family_(family), params_(std::move(params)) {}

  int Int(const std::string& key) {
    const std::string& v = One(key);
    try {
      std::size_t used = 0;
      const int value = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return value;
    } catch (const std::exception&) {
      throw InputError(family_ + ": " + key + "=" + v + " is not an integer");
    }
  }

  std::optional<int> OptionalInt(const std::string& key) {
    if (!params_.count(key)) return std::nullopt;
    return Int(key);
  }

  const std::string& One(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) {
      throw InputError(family_ + " needs parameter " + key);
    }
    if (it->second.size() != 1) {
      throw InputError(family_ + ": parameter " + key + " given twice");
    }
    used_.push_back(key);
    return it->second.front();
  }

  std::vector<std::string> All(const std::string& key) {
    used_.push_back(key);
    auto it = params_.find(key);
    return it == params_.end() ? std::vector<std::string>{} : it->second;
  }

  void Finish() const {
    for (const auto& [key, values] : params_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw InputError(family_ + " does not take parameter " + key);
      }
    }
  }

 private:
  std::string family_;
  Params params_;
  std::vector<std::string> used_;
};

StarJoinPart ParsePart(const std::string& text) {
  // <graph6>@<attach>:<a|b>
  const auto at = text.rfind('@');
  const auto colon = text.rfind(':');
  if (at == std::string::npos || colon == std::string::npos || colon < at) {
    throw InputError("part '" + text + "' is not <graph6>@<vertex>:<a|b>");
  }
  StarJoinPart part;
  part.graph = parse_graph6(text.substr(0, at));
  const std::string vertex = text.substr(at + 1, colon - at - 1);
  try {
    std::size_t used = 0;
    part.attach = std::stoi(vertex, &used);
    if (used != vertex.size()) throw std::invalid_argument(vertex);
  } catch (const std::exception&) {
    throw InputError("part '" + text + "': attach vertex is not an integer");
  }
  const std::string tag = text.substr(colon + 1);
  if (tag == "a") {
    part.tag = PartTag::kPendantNeighbor;
  } else if (tag == "b") {
    part.tag = PartTag::kCompleteBipartite;
  } else {
    throw InputError("part '" + text + "': tag must be a or b");
  }
  return part;
}

StarJoinSpec ParseSpec(const std::vector<std::string>& parts) {
  StarJoinSpec spec;
  for (const auto& p : parts) spec.parts.push_back(ParsePart(p));
  spec.validate();
  return spec;
}

Json ComposeOutputs(const StarJoinSpec& spec, const SolverBudget& budget,
                    int* exit) {
  const Graph g = star_join(spec);
  const HypothesisReport ind = check_thm_ind_hypotheses(spec, budget);
  const HypothesisReport min = check_thm_min_hypotheses(spec, budget);
  Json parts = Json::array();
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const auto& part = spec.parts[i];
    std::string failure = ind.parts[i].failure;
    if (failure.empty()) failure = min.parts[i].failure;
    parts.push_back({{"graph6", emit_graph6(part.graph)},
                     {"attach", part.attach},
                     {"tag", to_string(part.tag)},
                     {"ind_match_is_one", ind.parts[i].ind_match_is_one},
                     {"tag_holds", ind.parts[i].tag_holds},
                     {"star2_holds", min.parts[i].star2_holds},
                     {"failure", failure.empty() ? Json() : Json(failure)}});
  }
  const InvariantTriple solved = triple(g, budget);
  Json out;
  out["graph6"] = emit_graph6(g);
  out["n"] = g.order();
  out["m"] = g.size();
  out["hub"] = g.order() - 1;
  out["parts"] = parts;
  out["ind_hypotheses"] = ind.passed;
  out["min_hypotheses"] = min.passed;
  out["solver"] = TripleJson(solved);
  if (ind.passed && min.passed) {
    const InvariantTriple predicted = predicted_invariants(spec, budget);
    out["predicted"] = TripleJson(predicted);
    out["match_source"] = all_parts_perfectly_matchable(spec)
                              ? "sum of |V(H_i)|/2"
                              : "solver";
    out["agrees"] = predicted == solved;
    if (!(predicted == solved)) *exit = kExitRefuted;
  } else {
    out["predicted"] = Json();
    out["match_source"] = Json();
    out["agrees"] = Json();
  }
  return out;
}

struct Built {
  Graph graph;
  std::optional<InvariantTriple> predicted;
  std::optional<std::int64_t> edges;
  std::string edges_formula;
  std::optional<StarJoinSpec> spec;
};

Built BuildFamily(const std::string& family, ParamReader& p) {
  Built b;
  if (family == "Kn") {
    b.graph = complete(p.Int("n"));
    const int n = b.graph.order();
    b.edges = binomial(n, 2);
    b.edges_formula = "C(n,2)";
  } else if (family == "Kmn") {
    const int m = p.Int("m"), n = p.Int("n");
    b.graph = complete_bipartite(m, n);
    b.edges = static_cast<std::int64_t>(m) * n;
    b.edges_formula = "mn";
    if (m == n) b.predicted = InvariantTriple{1, n, n};
  } else if (family == "Cn") {
    b.graph = cycle(p.Int("n"));
    b.edges = b.graph.order();
    b.edges_formula = "n";
  } else if (family == "whisker") {
    const Graph base = parse_graph6(p.One("g6"));
    b.graph = whisker(base);
    b.edges = base.size() + base.order();
    b.edges_formula = "|E(G)| + |V(G)|";
  } else if (family == "gr") {
    const int r = p.Int("r");
    b.graph = g_r(r);
    b.predicted = InvariantTriple{1, (r + 1) / 2, r};
    b.edges = binomial(r + 1, 2);
    b.edges_formula = "C(r+1,2)";
  } else if (family == "g1") {
    const int q = p.Int("q");
    b.graph = g1(q);
    b.predicted = InvariantTriple{q, q, q + 1};
    b.edges = 2 * q + 1;
    b.edges_formula = "2q+1";
  } else if (family == "g2") {
    const int q = p.Int("q"), r = p.Int("r");
    b.graph = g2(q, r);
    b.predicted = InvariantTriple{q, q, r};
    b.edges = 2 * r - 1;
    b.edges_formula = "2r-1";
  } else if (family == "g3") {
    const int r = p.Int("r");
    b.graph = g3(r);
    b.predicted = InvariantTriple{r, r, r};
    b.edges = 2 * r;
    b.edges_formula = "2r";
  } else if (family == "g4") {
    const int q = p.Int("q");
    b.graph = g4(q);
    b.predicted = InvariantTriple{1, q, q + 1};
    b.edges = static_cast<std::int64_t>(q) * q + 2;
    b.edges_formula = "q^2+2";
  } else if (family == "g5") {
    const int q = p.Int("q"), r = p.Int("r");
    b.graph = g5(q, r);
    b.predicted = InvariantTriple{1, q, r};
    b.edges = f1(q, r);
    b.edges_formula = "f1(q,r)";
  } else if (family == "starjoin") {
    b.spec = ParseSpec(p.All("part"));
    b.graph = star_join(*b.spec);
  } else if (family == "thm34-1" || family == "thm34-2" ||
             family == "thm34-3") {
    const int which = family.back() - '0';
    const int pp = p.Int("p"), q = p.Int("q");
    const int r = which == 1 ? p.OptionalInt("r").value_or(q) : p.Int("r");
    b.spec = thm34_spec(which, pp, q, r);
    b.graph = star_join(*b.spec);
    b.predicted = InvariantTriple{pp, q, r};
    b.edges = which == 1   ? bound34_1(pp, q)
              : which == 2 ? bound34_2(pp, q, r)
                           : bound34_3(pp, q, r);
    b.edges_formula = "bound34_" + std::to_string(which);
  } else {
    throw InputError("unknown family '" + family +
                     "' (Kn, Kmn, Cn, whisker, gr, g1, g2, g3, g4, g5, "
                     "starjoin, thm34-1, thm34-2, thm34-3)");
  }
  p.Finish();
  return b;
}

Command PlanConstruct(const std::string& family,
                      const std::vector<std::string>& raw,
                      const RunConfig& cfg) {
  Command c;
  c.name = "construct";
  const Params params = ParseParams(raw);
  c.arguments = {family};
  Json in_params = Json::object();
  for (const auto& [k, vs] : params) {
    for (const auto& v : vs) c.arguments.push_back(k + "=" + v);
    in_params[k] = vs.size() == 1 ? Json(vs.front()) : Json(vs);
  }
  cfg.append_normal(c.arguments);
  c.inputs = {{"family", family}, {"params", in_params},
              {"budget", cfg.budget_json()}};
  c.run = [family, params, cfg](Outcome2& result) {
    ParamReader reader(family, params);
    Built b = BuildFamily(family, reader);
    const SolverBudget budget = cfg.budget();
    const Graph& g = b.graph;
    Json& out = result.record.outputs;
    out["graph6"] = emit_graph6(g);
    out["n"] = g.order();
    out["m"] = g.size();
    Json labels = Json::array();
    for (int v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
    out["labels"] = labels;
    const InvariantTriple solved = triple(g, budget);
    if (b.spec && !b.predicted) {
      try {
        b.predicted = predicted_invariants(*b.spec, budget);
      } catch (const ContractError& e) {
        out["prediction_error"] = e.what();
      }
    }
    out["predicted"] = b.predicted ? TripleJson(*b.predicted) : Json();
    out["solver"] = TripleJson(solved);
    out["edges_formula"] = b.edges ? Json(b.edges_formula) : Json();
    out["edges_expected"] = b.edges ? Json(*b.edges) : Json();
    bool agrees = true;
    if (b.predicted && !(*b.predicted == solved)) agrees = false;
    if (b.edges && *b.edges != g.size()) agrees = false;
    out["agrees"] = agrees;
    if (!agrees) result.exit = kExitRefuted;
  };
  return c;
}

Command PlanCompose(const std::vector<std::string>& parts,
                    const RunConfig& cfg) {
  Command c;
  c.name = "compose";
  c.arguments = parts;
  cfg.append_normal(c.arguments);
  c.inputs = {{"parts", parts}, {"budget", cfg.budget_json()}};
  c.run = [parts, cfg](Outcome2& result) {
    const StarJoinSpec spec = ParseSpec(parts);
    result.record.outputs = ComposeOutputs(spec, cfg.budget(), &result.exit);
  };
  return c;
}

// -------------------------------------------------------------------- search

std::optional<std::int64_t> ExactEdgeCount(const InvariantTriple& t) {
  const auto [p, q, r] = t;
  if (p == 1 && r == 2 * q) return binomial(2 * q + 1, 2);
  if (p == 1 && r == 2 * q - 1) return binomial(2 * q, 2);
  if (p == q && q >= 2 && r > q) return 2 * r - 1;
  if (p == q && q == r && r >= 2) return 2 * r;
  return std::nullopt;
}

Json ClaimEntry(const char* claim, const char* key, std::int64_t want,
                const std::optional<int>& got, bool exact, int* exit) {
  Json c = {{"claim", claim}, {key, want}};
  if (!got) {
    c["outcome"] = "inconclusive";
    return c;
  }
  const bool ok = exact ? *got == want : *got >= want;
  c["outcome"] = ok ? "pass" : "fail";
  if (!ok) *exit = kExitRefuted;
  return c;
}

struct SearchArgs {
  std::string objective;
  int p = 0, q = 0, r = 0;
  std::optional<int> n_budget;
  std::optional<int> edge_budget;
  bool trust_floors = false;
};

Command PlanSearch(const SearchArgs& a, const RunConfig& cfg) {
  const InvariantTriple t{a.p, a.q, a.r};
  validate_triple(t);
  if (a.objective != "minv" && a.objective != "mine") {
    throw InputError("objective must be minv or mine, got '" + a.objective +
                     "'");
  }
  if (a.objective == "minv" && a.edge_budget) {
    throw InputError("--edge-budget applies to mine");
  }
  if (a.objective == "mine" && a.n_budget) {
    throw InputError("--n-budget applies to minv");
  }
  Command c;
  c.name = "search";
  c.cacheable = true;
  c.arguments = {a.objective, std::to_string(a.p), std::to_string(a.q),
                 std::to_string(a.r)};
  if (a.n_budget) c.arguments.push_back("n-budget=" + std::to_string(*a.n_budget));
  if (a.edge_budget) {
    c.arguments.push_back("edge-budget=" + std::to_string(*a.edge_budget));
  }
  if (a.trust_floors) c.arguments.push_back("trust-floors");
  cfg.append_normal(c.arguments);
  c.inputs = {{"objective", a.objective},
              {"target", TripleJson(t)},
              {"n_budget", a.n_budget ? Json(*a.n_budget) : Json()},
              {"edge_budget", a.edge_budget ? Json(*a.edge_budget) : Json()},
              {"trust_floors", a.trust_floors},
              {"budget", cfg.budget_json()},
              {"witnesses", cfg.witnesses}};
  c.run = [a, t, cfg](Outcome2& result) {
    SearchOptions options = cfg.search_options();
    options.trust_proven_floors = a.trust_floors;
    Searcher searcher(options);
    Json claims = Json::array();
    if (a.objective == "minv") {
      const SearchReport s = searcher.min_vertices(t, a.n_budget);
      result.record.outputs = SearchJson(s);
      claims.push_back(ClaimEntry("min-vertices", "predicted",
                                  predicted_min_vertices(t), s.value, true,
                                  &result.exit));
    } else {
      const SearchReport s = searcher.min_edges(t, a.edge_budget);
      result.record.outputs = SearchJson(s);
      claims.push_back(ClaimEntry("lowerbound", "floor", proven_edge_floor(t),
                                  s.value, false, &result.exit));
      if (auto exact = ExactEdgeCount(t)) {
        claims.push_back(ClaimEntry("min-edges", "predicted", *exact, s.value,
                                    true, &result.exit));
      }
    }
    result.record.provenance["claims"] = claims;
  };
  return c;
}

Command PlanCensus(int n, const RunConfig& cfg) {
  if (n < 1 || n > kConnectedEnvelope) {
    throw InputError("census order must satisfy 1 <= n <= " +
                     std::to_string(kConnectedEnvelope));
  }
  Command c;
  c.name = "census";
  c.cacheable = true;
  c.arguments = {std::to_string(n)};
  cfg.append_normal(c.arguments);
  c.inputs = {{"n", n}, {"budget", cfg.budget_json()},
              {"witnesses", cfg.witnesses}};
  c.run = [n, cfg](Outcome2& result) {
    Searcher searcher(cfg.search_options());
    Json rows = Json::array();
    std::uint64_t classes = 0;
    for (const CensusRow& row : searcher.census(n)) {
      classes += row.count;
      rows.push_back({{"n", row.n},
                      {"p", row.triple.p},
                      {"q", row.triple.q},
                      {"r", row.triple.r},
                      {"count", row.count},
                      {"min_edges", row.min_edges},
                      {"witnesses", row.witnesses}});
    }
    const std::uint64_t triples = rows.size();
    result.record.outputs["rows"] = std::move(rows);
    result.record.outputs["summary"] = {{"graphs", searcher.graphs_scanned()},
                                        {"graphs_with_edges", classes},
                                        {"triples", triples}};
  };
  return c;
}

struct VerifyArgs {
  std::vector<std::string> scopes;
  int r_max = 4;
  int n_max = 8;
  int edge_r_max = 4;
  int pair_r_max = 3;
  int q_max = 7;
  int p_max = 4;
  int bound_r_max = 8;
  int certify_r_max = 3;
  int conditional_p_max = 3;
};

ClaimCheck ConditionalCheck(const ConditionalRow& row) {
  ClaimCheck c;
  c.claim = "conditional";
  c.instance = InvariantTriple{row.p, row.p + 1, row.p + 1}.to_string();
  c.expected = "min|E| = " + std::to_string(row.bound) +
               " if every tree has ind-match = min-match";
  c.bound = row.bound;
  if (!row.search.value) {
    c.observed = "inconclusive: " + row.search.note;
    c.outcome = Outcome::kInconclusive;
    return c;
  }
  c.certified_min = *row.search.value;
  c.observed = "min|E| = " + std::to_string(*row.search.value) + " (" +
               row.verdict + ")";
  if (*row.search.value < row.floor) {
    c.outcome = Outcome::kFail;
    c.counterexample = row.search.witnesses.front();
  } else if (row.verdict == "supports") {
    c.outcome = Outcome::kPass;
  } else {
    c.outcome = Outcome::kInconclusive;
    if (!row.search.witnesses.empty()) {
      c.counterexample = row.search.witnesses.front();
    }
  }
  return c;
}

Command PlanVerify(const VerifyArgs& a, const RunConfig& cfg) {
  std::vector<std::string> known = verify_claim_ids();
  known.push_back("bounds");
  known.push_back("conditional");
  for (const auto& s : a.scopes) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw InputError("unknown scope '" + s + "' (" + list + ")");
    }
  }
  for (int v : {a.r_max, a.n_max, a.edge_r_max, a.pair_r_max, a.q_max,
                a.p_max, a.bound_r_max, a.certify_r_max, a.conditional_p_max}) {
    if (v < 1) throw InputError("verify limits must be positive");
  }
  if (a.n_max > kConnectedEnvelope) {
    throw InputError("--n-max must be <= " + std::to_string(kConnectedEnvelope));
  }
  std::vector<std::string> ordered;
  for (const auto& k : known) {
    if (a.scopes.empty() ||
        std::find(a.scopes.begin(), a.scopes.end(), k) != a.scopes.end()) {
      ordered.push_back(k);
    }
  }
  Command c;
  c.name = "verify";
  c.cacheable = true;
  c.arguments = ordered;
  const std::vector<std::pair<const char*, int>> limits = {
      {"r_max", a.r_max},       {"n_max", a.n_max},
      {"edge_r_max", a.edge_r_max}, {"pair_r_max", a.pair_r_max},
      {"q_max", a.q_max},       {"p_max", a.p_max},
      {"bound_r_max", a.bound_r_max}, {"certify_r_max", a.certify_r_max},
      {"conditional_p_max", a.conditional_p_max}};
  c.inputs = {{"scopes", ordered}};
  for (const auto& [key, v] : limits) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    c.arguments.push_back(flag + "=" + std::to_string(v));
    c.inputs[key] = v;
  }
  cfg.append_normal(c.arguments);
  c.inputs["budget"] = cfg.budget_json();
  c.run = [a, ordered, cfg](Outcome2& result) {
    auto has = [&](const std::string& s) {
      return std::find(ordered.begin(), ordered.end(), s) != ordered.end();
    };
    Searcher searcher(cfg.search_options());
    VerificationReport report;
    VerifyScope vs;
    for (const auto& s : ordered) {
      if (s != "bounds" && s != "conditional") vs.claims.push_back(s);
    }
    vs.r_max = a.r_max;
    vs.n_max = a.n_max;
    vs.edge_r_max = a.edge_r_max;
    vs.pair_r_max = a.pair_r_max;
    if (!vs.claims.empty()) report = searcher.verify_theorems(vs);
    if (has("bounds")) {
      BoundScope bs;
      bs.q_max = a.q_max;
      bs.p_max = a.p_max;
      bs.r_max = a.bound_r_max;
      bs.certify_r_max = a.certify_r_max;
      for (auto& check : searcher.check_upper_bounds(bs).checks) {
        report.add(std::move(check));
      }
    }
    if (has("conditional")) {
      for (const ConditionalRow& row :
           searcher.conditional_theorem42_check(a.conditional_p_max).rows) {
        report.add(ConditionalCheck(row));
      }
    }
    Json checks = Json::array();
    Json claims = Json::array();
    for (const auto& check : report.checks) {
      checks.push_back(CheckJson(check));
      if (claims.empty() || claims.back() != check.claim) {
        claims.push_back(check.claim);
      }
    }
    result.record.outputs["checks"] = checks;
    result.record.outputs["summary"] = {{"passed", report.passed},
                                        {"failed", report.failed},
                                        {"inconclusive", report.inconclusive}};
    result.record.provenance["claims"] = claims;
    if (report.refuted()) result.exit = kExitRefuted;
  };
  return c;
}

Command PlanTrees(int n_max, const RunConfig& cfg) {
  if (n_max < 1 || n_max > kTreeEnvelope) {
    throw InputError("trees order must satisfy 1 <= n <= " +
                     std::to_string(kTreeEnvelope));
  }
  Command c;
  c.name = "trees";
  c.cacheable = true;
  c.arguments = {std::to_string(n_max)};
  cfg.append_normal(c.arguments);
  c.inputs = {{"n_max", n_max}, {"budget", cfg.budget_json()}};
  c.run = [n_max, cfg](Outcome2& result) {
    Searcher searcher(cfg.search_options());
    const TreeReport t = searcher.tree_conjecture_check(n_max);
    Json& out = result.record.outputs;
    Json orders = Json::array();
    for (const auto& o : t.orders) {
      orders.push_back({{"n", o.n}, {"trees", o.trees}});
    }
    out["orders"] = orders;
    out["total"] = t.total;
    if (t.counterexample_found) {
      out["counterexample"] = {{"graph6", t.counterexample},
                               {"ind_match", t.ind_match},
                               {"min_match", t.min_match}};
      out["verdict"] = "counterexample";
    } else {
      out["counterexample"] = Json();
      out["verdict"] = "no counterexample up to n = " + std::to_string(n_max);
    }
    out["summary"] = {{"trees", t.total}, {"verdict", out["verdict"]}};
    result.record.provenance["claims"] = Json::array({"trees"});
  };
  return c;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matching invariants and extremal graph search", "eml"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  auto* nodes = app.add_option("--budget-nodes", cfg.budget_nodes,
                               "Search-tree node limit per solver call")
                    ->envname("EML_BUDGET_NODES");
  auto* seconds = app.add_option("--budget-seconds", cfg.budget_seconds,
                                 "Wall-clock limit per solver call")
                      ->envname("EML_BUDGET_SECONDS");
  app.add_option("--workers", cfg.workers, "Worker threads")
      ->envname("EML_WORKERS")
      ->check(CLI::Range(1, 1024));
  app.add_option("--format", cfg.format, "json, csv or text")
      ->envname("EML_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache", cfg.cache, "Result cache directory")
      ->envname("EML_CACHE");
  app.add_option("--witnesses", cfg.witnesses, "Witnesses kept per result")
      ->envname("EML_WITNESSES")
      ->check(CLI::Range(0, 1000));

  std::string source = "-";
  auto* inv = app.add_subcommand("invariants", "Invariants of graph6 lines");
  inv->add_option("input", source, "graph6 file, or - for stdin");

  std::string family;
  std::vector<std::string> params;
  auto* con = app.add_subcommand("construct", "Build a named family member");
  con->add_option("family", family)->required();
  con->add_option("params", params, "key=value parameters");

  std::vector<std::string> parts;
  auto* com = app.add_subcommand("compose", "Star join of parts");
  com->add_option("parts", parts, "<graph6>@<vertex>:<a|b>")->required();

  SearchArgs sa;
  auto* sea = app.add_subcommand("search", "min |V| or min |E| for (p,q,r)");
  sea->add_option("objective", sa.objective, "minv or mine")->required();
  sea->add_option("p", sa.p)->required();
  sea->add_option("q", sa.q)->required();
  sea->add_option("r", sa.r)->required();
  sea->add_option("--n-budget", sa.n_budget, "Largest order scanned (minv)");
  sea->add_option("--edge-budget", sa.edge_budget, "Largest edge count (mine)");
  sea->add_flag("--trust-floors", sa.trust_floors,
                "Stop once the proven edge floor is met");

  int census_n = 0;
  auto* cen = app.add_subcommand("census", "Triples realised at order n");
  cen->add_option("n", census_n)->required();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Check the extremal claims on small orders");
  ver->add_option("scopes", va.scopes, "Claims to check (default all)");
  ver->add_option("--r-max,--rmax", va.r_max);
  ver->add_option("--n-max,--nmax", va.n_max);
  ver->add_option("--edge-r-max", va.edge_r_max);
  ver->add_option("--pair-r-max", va.pair_r_max);
  ver->add_option("--q-max", va.q_max);
  ver->add_option("--p-max", va.p_max);
  ver->add_option("--bound-r-max", va.bound_r_max);
  ver->add_option("--certify-r-max", va.certify_r_max);
  ver->add_option("--conditional-p-max", va.conditional_p_max);

  int trees_n = 0;
  auto* tre = app.add_subcommand("trees", "ind-match = min-match on all trees");
  tre->add_option("n_max", trees_n)->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  cfg.has_budget_nodes = nodes->count() > 0;
  cfg.has_budget_seconds = seconds->count() > 0;

  try {
    const Format format = ParseFormat(cfg.format);
    cfg.budget();
    Command command;
    if (inv->parsed()) {
      command = PlanInvariants(source, in, cfg);
    } else if (con->parsed()) {
      command = PlanConstruct(family, params, cfg);
    } else if (com->parsed()) {
      command = PlanCompose(parts, cfg);
    } else if (sea->parsed()) {
      command = PlanSearch(sa, cfg);
    } else if (cen->parsed()) {
      command = PlanCensus(census_n, cfg);
    } else if (ver->parsed()) {
      command = PlanVerify(va, cfg);
    } else {
      command = PlanTrees(trees_n, cfg);
    }

    std::optional<ResultCache> cache;
    if (command.cacheable && !cfg.cache.empty()) {
      cache.emplace(cfg.cache, kCodeVersion, &err);
      if (auto hit = cache->get(command.normal_form())) {
        int exit = kExitOk;
        if (hit->outputs.contains("exit_code")) {
          exit = hit->outputs.at("exit_code").get<int>();
          hit->outputs.erase("exit_code");
        }
        out << Render(*hit, format);
        return exit;
      }
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome2 result;
    result.record.command = command.name;
    result.record.arguments = command.arguments;
    result.record.inputs = command.inputs;
    command.run(result);
    result.record.provenance["code_version"] = kCodeVersion;
    result.record.timing["elapsed_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (cache) {
      ResultRecord stored = result.record;
      stored.outputs["exit_code"] = result.exit;
      cache->put(command.normal_form(), stored);
    }
    out << Render(result.record, format);
    return result.exit;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (optimum in [" << e.lower_bound() << ", "
        << e.upper_bound() << "])\n";
    return kExitBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace eml::cli
