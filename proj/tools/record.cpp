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

#include "record.hpp"

#include <iomanip>
#include <sstream>
#include <string>

#include "eml/error.hpp"

namespace eml::cli {

Json ResultRecord::to_json() const {
  Json j;
  j["schema_version"] = schema_version;
  j["command"] = {{"name", command}, {"arguments", arguments}};
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["provenance"] = provenance;
  j["timing"] = timing;
  return j;
}

ResultRecord ResultRecord::from_json(const Json& j) {
  try {
    ResultRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
      throw InputError("unsupported schema_version " +
                       std::to_string(r.schema_version));
    }
    r.command = j.at("command").at("name").get<std::string>();
    r.arguments =
        j.at("command").at("arguments").get<std::vector<std::string>>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    r.provenance = j.at("provenance");
    r.timing = j.at("timing");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed result record: ") + e.what());
  }
}

Format ParseFormat(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw InputError("unknown format '" + name + "' (json, csv, text)");
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string Scalar(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string Joined(const Json& list) {
  std::string out;
  for (const auto& item : list) {
    if (!out.empty()) out += ' ';
    out += Scalar(item);
  }
  return out;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) {
    rows_.push_back(std::move(header));
  }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string csv() const {
    std::string out;
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ',';
        out += CsvField(row[i]);
      }
      out += '\n';
    }
    return out;
  }

  std::string text() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    std::ostringstream out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string cell = row[i];
        if (i + 1 < row.size()) cell.resize(width[i], ' ');
        line += cell;
        if (i + 1 < row.size()) line += "  ";
      }
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string TripleText(const Json& t) {
  return "(" + Scalar(t.at("p")) + "," + Scalar(t.at("q")) + "," +
         Scalar(t.at("r")) + ")";
}

Table CensusTable(const Json& outputs) {
  Table t({"n", "p", "q", "r", "count", "min_edges"});
  for (const auto& row : outputs.at("rows")) {
    t.add({Scalar(row.at("n")), Scalar(row.at("p")), Scalar(row.at("q")),
           Scalar(row.at("r")), Scalar(row.at("count")),
           Scalar(row.at("min_edges"))});
  }
  return t;
}

Table SearchTable(const Json& outputs) {
  Table t({"objective", "p", "q", "r", "status", "value", "lower_bound",
           "upper_bound", "budget", "witnesses"});
  const Json& target = outputs.at("target");
  t.add({Scalar(outputs.at("objective")), Scalar(target.at("p")),
         Scalar(target.at("q")), Scalar(target.at("r")),
         Scalar(outputs.at("status")), Scalar(outputs.at("value")),
         Scalar(outputs.at("lower_bound")), Scalar(outputs.at("upper_bound")),
         Scalar(outputs.at("budget")), Joined(outputs.at("witnesses"))});
  return t;
}

Table VerifyTable(const Json& outputs) {
  Table t({"claim", "instance", "expected", "observed", "outcome",
           "counterexample"});
  for (const auto& c : outputs.at("checks")) {
    t.add({Scalar(c.at("claim")), Scalar(c.at("instance")),
           Scalar(c.at("expected")), Scalar(c.at("observed")),
           Scalar(c.at("outcome")), Scalar(c.at("counterexample"))});
  }
  return t;
}

Table TreesTable(const Json& outputs) {
  Table t({"n", "trees", "counterexample"});
  const Json& cex = outputs.at("counterexample");
  const auto& orders = outputs.at("orders");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const bool last = i + 1 == orders.size();
    t.add({Scalar(orders[i].at("n")), Scalar(orders[i].at("trees")),
           last && !cex.is_null() ? Scalar(cex.at("graph6")) : ""});
  }
  return t;
}

Table InvariantsTable(const Json& outputs) {
  Table t({"line", "graph6", "n", "m", "p", "q", "r", "alpha",
           "perfect_matching", "error"});
  for (const auto& g : outputs.at("graphs")) {
    if (g.contains("error")) {
      t.add({Scalar(g.at("line")), Scalar(g.value("graph6", Json())), "", "",
             "", "", "", "", "", Scalar(g.at("error"))});
      continue;
    }
    const Json& tr = g.at("triple");
    t.add({Scalar(g.at("line")), Scalar(g.at("graph6")), Scalar(g.at("n")),
           Scalar(g.at("m")), Scalar(tr.at("p")), Scalar(tr.at("q")),
           Scalar(tr.at("r")), Scalar(g.at("alpha")),
           Scalar(g.at("perfect_matching")), ""});
  }
  return t;
}

Table FieldTable(const Json& outputs) {
  Table t({"field", "value"});
  for (const auto& [key, value] : outputs.items()) {
    if (value.is_object() && value.contains("p") && value.contains("r")) {
      t.add({key, TripleText(value)});
    } else {
      t.add({key, value.is_array() || value.is_object() ? value.dump()
                                                          : Scalar(value)});
    }
  }
  return t;
}

Table TableFor(const ResultRecord& r) {
  if (r.command == "census") return CensusTable(r.outputs);
  if (r.command == "search") return SearchTable(r.outputs);
  if (r.command == "verify") return VerifyTable(r.outputs);
  if (r.command == "trees") return TreesTable(r.outputs);
  if (r.command == "invariants") return InvariantsTable(r.outputs);
  return FieldTable(r.outputs);
}

}  // namespace

std::string Render(const ResultRecord& record, Format format) {
  switch (format) {
    case Format::kJson:
      return record.to_json().dump(2) + "\n";
    case Format::kCsv:
      return TableFor(record).csv();
    case Format::kText: {
      std::string out = "# eml " + record.command;
      for (const auto& a : record.arguments) out += " " + a;
      out += "\n" + TableFor(record).text();
      if (record.outputs.contains("summary")) {
        out += "summary: " + record.outputs.at("summary").dump() + "\n";
      }
      return out;
    }
  }
  return {};
}

}  // namespace eml::cli
