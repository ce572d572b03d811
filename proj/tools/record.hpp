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

#ifndef EML_TOOLS_RECORD_HPP_
#define EML_TOOLS_RECORD_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace eml::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// One command's persisted result. Every field but `timing` is a pure
// function of the normalised command, so two runs differ only there.
struct ResultRecord {
  int schema_version = kSchemaVersion;
  std::string command;
  std::vector<std::string> arguments;  // normal form, see cache.hpp
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json provenance = Json::object();
  Json timing = Json::object();

  Json to_json() const;
  // Throws InputError on a missing or mistyped field.
  static ResultRecord from_json(const Json& j);
};

enum class Format { kJson, kCsv, kText };

Format ParseFormat(const std::string& name);

// Renders `record` for stdout. CSV and text layouts depend on the command.
std::string Render(const ResultRecord& record, Format format);

std::string CsvField(const std::string& s);

}  // namespace eml::cli

#endif  // EML_TOOLS_RECORD_HPP_
