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

#include "cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace eml::cli {

std::uint64_t Fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string code_version,
                         std::ostream* warnings)
    : dir_(std::move(dir)), version_(std::move(code_version)),
      warnings_(warnings) {}

std::filesystem::path ResultCache::path_for(
    const std::string& normal_form) const {
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.json",
                static_cast<unsigned long long>(
                    Fnv1a64(version_ + "\n" + normal_form)));
  return dir_ / name;
}

std::optional<ResultRecord> ResultCache::get(const std::string& normal_form) {
  const auto path = path_for(normal_form);
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    const Json entry = Json::parse(buffer.str());
    if (entry.at("version").get<std::string>() != version_ ||
        entry.at("key").get<std::string>() != normal_form) {
      return std::nullopt;
    }
    return ResultRecord::from_json(entry.at("record"));
  } catch (const std::exception& e) {
    if (warnings_ != nullptr) {
      *warnings_ << "warning: discarding corrupt cache entry " << path.string()
                 << ": " << e.what() << "\n";
    }
    file.close();
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& normal_form,
                      const ResultRecord& record) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = path_for(normal_form);
  const auto tmp = path.string() + ".tmp";
  Json entry;
  entry["version"] = version_;
  entry["key"] = normal_form;
  entry["record"] = record.to_json();
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) {
      if (warnings_ != nullptr) {
        *warnings_ << "warning: cannot write cache entry " << tmp << "\n";
      }
      return;
    }
    file << entry.dump() << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec && warnings_ != nullptr) {
    *warnings_ << "warning: cannot store cache entry " << path.string() << ": "
               << ec.message() << "\n";
  }
}

}  // namespace eml::cli
