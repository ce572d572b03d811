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

#ifndef EML_TOOLS_CACHE_HPP_
#define EML_TOOLS_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "record.hpp"

namespace eml::cli {

std::uint64_t Fnv1a64(const std::string& text);

// Content-addressed store of ResultRecords under one directory. The key is
// the normalised command plus the code version, so a version bump misses.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string code_version,
              std::ostream* warnings);

  std::optional<ResultRecord> get(const std::string& normal_form);
  void put(const std::string& normal_form, const ResultRecord& record);

  std::filesystem::path path_for(const std::string& normal_form) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::ostream* warnings_;
};

}  // namespace eml::cli

#endif  // EML_TOOLS_CACHE_HPP_
