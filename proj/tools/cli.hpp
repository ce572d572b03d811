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

#ifndef EML_TOOLS_CLI_HPP_
#define EML_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace eml::cli {

#ifndef EML_VERSION
#define EML_VERSION "dev"
#endif
inline constexpr const char* kCodeVersion = EML_VERSION;

enum ExitCode {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitInternal = 4,
};

// Runs one command line. `in` feeds `invariants` when it reads stdin.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace eml::cli

#endif  // EML_TOOLS_CLI_HPP_
