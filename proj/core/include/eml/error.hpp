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

#ifndef EML_ERROR_HPP_
#define EML_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eml {

// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 text. `offset` is the byte position of the fault.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A result would exceed the 64-vertex cap (or another fixed capacity).
class CapacityError : public InputError {
 public:
  using InputError::InputError;
};

// A documented precondition of an operation does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A solver result contradicts a proven identity. Always a bug.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A solver ran out of its node or time budget. Carries the interval the
// optimum is known to lie in when the search stopped.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int lower_bound, int upper_bound)
      : std::runtime_error(what),
        lower_bound_(lower_bound),
        upper_bound_(upper_bound) {}
  int lower_bound() const { return lower_bound_; }
  int upper_bound() const { return upper_bound_; }

 private:
  int lower_bound_;
  int upper_bound_;
};

}  // namespace eml

#endif  // EML_ERROR_HPP_
