// Copyright 2026 The polydecomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYDECOMP_ERRORS_H_
#define POLYDECOMP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydecomp {

// Precondition violated by the caller: wrong degree, polynomial outside the
// required monoid, decomposable input where an indecomposable one is needed.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed polynomial text. `offset` is the byte offset of the failure.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// The factors handed to a rewrite do not have the shape the rewrite needs.
class PatternMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// A unit the construction needs would have an irrational shift.
class IrrationalRootRequired : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polydecomp

#endif  // POLYDECOMP_ERRORS_H_
