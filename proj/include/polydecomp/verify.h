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

// Seeded invariant suites run by `polydecomp verify`.

#ifndef POLYDECOMP_VERIFY_H_
#define POLYDECOMP_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polydecomp/json_io.h"

namespace polydecomp {

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;  // checks attempted
  std::uint64_t seed = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, for diagnostics
};

// Names accepted by run_suites besides "all".
const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". Throws DomainError for an
// unknown name.
std::vector<SuiteReport> run_suites(const std::string& name,
                                    std::size_t trials, std::uint64_t seed);

Json to_json(const SuiteReport& r);

}  // namespace polydecomp

#endif  // POLYDECOMP_VERIFY_H_
