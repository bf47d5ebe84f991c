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

#ifndef POLYDECOMP_CLI_H_
#define POLYDECOMP_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace polydecomp {

enum ExitCode {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitIrrational = 3,
};

// Runs the command line `args` (without the program name). JSON or text
// results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace polydecomp

#endif  // POLYDECOMP_CLI_H_
