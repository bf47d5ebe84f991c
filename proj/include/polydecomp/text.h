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

#ifndef POLYDECOMP_TEXT_H_
#define POLYDECOMP_TEXT_H_

#include <string>
#include <string_view>

#include "polydecomp/polynomial.h"

namespace polydecomp {

// Reads expressions such as "4*x^3 - 3*x" or "1/2x + 1". Throws ParseError
// carrying the byte offset of the first offending character.
Polynomial parse(std::string_view text);

// Descending powers, "c*x^k" terms joined by " + " / " - "; the zero
// polynomial prints as "0". parse(format(p)) == p.
std::string format(const Polynomial& p);

}  // namespace polydecomp

#endif  // POLYDECOMP_TEXT_H_
