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

#ifndef POLYDECOMP_JSON_IO_H_
#define POLYDECOMP_JSON_IO_H_

#include "json.hpp"
#include "polydecomp/decompose.h"
#include "polydecomp/polynomial.h"

namespace polydecomp {

using Json = nlohmann::ordered_json;

// {"coeffs": ["num/den", ...]} ascending; integers render without "/1".
Json to_json(const Polynomial& p);
Json to_json(const Rational& r);
// {"target": poly, "factors": [poly, ...]}
Json to_json(const Decomposition& d);

// Accepts coefficient strings or JSON integers. Throws DomainError on any
// other shape.
Polynomial polynomial_from_json(const Json& j);
// The target is recomputed from the factors when absent.
Decomposition decomposition_from_json(const Json& j);

}  // namespace polydecomp

#endif  // POLYDECOMP_JSON_IO_H_
