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

#ifndef POLYDECOMP_CHEBYSHEV_H_
#define POLYDECOMP_CHEBYSHEV_H_

#include <vector>

#include "polydecomp/polynomial.h"

namespace polydecomp {

// T_1 = x, T_2 = 2x^2 - 1, T_n = 2x T_(n-1) - T_(n-2). Throws DomainError for
// n == 0.
Polynomial chebyshev(unsigned n);

// For odd p returns t with p == x t(x^2). Throws DomainError when p is zero
// or has an even-exponent term.
Polynomial extract_odd_base(const Polynomial& p);

struct ReductionIdentityCheck {
  unsigned n = 0;
  // T_2 o T_n == al o [x t_n^2] o al^-1 o T_2
  bool composed_with_t2 = false;
  // T_n == al o [x t_n^2] o al^-1
  bool conjugated = false;
};

// Checks both degree-2 reduction identities, al = 2x - 1, for odd n in
// [3, max_n].
std::vector<ReductionIdentityCheck> chebyshev_reduction_identities(
    unsigned max_n = 15);

}  // namespace polydecomp

#endif  // POLYDECOMP_CHEBYSHEV_H_
