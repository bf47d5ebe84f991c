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

#ifndef POLYDECOMP_ODD_MONOID_H_
#define POLYDECOMP_ODD_MONOID_H_

#include <optional>
#include <utility>
#include <vector>

#include "polydecomp/decompose.h"
#include "polydecomp/polynomial.h"

namespace polydecomp {

// Every even-exponent coefficient is zero (so 0 is odd).
bool is_odd(const Polynomial& p);

// For odd g o h: if the even part of h is a constant c, returns
// (g o (x + c), h - c), both odd; otherwise nothing. Throws DomainError when
// g o h is not odd or a degree is below 2.
std::optional<std::pair<Polynomial, Polynomial>> adjust_to_odd(
    const Polynomial& g, const Polynomial& h);

// Classes of complete decompositions of odd a into odd indecomposables.
// Throws DomainError if a is not odd or has degree below 2.
std::vector<Decomposition> decompose_in_O(const Polynomial& a);

bool is_irreducible_in_O(const Polynomial& a);

enum class OddSwapKind {
  kChebyshev,   // (T_n, T_m) -> (T_m, T_n)
  kPowerLeft,   // (x^t al(x^2)^s, x^s) -> (x^s, x^t al(x^(2s)))
  kPowerRight,  // (x^s, x^t al(x^(2s))) -> (x^t al(x^2)^s, x^s)
};

struct OddSwap {
  OddSwapKind kind;
  unsigned s = 0;
  unsigned t = 0;
  Polynomial alpha;  // normalized to alpha(0) == 1
  unsigned n = 0;    // Chebyshev: degree of p
  unsigned m = 0;    // Chebyshev: degree of q
};

const char* to_string(OddSwapKind kind);

// Identifies which odd swap pattern turns (p, q) into (p*, q*). Throws
// DomainError if the composites differ, the inputs are not odd, or the pairs
// are unit-equivalent; PatternMismatch if no pattern fits.
OddSwap classify_odd_swap(const Polynomial& p, const Polynomial& q,
                          const Polynomial& p_star, const Polynomial& q_star);

}  // namespace polydecomp

#endif  // POLYDECOMP_ODD_MONOID_H_
