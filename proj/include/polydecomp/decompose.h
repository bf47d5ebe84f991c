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

#ifndef POLYDECOMP_DECOMPOSE_H_
#define POLYDECOMP_DECOMPOSE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polydecomp/polynomial.h"

namespace polydecomp {

// target == factors[0] o factors[1] o ... o factors.back().
struct Decomposition {
  Polynomial target;
  std::vector<Polynomial> factors;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// A class of decompositions modulo unit insertions, held by its canonical
// representative.
using DecompositionClass = Decomposition;

// If a = g o h with deg h == d, returns (g, h) with h monic and h(0) == 0.
// Requires deg a >= 2 and d a proper divisor of deg a (DomainError otherwise).
std::optional<std::pair<Polynomial, Polynomial>> right_factor(
    const Polynomial& a, std::size_t d);

bool is_indecomposable(const Polynomial& a);

// Strips the smallest-degree right factor repeatedly. The result is canonical.
Decomposition complete_decomposition(const Polynomial& a);

// Moves units leftwards until every factor but the first is monic with zero
// constant term. The composite is unchanged.
std::vector<Polynomial> canonicalize(std::vector<Polynomial> factors);

std::vector<std::size_t> degree_sequence(std::span<const Polynomial> factors);

// Total order used to sort classes: degree sequence, then coefficients.
bool class_less(const Decomposition& a, const Decomposition& b);

// Every class of complete decompositions, sorted by class_less.
std::vector<DecompositionClass> enumerate_classes(const Polynomial& a);
// Same search started from a known complete decomposition.
std::vector<DecompositionClass> enumerate_classes_from(const Decomposition& d);

struct Ritt1Report {
  std::size_t class_count = 0;
  std::size_t length = 0;
  std::vector<std::size_t> degree_multiset;  // sorted ascending
  bool pass = false;
};

Ritt1Report ritt1_check(const Polynomial& a);
Ritt1Report ritt1_check(std::span<const DecompositionClass> classes);

struct CommonComposite {
  Polynomial c;      // monic, c(0) == 0
  Polynomial alpha;  // c == alpha o a
  Polynomial beta;   // c == beta o b
};

// Solves alpha o a == beta o b at degree lcm(deg a, deg b). Throws DomainError
// when the lcm exceeds degree_bound or a degree is below 2.
std::optional<CommonComposite> common_composite(const Polynomial& a,
                                                const Polynomial& b,
                                                std::size_t degree_bound);

}  // namespace polydecomp

#endif  // POLYDECOMP_DECOMPOSE_H_
