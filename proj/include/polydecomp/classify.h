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

#ifndef POLYDECOMP_CLASSIFY_H_
#define POLYDECOMP_CLASSIFY_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polydecomp/polynomial.h"

namespace polydecomp {

enum class ShapeTag { P, Q, R, Undetermined };

enum class QVariant {
  kPowerInside,   // x^s g(x^l)
  kPowerOutside,  // x^s g^l
};

// p == left o core o right, core = x^s g(x^l) or x^s g^l, g(0) != 0.
struct QWitness {
  QVariant variant;
  unsigned l = 0;
  unsigned s = 0;
  Polynomial g;
  Unit left = Unit::identity();
  Unit right = Unit::identity();
};

struct ShapeClass {
  ShapeTag tag = ShapeTag::R;
  // P: p == left o x^l o (x - center).
  unsigned l = 0;
  Rational center;
  Unit left = Unit::identity();
  // Q: every witness found, power-inside first, smaller primes first.
  std::vector<QWitness> witnesses;
};

// The P test alone: p == a (x - c)^n + b with n == deg p prime.
std::optional<ShapeClass> p_shape(const Polynomial& p);
// The Q tests alone. Sets `irrational_candidate` when a critical value of high
// enough multiplicity is not rational, so that absence of a witness is not
// certified over the rationals.
std::vector<QWitness> q_shapes(const Polynomial& p, bool& irrational_candidate);

const char* to_string(ShapeTag tag);
const char* to_string(QVariant variant);

// Throws DomainError for degree < 2 or a decomposable p.
ShapeClass classify_shape(const Polynomial& p);
// Classification without the indecomposability check; callers that already
// hold a complete decomposition use this.
ShapeClass classify_indecomposable(const Polynomial& p);

Polynomial witness_core(const QWitness& w);
Polynomial reconstruct(const QWitness& w);
// Recomposes a P or Q classification; throws DomainError for R/Undetermined.
Polynomial reconstruct(const ShapeClass& c);

struct RittInvariants {
  std::size_t n_p = 0;
  std::size_t n_q = 0;
  std::size_t n_r = 0;
  std::size_t n_undetermined = 0;
  std::map<unsigned, std::size_t> n_p_by_prime;

  friend bool operator==(const RittInvariants&,
                         const RittInvariants&) = default;
};

RittInvariants invariants_of(std::span<const Polynomial> factors);
RittInvariants ritt_invariants(const Polynomial& a);

}  // namespace polydecomp

#endif  // POLYDECOMP_CLASSIFY_H_
