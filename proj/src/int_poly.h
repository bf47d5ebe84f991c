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

// Integer-coefficient kernels behind the rational polynomial type. A rational
// polynomial is carried as integer numerators over one common denominator so
// that products and compositions never pay for per-coefficient gcds.

#ifndef POLYDECOMP_SRC_INT_POLY_H_
#define POLYDECOMP_SRC_INT_POLY_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "polydecomp/polynomial.h"

namespace polydecomp::detail {

using ZVec = std::vector<mpz_class>;

struct IntPoly {
  ZVec num;            // ascending, may be empty for zero
  mpz_class den = 1;   // positive
};

IntPoly to_int_poly(const Polynomial& p);
Polynomial from_int_poly(const ZVec& num, const mpz_class& den);

// Plain integer product. Switches to Kronecker substitution for long inputs.
ZVec multiply(const ZVec& a, const ZVec& b);

// Residues modulo a fixed 61-bit prime, used to reject candidates cheaply.
inline constexpr std::uint64_t kModPrime = 2305843009213693951ULL;  // 2^61-1

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_inv(std::uint64_t a);
// Empty when a denominator vanishes modulo the prime.
std::optional<std::uint64_t> mod_reduce(const Rational& r);
std::optional<std::vector<std::uint64_t>> mod_reduce(const Polynomial& p);

}  // namespace polydecomp::detail

#endif  // POLYDECOMP_SRC_INT_POLY_H_
