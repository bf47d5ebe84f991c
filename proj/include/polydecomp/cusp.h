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

// The cusp semigroup A = { a : a'(0) = 0 } and its decompositions.

#ifndef POLYDECOMP_CUSP_H_
#define POLYDECOMP_CUSP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polydecomp/decompose.h"
#include "polydecomp/polynomial.h"

namespace polydecomp {

bool in_A(const Polynomial& p);

enum class ABranch {
  kRightInA,       // b is in A
  kCriticalValue,  // b is not in A but a'(b(0)) == 0
  kNeither,
};

struct CompositionInA {
  bool in_a = false;
  ABranch branch = ABranch::kNeither;
};

// Whether a o b lies in A, and which of the two ways makes it so.
CompositionInA compose_in_A_criterion(const Polynomial& a,
                                      const Polynomial& b);

// Rational roots of f': the shifts of the f-admissible units. Throws
// DomainError for constant f.
std::vector<Rational> admissible_shifts(const Polynomial& f);

// Rational t with (chain[0] o ... o chain.back())'(t) == 0, found factor by
// factor without expanding the composite.
std::vector<Rational> chain_critical_points(std::span<const Polynomial> chain);

enum class CuspClass { kC, kD, kNotIrreducibleInA };

const char* to_string(CuspClass c);
const char* to_string(ABranch b);

// Throws DomainError if p is not in A or has degree below 2.
CuspClass classify_CD(const Polynomial& p);

// 1-based positions i of the factor list with p_i'((p_(i+1) o ... )(0)) == 0.
std::vector<std::size_t> zero_positions(std::span<const Polynomial> factors);

std::size_t index_at_zero(const Polynomial& a);

struct CuspReport {
  std::size_t l = 0;
  std::size_t l_a = 0;
  std::size_t index = 0;
  std::size_t defect = 0;
  bool regular = false;
  bool rational_realizable = false;
  Decomposition witness;  // class reaching the index
};

CuspReport cusp_report(const Polynomial& a);

struct ADecomposition {
  std::vector<Polynomial> factors;
  std::vector<CuspClass> kinds;
  std::vector<std::size_t> block_sizes;  // bracketing of the source class
};

struct ADecompositionSet {
  std::vector<ADecomposition> members;  // sorted by length, then coefficients
  std::vector<std::size_t> lengths;     // distinct, ascending
};

// A-decompositions reachable with rational units, from every class and every
// bracketing of it.
ADecompositionSet enumerate_A_decompositions(const Polynomial& a);

struct MaxBase {
  Decomposition base;  // a class whose index position equals the index
  // shift_sets[j] holds the rational roots of base.factors[j]' for
  // j < index - 1.
  std::vector<std::vector<Rational>> shift_sets;
  bool rational_realizable = false;  // no shift set is empty
};

struct MaxSkeleton {
  std::size_t length = 0;  // == index == l_A
  std::vector<MaxBase> bases;
};

MaxSkeleton max_decompositions(const Polynomial& a);

// q_1 = p_1 o u_1, q_j = u_(j-1)^-1 o p_j o u_j, q_i = u_(i-1)^-1 o p_i o ...
// o p_r with u_j = x + shifts[j]. Throws DomainError if a shift is not
// admissible or the count is wrong.
std::vector<Polynomial> instantiate(const MaxBase& base,
                                    std::span<const Rational> shifts);

// Every instantiation of every base, up to `limit` members.
std::vector<std::vector<Polynomial>> max_members(const MaxSkeleton& skeleton,
                                                 std::size_t limit = 4096);

enum class CuspMove { kAdm, kCa, kCb, kCc };

const char* to_string(CuspMove m);

struct CuspMoveResult {
  std::vector<Polynomial> factors;
  bool all_in_A = false;
};

// Rewrites factors at 1-based position pos (and the ones after it). `shift`
// picks the admissible unit the move introduces; by default 0 when it is
// admissible, else the smallest rational choice. Throws PatternMismatch,
// IrrationalRootRequired, or DomainError for an out-of-range position.
CuspMoveResult apply_cusp_move(std::span<const Polynomial> factors,
                               std::size_t pos, CuspMove kind,
                               const std::optional<Rational>& shift = {});

// Inverse of an Adm move with unit x + shift at pos: p_pos o u^-1,
// u o p_(pos+1). No admissibility requirement.
std::vector<Polynomial> undo_adm(std::span<const Polynomial> factors,
                                 std::size_t pos, const Rational& shift);

}  // namespace polydecomp

#endif  // POLYDECOMP_CUSP_H_
