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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracle.h"
#include "polydecomp/chebyshev.h"
#include "polydecomp/corpus.h"
#include "polydecomp/cusp.h"
#include "polydecomp/decompose.h"
#include "polydecomp/errors.h"
#include "polydecomp/text.h"

using namespace polydecomp;

namespace {

Polynomial P(const char* text) { return parse(text); }

using Chain = std::vector<Polynomial>;

std::vector<std::size_t> sorted_degrees(const Chain& f) {
  auto d = degree_sequence(f);
  std::sort(d.begin(), d.end());
  return d;
}

bool all_in_A(const Chain& f) {
  return std::all_of(f.begin(), f.end(), [](const Polynomial& p) { return in_A(p); });
}

// Longest bracketing of any class whose blocks can all be moved into A with
// rational shifts. Works on expanded blocks and oracle derivatives only.
std::size_t bracket_search_length(const Polynomial& a) {
  std::size_t best = 0;
  for (const Decomposition& cls : enumerate_classes(a)) {
    const std::size_t r = cls.factors.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (r - 1)); ++mask) {
      Chain blocks;
      Polynomial cur = cls.factors[0];
      for (std::size_t j = 1; j < r; ++j) {
        if (mask & (std::size_t{1} << (j - 1))) {
          blocks.push_back(cur);
          cur = cls.factors[j];
        } else {
          cur = compose(cur, cls.factors[j]);
        }
      }
      blocks.push_back(cur);
      // Last block must already have zero slope at 0; earlier blocks need a
      // rational critical point.
      bool ok = oracle::evaluate(oracle::derivative(oracle::of(blocks.back())), 0) == 0;
      for (std::size_t b = 0; ok && b + 1 < blocks.size(); ++b) {
        ok = !rational_roots(oracle::to_poly(oracle::derivative(oracle::of(blocks[b]))))
                  .empty();
      }
      if (ok) best = std::max(best, blocks.size());
    }
  }
  return best;
}

const Polynomial kCusp8 = parse("x^8 + 2*x^6 + x^4");

Polynomial degree70() {
  return compose_chain(Chain{P("x^2"), P("x^5 + x^3"), P("x^7 + x")});
}

// x^2 o x^3 (x^2 + 1) o (x^7 + x^4 + x): the last factor has slope 1 at 0
// and no class ends in a factor that lies in A.
Polynomial irregular_instance() {
  return compose_chain(Chain{P("x^2"), P("x^5 + x^3"), P("x^7 + x^4 + x")});
}

}  // namespace

TEST_CASE("membership in A") {
  CHECK(in_A(P("x^2 + 1")));
  CHECK(!in_A(P("x^2 + x")));
  CHECK(in_A(Polynomial::constant(3)));
  CHECK(in_A(Polynomial()));
}

TEST_CASE("composition criterion branches") {
  const CompositionInA a = compose_in_A_criterion(P("x^2"), P("x^2 + x"));
  CHECK(a.in_a);
  CHECK(a.branch == ABranch::kCriticalValue);
  const CompositionInA b = compose_in_A_criterion(P("x^3 + x"), P("x^2 + 1"));
  CHECK(b.in_a);
  CHECK(b.branch == ABranch::kRightInA);
  const CompositionInA c = compose_in_A_criterion(P("x^2"), P("x + 1"));
  CHECK(!c.in_a);
  CHECK(c.branch == ABranch::kNeither);
}

TEST_CASE("composition criterion matches direct evaluation on 500 pairs") {
  CorpusRng rng(97);
  for (int i = 0; i < 500; ++i) {
    const Polynomial a = random_polynomial(rng, 1, 5);
    Polynomial b = random_polynomial(rng, 1, 5);
    if (i % 3 == 0) b = b - Polynomial::monomial(b.coeff(1), 1);
    if (i % 3 == 1) {
      // Land b(0) on a critical point of a when there is a rational one.
      const auto roots = rational_roots(oracle::to_poly(oracle::derivative(oracle::of(a))));
      if (!roots.empty() && !a.is_constant()) {
        b = b - Polynomial::constant(b.coeff(0) - roots.front());
      }
    }
    const bool direct = oracle::derivative(oracle::of(compose(a, b))).empty() ||
                        oracle::derivative(oracle::of(compose(a, b)))[0] == 0;
    const bool expected =
        in_A(b) || oracle::evaluate(oracle::derivative(oracle::of(a)),
                                    oracle::evaluate(oracle::of(b), 0)) == 0;
    REQUIRE(direct == expected);
    const CompositionInA got = compose_in_A_criterion(a, b);
    REQUIRE(got.in_a == direct);
    REQUIRE((got.branch == ABranch::kNeither) == !direct);
  }
}

TEST_CASE("admissible shifts") {
  CHECK(admissible_shifts(P("x^3 - 3*x")) == std::vector<Rational>{-1, 1});
  CHECK(admissible_shifts(P("x^2")) == std::vector<Rational>{0});
  CHECK(admissible_shifts(P("x^3 + 3*x")).empty());
  CHECK_THROWS_AS(admissible_shifts(P("5")), DomainError);
}

TEST_CASE("critical points of a chain without expanding it") {
  const Chain chain = {P("x^2 - 2*x"), P("x^3 - 3*x"), P("x + 2")};
  const Polynomial whole = compose_chain(chain);
  auto want = rational_roots(derivative(whole));
  CHECK(chain_critical_points(chain) == want);
}

TEST_CASE("C and D classes") {
  CHECK(classify_CD(P("x^2")) == CuspClass::kC);
  CHECK(classify_CD(P("x^4 + 2*x^3 + x^2")) == CuspClass::kD);
  CHECK(classify_CD(kCusp8) == CuspClass::kNotIrreducibleInA);
  CHECK_THROWS_AS(classify_CD(P("x^2 + x")), DomainError);
  CHECK_THROWS_AS(classify_CD(P("1")), DomainError);
}

TEST_CASE("index at zero") {
  CHECK(index_at_zero(kCusp8) == 3);
  CHECK(index_at_zero(P("x^2 + 1")) == 1);
  CHECK_THROWS_AS(index_at_zero(P("x^2 + x")), DomainError);
}

TEST_CASE("the degree-70 composite reaches position 3 through a swapped class") {
  // x (x^6 + 1) == x h(x^2) with h = x^3 + 1, so the power swap moves x^2 to
  // the right end: x^2 o (x^5 + x^3) o (x^7 + x) ==
  // (x^5 + 2x^4 + x^3) o (x^7 + 2x^4 + x) o x^2, and the last factor has
  // slope 0 at 0.
  const Polynomial a = degree70();
  const Chain swapped = {P("x^5 + 2*x^4 + x^3"), P("x^7 + 2*x^4 + x"), P("x^2")};
  REQUIRE(oracle::of(compose_chain(swapped)) ==
          oracle::compose(oracle::compose(oracle::from_ints({0, 0, 1}),
                                          oracle::from_ints({0, 0, 0, 1, 0, 1})),
                          oracle::from_ints({0, 1, 0, 0, 0, 0, 0, 1})));
  const auto classes = enumerate_classes(a);
  CHECK(std::find_if(classes.begin(), classes.end(), [&](const Decomposition& d) {
          return d.factors == swapped;
        }) != classes.end());
  CHECK(zero_positions(swapped) == std::vector<std::size_t>{1, 3});
  CHECK(index_at_zero(a) == 3);
  const CuspReport r = cusp_report(a);
  CHECK(r.l == 3);
  CHECK(r.l_a == 3);
  CHECK(r.defect == 0);
  CHECK(r.regular);
}

TEST_CASE("an irregular element: defect 1 and two Max degree multisets") {
  const Polynomial a = irregular_instance();
  const CuspReport r = cusp_report(a);
  CHECK(r.l == 3);
  CHECK(r.l_a == 2);
  CHECK(r.index == 2);
  CHECK(r.defect == 1);
  CHECK(!r.regular);
  CHECK(r.rational_realizable);
  const MaxSkeleton sk = max_decompositions(a);
  CHECK(sk.length == 2);
  std::set<std::vector<std::size_t>> multisets;
  for (const Chain& m : max_members(sk)) {
    CHECK(compose_chain(m) == a);
    CHECK(all_in_A(m));
    multisets.insert(sorted_degrees(m));
  }
  CHECK(multisets == std::set<std::vector<std::size_t>>{{2, 35}, {5, 14}});
  CHECK(bracket_search_length(a) == 2);
}

TEST_CASE("cusp reports") {
  const CuspReport r = cusp_report(kCusp8);
  CHECK(r.l == 3);
  CHECK(r.l_a == 3);
  CHECK(r.index == 3);
  CHECK(r.defect == 0);
  CHECK(r.regular);
  CHECK(r.rational_realizable);
  const CuspReport x4 = cusp_report(P("x^4"));
  CHECK(x4.l == 2);
  CHECK(x4.l_a == 2);
  CHECK(x4.defect == 0);
  CHECK(x4.regular);
  CHECK_THROWS_AS(cusp_report(P("x^3 + x")), DomainError);
}

TEST_CASE("A-decompositions of the cusp examples") {
  const ADecompositionSet s = enumerate_A_decompositions(kCusp8);
  CHECK(s.lengths == std::vector<std::size_t>{2, 3});
  std::vector<Chain> members;
  for (const auto& m : s.members) {
    CHECK(compose_chain(m.factors) == kCusp8);
    CHECK(all_in_A(m.factors));
    members.push_back(m.factors);
  }
  const Chain two = {P("x^4 + 2*x^3 + x^2"), P("x^2")};
  const Chain three = {P("x^2"), P("x^2 - 1/4"), P("x^2 + 1/2")};
  CHECK(std::find(members.begin(), members.end(), two) != members.end());
  CHECK(std::find(members.begin(), members.end(), three) != members.end());
  for (const auto& m : s.members) {
    if (m.factors == two) {
      CHECK(m.kinds == std::vector<CuspClass>{CuspClass::kD, CuspClass::kC});
    }
  }

  const ADecompositionSet x4 = enumerate_A_decompositions(P("x^4"));
  CHECK(x4.lengths == std::vector<std::size_t>{2});
  REQUIRE(x4.members.size() == 1);
  CHECK(x4.members[0].factors == Chain{P("x^2"), P("x^2")});
  const ADecompositionSet x9 = enumerate_A_decompositions(P("x^9"));
  CHECK(x9.lengths == std::vector<std::size_t>{2});
  CHECK(x9.members[0].factors == Chain{P("x^3"), P("x^3")});
}

TEST_CASE("Max skeletons and instantiation") {
  const MaxSkeleton sk = max_decompositions(kCusp8);
  CHECK(sk.length == 3);
  REQUIRE(sk.bases.size() == 1);
  CHECK(sk.bases[0].base.factors == Chain{P("x^2"), P("x^2 + x"), P("x^2")});
  CHECK(sk.bases[0].shift_sets ==
        std::vector<std::vector<Rational>>{{0}, {Rational(-1, 2)}});
  const std::vector<Rational> shifts = {0, Rational(-1, 2)};
  const Chain m = instantiate(sk.bases[0], shifts);
  CHECK(m == Chain{P("x^2"), P("x^2 - 1/4"), P("x^2 + 1/2")});
  CHECK(compose_chain(m) == kCusp8);
  const std::vector<Rational> bad = {1, Rational(-1, 2)};
  CHECK_THROWS_AS(instantiate(sk.bases[0], bad), DomainError);
  const std::vector<Rational> short_list = {0};
  CHECK_THROWS_AS(instantiate(sk.bases[0], short_list), DomainError);

  // The length-2 A-decomposition is not a maximal one.
  const auto members = max_members(sk);
  CHECK(std::find(members.begin(), members.end(),
                  Chain{P("x^4 + 2*x^3 + x^2"), P("x^2")}) == members.end());

  const MaxSkeleton x4 = max_decompositions(P("x^4"));
  REQUIRE(x4.bases.size() == 1);
  CHECK(x4.bases[0].base.factors == Chain{P("x^2"), P("x^2")});
  CHECK(x4.bases[0].shift_sets == std::vector<std::vector<Rational>>{{0}});
}

TEST_CASE("Adm moves and their inverse") {
  const Chain base = {P("x^2"), P("x^2 + x"), P("x^2")};
  const CuspMoveResult r =
      apply_cusp_move(base, 2, CuspMove::kAdm, Rational(-1, 2));
  CHECK(r.factors == Chain{P("x^2"), P("x^2 - 1/4"), P("x^2 + 1/2")});
  CHECK(r.all_in_A);
  CHECK(undo_adm(r.factors, 2, Rational(-1, 2)) == base);
  // Default picks the only admissible shift.
  CHECK(apply_cusp_move(base, 2, CuspMove::kAdm).factors == r.factors);
  CHECK_THROWS_AS(apply_cusp_move(base, 2, CuspMove::kAdm, Rational(1)),
                  DomainError);
  CHECK_THROWS_AS(apply_cusp_move(base, 3, CuspMove::kAdm), DomainError);
  CHECK_THROWS_AS(apply_cusp_move(base, 0, CuspMove::kAdm), DomainError);
}

TEST_CASE("Cb and Cc power swaps") {
  const Chain start = {P("x^2"), P("x^5 + x^3")};
  const CuspMoveResult cb = apply_cusp_move(start, 1, CuspMove::kCb);
  CHECK(cb.factors == Chain{P("x^5 + 2*x^4 + x^3"), P("x^2")});
  CHECK(cb.all_in_A);
  CHECK(compose_chain(cb.factors) == P("x^10 + 2*x^8 + x^6"));
  const CuspMoveResult cc = apply_cusp_move(cb.factors, 1, CuspMove::kCc);
  CHECK(cc.factors == start);
  CHECK(cc.all_in_A);
  CHECK_THROWS_AS(apply_cusp_move(Chain{P("x^5 + x^2 + x"), P("x^3")}, 1,
                                  CuspMove::kCb),
                  PatternMismatch);
  CHECK_THROWS_AS(apply_cusp_move(Chain{P("x^2"), P("x^4 + x^2")}, 1,
                                  CuspMove::kCb),
                  PatternMismatch);
}

TEST_CASE("Chebyshev swaps need irrational admissible shifts") {
  CHECK_THROWS_AS(apply_cusp_move(Chain{chebyshev(5), chebyshev(3)}, 1,
                                  CuspMove::kCa),
                  IrrationalRootRequired);
  CHECK_THROWS_AS(apply_cusp_move(Chain{P("x^5"), P("x^3")}, 1, CuspMove::kCa),
                  PatternMismatch);
}

TEST_CASE("slope zeros do not move under unit insertion") {
  CorpusRng rng(101);
  for (const CorpusElement& e : cusp_corpus(103, 30)) {
    Chain f = e.factors;
    const auto before = zero_positions(f);
    for (std::size_t j = 0; j + 1 < f.size(); ++j) {
      Rational scale;
      while (scale.is_zero()) scale = random_coefficient(rng);
      const Unit u(random_coefficient(rng), scale);
      f[j] = compose(f[j], u);
      f[j + 1] = compose(unit_inverse(u), f[j + 1]);
    }
    REQUIRE(compose_chain(f) == e.target);
    REQUIRE(zero_positions(f) == before);
  }
}

TEST_CASE("cusp corpus: A-length, Max uniformity and move closure") {
  std::size_t regular = 0, searched = 0;
  for (const CorpusElement& e : cusp_corpus(42, 50)) {
    REQUIRE(in_A(e.target));
    const CuspReport r = cusp_report(e.target);
    REQUIRE(r.rational_realizable);
    REQUIRE(r.l == r.l_a + r.defect);
    const MaxSkeleton sk = max_decompositions(e.target);
    const auto members = max_members(sk);
    REQUIRE(!members.empty());
    std::set<std::vector<std::size_t>> multisets;
    for (const Chain& m : members) {
      REQUIRE(compose_chain(m) == e.target);
      REQUIRE(all_in_A(m));
      REQUIRE(m.size() == r.l_a);
      multisets.insert(sorted_degrees(m));
    }
    if (r.regular) {
      ++regular;
      REQUIRE(multisets.size() == 1);
    }
    if (e.target.degree() <= 16) {
      ++searched;
      REQUIRE(bracket_search_length(e.target) == r.l_a);
    }
  }
  CHECK(regular >= 10);
  CHECK(searched >= 5);
}
