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

#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.h"
#include "polydecomp/corpus.h"
#include "polydecomp/errors.h"
#include "polydecomp/json_io.h"
#include "polydecomp/polynomial.h"
#include "polydecomp/text.h"

using namespace polydecomp;

namespace {

Polynomial P(const char* text) { return parse(text); }

std::vector<Polynomial> random_polys(std::uint64_t seed, std::size_t count,
                                     std::size_t max_degree) {
  CorpusRng rng(seed);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_polynomial(rng, 0, max_degree));
  }
  return out;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, 4);
  CHECK(a.to_string() == "3/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::from_string("abc"), DomainError);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("polynomials normalize trailing zeros") {
  const Polynomial p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.size() == 1);
  CHECK(p.degree() == 0);
  CHECK(Polynomial().is_zero());
  CHECK_THROWS_AS(Polynomial().degree(), DomainError);
  CHECK(Polynomial({0, 0}).is_zero());
}

TEST_CASE("parse reads the documented examples") {
  CHECK(oracle::of(P("4*x^3 - 3*x")) == oracle::from_ints({0, -3, 0, 4}));
  CHECK(P("1/2*x + 1") == Polynomial({Rational(1), Rational(1, 2)}));
  CHECK(P("  x^2+ 2 x+1 ") == Polynomial({1, 2, 1}));
  CHECK(P("-x") == Polynomial({0, -1}));
  CHECK(P("3") == Polynomial::constant(3));
  CHECK(P("x^2 - x^2").is_zero());
  CHECK(P("2/4x") == Polynomial({Rational(0), Rational(1, 2)}));
}

TEST_CASE("parse rejects malformed input with an offset") {
  CHECK_THROWS_AS(P("x^-1"), ParseError);
  CHECK_THROWS_AS(P("1/0*x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("x^1.5"), ParseError);
  CHECK_THROWS_AS(P("2**x"), ParseError);
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("y"), ParseError);
  try {
    P("x^-1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("format renders descending canonical text") {
  CHECK(format(Polynomial({0, -3, 0, 4})) == "4*x^3 - 3*x");
  CHECK(format(Polynomial()) == "0");
  CHECK(format(Polynomial({Rational(1), Rational(1, 2)})) == "1/2*x + 1");
  CHECK(format(Polynomial({-1, 0, -1})) == "-x^2 - 1");
  CHECK(format(Polynomial({Rational(-1, 3)})) == "-1/3");
}

TEST_CASE("parse and format round trip on 1000 random polynomials") {
  for (const Polynomial& p : random_polys(7, 1000, 12)) {
    REQUIRE(parse(format(p)) == p);
  }
}

TEST_CASE("compose matches the spelled-out examples") {
  CHECK(compose(P("x^2"), P("x + 1")) == P("x^2 + 2*x + 1"));
  CHECK(compose(P("2*x^2 - 1"), P("4*x^3 - 3*x")) ==
        P("32*x^6 - 48*x^4 + 18*x^2 - 1"));
  CHECK(compose(Polynomial::constant(5), P("x^3 + x")) ==
        Polynomial::constant(5));
  CHECK(compose(P("x^3 + x"), Polynomial()) == Polynomial());
  CHECK(compose_chain(std::vector<Polynomial>{}) == Polynomial::identity());
}

TEST_CASE("compose agrees with the power-expansion oracle") {
  const auto as = random_polys(11, 60, 9);
  const auto bs = random_polys(12, 60, 9);
  for (std::size_t i = 0; i < as.size(); ++i) {
    REQUIRE(oracle::of(compose(as[i], bs[i])) ==
            oracle::compose(oracle::of(as[i]), oracle::of(bs[i])));
  }
}

TEST_CASE("large products agree with schoolbook multiplication") {
  // Sizes above the Kronecker threshold, with mixed denominators and signs.
  CorpusRng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial a = random_polynomial(rng, 30, 80);
    const Polynomial b = random_polynomial(rng, 30, 80);
    REQUIRE(oracle::of(a * b) == oracle::mul(oracle::of(a), oracle::of(b)));
  }
  const Polynomial big = pow(P("x^3 - 1/7*x + 12345678901234567/3"), 20);
  CHECK(oracle::of(big) ==
        oracle::power(oracle::of(P("x^3 - 1/7*x + 12345678901234567/3")), 20));
}

TEST_CASE("composition is associative and multiplies degrees") {
  const auto as = random_polys(21, 40, 4);
  const auto bs = random_polys(22, 40, 4);
  const auto cs = random_polys(23, 40, 4);
  for (std::size_t i = 0; i < as.size(); ++i) {
    REQUIRE(compose(compose(as[i], bs[i]), cs[i]) ==
            compose(as[i], compose(bs[i], cs[i])));
    if (!as[i].is_constant() && !bs[i].is_constant()) {
      REQUIRE(compose(as[i], bs[i]).degree() == as[i].degree() * bs[i].degree());
    }
  }
}

TEST_CASE("derivative examples and the chain rule") {
  CHECK(derivative(P("x^5 + x^3")) == P("5*x^4 + 3*x^2"));
  CHECK(derivative(Polynomial::constant(9)).is_zero());
  CHECK(derivative(P("4*x^3 - 3*x")) == P("12*x^2 - 3"));
  const auto as = random_polys(31, 80, 6);
  const auto bs = random_polys(32, 80, 6);
  for (std::size_t i = 0; i < as.size(); ++i) {
    REQUIRE(derivative(compose(as[i], bs[i])) ==
            compose(derivative(as[i]), bs[i]) * derivative(bs[i]));
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(P("x^2 + 2*x"), 0) == 0);
  CHECK(evaluate(P("4*x^3 - 3*x"), 1) == 1);
  CHECK(evaluate(P("x - 1/2"), Rational(1, 2)) == 0);
  CHECK(evaluate(Polynomial(), 5) == 0);
  for (const Polynomial& p : random_polys(41, 50, 8)) {
    const Rational t(-7, 5);
    REQUIRE(evaluate(p, t).mpq() == oracle::evaluate(oracle::of(p), t.mpq()));
  }
}

TEST_CASE("unit inverses") {
  const Unit u(1, 2);
  const Unit v = unit_inverse(u);
  CHECK(v.shift() == Rational(-1, 2));
  CHECK(v.scale() == Rational(1, 2));
  CHECK(unit_inverse(Unit::identity()) == Unit::identity());
  CHECK(unit_inverse(Unit(0, -1)) == Unit(0, -1));
  CHECK_THROWS_AS(Unit(1, 0), DomainError);
  CHECK_THROWS_AS(Unit::from_polynomial(P("x^2")), DomainError);
  CorpusRng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Rational s = random_coefficient(rng);
    Rational m;
    while (m.is_zero()) m = random_coefficient(rng);
    const Unit w(s, m);
    const Unit wi = unit_inverse(w);
    REQUIRE(compose(w.to_polynomial(), wi.to_polynomial()) == Polynomial::identity());
    REQUIRE(compose(wi.to_polynomial(), w.to_polynomial()) == Polynomial::identity());
    REQUIRE(unit_inverse(wi) == w);
    REQUIRE(compose(w, wi) == Unit::identity());
    const Unit ww = compose(w, w);
    REQUIRE(ww.to_polynomial() == compose(w.to_polynomial(), w.to_polynomial()));
  }
}

TEST_CASE("even and odd split") {
  auto [e1, o1] = even_odd_split(P("x^3 + x^2 + 1"));
  CHECK(e1 == P("x^2 + 1"));
  CHECK(o1 == P("x^3"));
  auto [e2, o2] = even_odd_split(P("4*x^3 - 3*x"));
  CHECK(e2.is_zero());
  CHECK(o2 == P("4*x^3 - 3*x"));
  auto [e3, o3] = even_odd_split(Polynomial::constant(7));
  CHECK(e3 == Polynomial::constant(7));
  CHECK(o3.is_zero());
  for (const Polynomial& p : random_polys(51, 100, 9)) {
    auto [e, o] = even_odd_split(p);
    REQUIRE(e + o == p);
    auto [ee, eo] = even_odd_split(e);
    REQUIRE(ee == e);
    REQUIRE(eo.is_zero());
  }
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(P("12*x^2 - 3")) ==
        std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(rational_roots(P("x^2 + 1")).empty());
  const Polynomial p = P("x^2") * P("x + 1") * P("5*x + 3");
  CHECK(rational_roots(p) ==
        std::vector<Rational>{Rational(-1), Rational(-3, 5), Rational(0)});
  CHECK_THROWS_AS(rational_roots(Polynomial()), DomainError);
  CHECK(rational_roots(Polynomial::constant(4)).empty());
  // Planted roots with large numerators and denominators.
  CorpusRng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> roots;
    Polynomial q = Polynomial::constant(1);
    for (int k = 0; k < 4; ++k) {
      const Rational r(rng.uniform(-1000, 1000), rng.uniform(1, 97));
      roots.push_back(r);
      q = q * Polynomial({-r, Rational(1)});
    }
    q = q * P("x^2 + x + 1");
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    REQUIRE(rational_roots(q) == roots);
    for (const Rational& r : rational_roots(q)) REQUIRE(evaluate(q, r) == 0);
  }
}

TEST_CASE("gcd, resultant and squarefree parts") {
  CHECK(gcd(P("x^2 - 1"), P("x^2 + 2*x + 1")) == P("x + 1"));
  CHECK(gcd(P("x^2 + 1"), P("x - 3")) == Polynomial::constant(1));
  CHECK(resultant(P("x - 2"), P("x^2 + 1")) == 5);
  CHECK(resultant(P("x^2 - 1"), P("x - 1")) == 0);
  const auto parts = squarefree_decomposition(P("3*x^5 + 6*x^4 + 3*x^3"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Polynomial::constant(1));
  CHECK(parts[1] == P("x + 1"));
  CHECK(parts[2] == P("x"));
  CHECK(exact_root(P("x^4 + 2*x^2 + 1"), 2) == P("x^2 + 1"));
  CHECK(!exact_root(P("x^4 + 2*x^2 + 2"), 2));
  CHECK(real_root_count(P("x^3 - x")) == 3);
  CHECK(real_root_count(P("x^2 + 1")) == 0);
}

TEST_CASE("divmod and interpolation") {
  const auto [q, r] = divmod(P("x^3 + 2*x + 5"), P("x^2 + 1"));
  CHECK(q == P("x"));
  CHECK(r == P("x + 5"));
  CHECK_THROWS_AS(divmod(P("x"), Polynomial()), DomainError);
  const std::vector<Rational> xs = {0, 1, 2, 3};
  const Polynomial p = P("1/2*x^3 - x + 7");
  std::vector<Rational> ys;
  for (const Rational& x : xs) ys.push_back(evaluate(p, x));
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("JSON form of polynomials and decompositions") {
  const Polynomial p = P("1/2*x + 1");
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"coeffs":["1","1/2"]})");
  CHECK(polynomial_from_json(j) == p);
  CHECK(polynomial_from_json(Json::parse(R"({"coeffs":[0, "-3", 0, 4]})")) ==
        P("4*x^3 - 3*x"));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"c":[1]})")), DomainError);
  const Json d = Json::parse(
      R"({"factors":[{"coeffs":["0","0","1"]},{"coeffs":["0","1","1"]}]})");
  const Decomposition dec = decomposition_from_json(d);
  CHECK(dec.target == P("x^4 + 2*x^3 + x^2"));
  CHECK(decomposition_from_json(to_json(dec)) == dec);
  Json bad = to_json(dec);
  bad["target"] = to_json(P("x^4"));
  CHECK_THROWS_AS(decomposition_from_json(bad), DomainError);
}
