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

#ifndef POLYDECOMP_POLYNOMIAL_H_
#define POLYDECOMP_POLYNOMIAL_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polydecomp/rational.h"

namespace polydecomp {

// Dense univariate polynomial over the rationals. Index i holds the
// coefficient of x^i. The zero polynomial has no coefficients; otherwise the
// last stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t exponent);
  static Polynomial identity() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // True for the zero polynomial and nonzero constants.
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Degree of a nonzero polynomial. The zero polynomial has no degree; asking
  // for it throws DomainError.
  std::size_t degree() const;

  // Coefficient of x^i; zero past the end.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) {
    return a *= c;
  }
  friend Polynomial operator*(const Rational& c, Polynomial a) {
    return a *= c;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

// An invertible element under composition: shift + scale * x, scale != 0.
class Unit {
 public:
  // Throws DomainError when scale is zero.
  Unit(const Rational& shift, const Rational& scale);
  static Unit identity() { return Unit(0, 1); }
  // Throws DomainError unless p has degree exactly 1.
  static Unit from_polynomial(const Polynomial& p);

  const Rational& shift() const { return shift_; }
  const Rational& scale() const { return scale_; }
  Polynomial to_polynomial() const;
  Rational apply(const Rational& t) const { return shift_ + scale_ * t; }

  friend bool operator==(const Unit&, const Unit&) = default;

 private:
  Rational shift_;
  Rational scale_;
};

Unit unit_inverse(const Unit& u);
// (a o b) for two units.
Unit compose(const Unit& a, const Unit& b);

// (a o b)(x) = a(b(x)), by Horner's scheme in a.
Polynomial compose(const Polynomial& a, const Polynomial& b);
Polynomial compose(const Polynomial& a, const Unit& u);
Polynomial compose(const Unit& u, const Polynomial& a);
// Left-to-right composition of a chain: chain[0] o chain[1] o ... . An empty
// chain is the identity x.
Polynomial compose_chain(std::span<const Polynomial> chain);

Polynomial derivative(const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& t);
Polynomial pow(const Polynomial& p, std::size_t exponent);

// (even part, odd part).
std::pair<Polynomial, Polynomial> even_odd_split(const Polynomial& p);

// Euclidean division. Throws DomainError when the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial make_monic(const Polynomial& p);
Rational resultant(const Polynomial& a, const Polynomial& b);

// Yun's algorithm. Entry k-1 holds the monic squarefree factor whose roots
// have multiplicity exactly k; p = lc * prod(entry_k^k).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// Every rational root, ascending. Throws DomainError for the zero polynomial.
std::vector<Rational> rational_roots(const Polynomial& p);
// Number of distinct real roots (Sturm). Throws DomainError for zero.
std::size_t real_root_count(const Polynomial& p);

// f with f^k == p when p is the k-th power of a rational polynomial.
std::optional<Polynomial> exact_root(const Polynomial& p, unsigned k);

// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
// The xs must be distinct.
Polynomial interpolate(std::span<const Rational> xs,
                       std::span<const Rational> ys);

}  // namespace polydecomp

#endif  // POLYDECOMP_POLYNOMIAL_H_
