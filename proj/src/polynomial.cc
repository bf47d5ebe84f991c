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

#include "polydecomp/polynomial.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "int_poly.h"
#include "polydecomp/errors.h"

namespace polydecomp {

// ---- Rational ----

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num.push_back(text[i++]);
  }
  if (i == digits_start) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      den.push_back(text[i++]);
    }
    if (den.empty()) {
      throw DomainError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (i != text.size()) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(mpz_class(num), mpz_class(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.mpq().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.mpq().get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// ---- Polynomial ----

namespace {
const Rational& zero_rational() {
  static const Rational kZero;
  return kZero;
}

// Below this many coefficients the rational schoolbook loops beat the
// conversion to a common denominator.
constexpr std::size_t kSmall = 6;
}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return Polynomial(std::move(v));
}

std::size_t Polynomial::degree() const {
  if (coeffs_.empty()) throw DomainError("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

const Rational& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero");
  return coeffs_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& v : coeffs_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.size() <= kSmall || b.size() <= kSmall) {
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }
  const detail::IntPoly ia = detail::to_int_poly(a);
  const detail::IntPoly ib = detail::to_int_poly(b);
  return detail::from_int_poly(detail::multiply(ia.num, ib.num),
                               ia.den * ib.den);
}

// ---- Unit ----

Unit::Unit(const Rational& shift, const Rational& scale)
    : shift_(shift), scale_(scale) {
  if (scale_.is_zero()) throw DomainError("unit with zero scale");
}

Unit Unit::from_polynomial(const Polynomial& p) {
  if (p.is_zero() || p.degree() != 1) {
    throw DomainError("a unit must have degree 1");
  }
  return Unit(p.coeff(0), p.coeff(1));
}

Polynomial Unit::to_polynomial() const { return Polynomial({shift_, scale_}); }

Unit unit_inverse(const Unit& u) {
  const Rational inv = Rational(1) / u.scale();
  return Unit(-u.shift() * inv, inv);
}

Unit compose(const Unit& a, const Unit& b) {
  return Unit(a.shift() + a.scale() * b.shift(), a.scale() * b.scale());
}

// ---- composition and friends ----

Polynomial compose(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return a;
  if (b.is_constant()) return Polynomial::constant(evaluate(a, b.coeff(0)));
  const std::size_t n = a.degree();
  const detail::IntPoly ia = detail::to_int_poly(a);
  const detail::IntPoly ib = detail::to_int_poly(b);
  // a(b) = (1 / (da db^n)) sum A_k db^(n-k) B^k, evaluated by Horner.
  std::vector<mpz_class> db_pow(n + 1);
  db_pow[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) db_pow[k] = db_pow[k - 1] * ib.den;
  detail::ZVec r{ia.num[n]};
  for (std::size_t k = n; k-- > 0;) {
    r = detail::multiply(r, ib.num);
    if (sgn(ia.num[k]) != 0) {
      mpz_addmul(r[0].get_mpz_t(), ia.num[k].get_mpz_t(),
                 db_pow[n - k].get_mpz_t());
    }
  }
  return detail::from_int_poly(r, ia.den * db_pow[n]);
}

Polynomial compose(const Polynomial& a, const Unit& u) {
  return compose(a, u.to_polynomial());
}

Polynomial compose(const Unit& u, const Polynomial& a) {
  return a * u.scale() + Polynomial::constant(u.shift());
}

Polynomial compose_chain(std::span<const Polynomial> chain) {
  if (chain.empty()) return Polynomial::identity();
  Polynomial acc = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) acc = compose(chain[i], acc);
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  if (p.size() <= 1) return Polynomial();
  std::vector<Rational> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    out[i - 1] = p.coeff(i) * Rational(static_cast<long>(i));
  }
  return Polynomial(std::move(out));
}

Rational evaluate(const Polynomial& p, const Rational& t) {
  if (p.is_zero()) return Rational();
  if (p.size() <= kSmall) {
    Rational acc = p.leading();
    for (std::size_t k = p.size() - 1; k-- > 0;) acc = acc * t + p.coeff(k);
    return acc;
  }
  // Homogeneous Horner over the integers: t = u / v.
  const detail::IntPoly ip = detail::to_int_poly(p);
  const mpz_class& u = t.mpq().get_num();
  const mpz_class& v = t.mpq().get_den();
  mpz_class acc = ip.num.back();
  mpz_class vpow = 1;
  for (std::size_t k = ip.num.size() - 1; k-- > 0;) {
    acc *= u;
    vpow *= v;
    mpz_addmul(acc.get_mpz_t(), ip.num[k].get_mpz_t(), vpow.get_mpz_t());
  }
  return Rational(acc, ip.den * vpow);
}

Polynomial pow(const Polynomial& p, std::size_t exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> even_odd_split(const Polynomial& p) {
  std::vector<Rational> ev(p.size()), od(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    (i % 2 == 0 ? ev : od)[i] = p.coeff(i);
  }
  return {Polynomial(std::move(ev)), Polynomial(std::move(od))};
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.degree();
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational inv_lead = Rational(1) / b.leading();
  const bool monic = b.leading() == Rational(1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db];
    if (q.is_zero()) continue;
    if (!monic) q *= inv_lead;
    for (std::size_t j = 0; j < db; ++j) {
      if (!b.coeff(j).is_zero()) rem[k + j] -= q * b.coeff(j);
    }
    rem[k + db] = Rational();
    quot[k] = std::move(q);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

namespace {

// Primitive integer polynomial with positive leading coefficient, same roots.
detail::ZVec primitive(const Polynomial& p) {
  detail::IntPoly ip = detail::to_int_poly(p);
  mpz_class content = 0;
  for (const mpz_class& c : ip.num) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  if (sgn(ip.num.back()) < 0) content = -content;
  for (mpz_class& c : ip.num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(),
                                           content.get_mpz_t());
  return ip.num;
}

Polynomial from_z(const detail::ZVec& v) {
  return detail::from_int_poly(v, mpz_class(1));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  // Primitive remainder sequence keeps coefficient growth in check.
  Polynomial x = from_z(primitive(a));
  Polynomial y = from_z(primitive(b));
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : from_z(primitive(r));
  }
  return make_monic(x);
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.degree() == 0) return pow(a.coeff(0), b.degree());
  if (b.degree() == 0) return pow(b.coeff(0), a.degree());
  // res(A, B) = (-1)^(mn) lc(B)^(m - k) res(B, A mod B), k = deg(A mod B).
  Polynomial x = a, y = b;
  Rational scale = 1;
  while (true) {
    const std::size_t m = x.degree(), n = y.degree();
    if (n == 0) return scale * pow(y.coeff(0), m);
    Polynomial r = divmod(x, y).second;
    if (r.is_zero()) return Rational();
    const std::size_t k = r.degree();
    if ((m * n) % 2 == 1) scale = -scale;
    scale *= pow(y.leading(), m - k);
    x = std::move(y);
    y = std::move(r);
  }
}

namespace {

std::optional<mpz_class> exact_integer_root(const mpz_class& v, unsigned k) {
  if (sgn(v) < 0 && k % 2 == 0) return std::nullopt;
  mpz_class mag = abs(v), root;
  if (mpz_root(root.get_mpz_t(), mag.get_mpz_t(), k) == 0) return std::nullopt;
  return sgn(v) < 0 ? mpz_class(-root) : root;
}

}  // namespace

std::optional<Polynomial> exact_root(const Polynomial& p, unsigned k) {
  if (k == 0) throw DomainError("zeroth root");
  if (p.is_zero()) return p;
  if (p.degree() % k != 0) return std::nullopt;
  std::size_t low = 0;
  while (p.coeff(low).is_zero()) ++low;
  if (low % k != 0) return std::nullopt;
  const Rational& c = p.coeff(low);
  const auto num = exact_integer_root(c.numerator(), k);
  const auto den = exact_integer_root(c.denominator(), k);
  if (!num || !den) return std::nullopt;
  // Power series (p / (c x^low))^(1/k) at 0, truncated to the root's degree.
  const std::size_t len = (p.degree() - low) / k + 1;
  const Rational alpha = Rational(1) / Rational(static_cast<long>(k));
  std::vector<Rational> f(len), s(len);
  for (std::size_t j = 0; j < len; ++j) f[j] = p.coeff(low + j) / c;
  s[0] = 1;
  for (std::size_t m = 1; m < len; ++m) {
    Rational acc;
    for (std::size_t j = 1; j <= m; ++j) {
      if (f[j].is_zero() || s[m - j].is_zero()) continue;
      acc += (alpha * Rational(static_cast<long>(j)) -
              Rational(static_cast<long>(m - j))) *
             f[j] * s[m - j];
    }
    s[m] = acc / Rational(static_cast<long>(m));
  }
  std::vector<Rational> shifted(low / k);
  shifted.insert(shifted.end(), s.begin(), s.end());
  Polynomial root = Polynomial(std::move(shifted)) * Rational(*num, *den);
  if (pow(root, k) != p) return std::nullopt;
  return root;
}

Polynomial interpolate(std::span<const Rational> xs,
                       std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation size mismatch");
  // Newton divided differences.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < xs.size(); ++j) {
    for (std::size_t i = xs.size() - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  Polynomial result;
  for (std::size_t i = xs.size(); i-- > 0;) {
    result = result * Polynomial({-xs[i], Rational(1)}) +
             Polynomial::constant(dd[i]);
  }
  return result;
}

}  // namespace polydecomp
