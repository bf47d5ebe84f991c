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

#include "polydecomp/odd_monoid.h"

#include <numeric>

#include "polydecomp/chebyshev.h"
#include "polydecomp/errors.h"

namespace polydecomp {

namespace {

void require_odd(const Polynomial& a) {
  if (!is_odd(a)) throw DomainError("polynomial is not odd");
  if (a.is_zero() || a.degree() < 2) {
    throw DomainError("odd polynomial of degree at least 2 required");
  }
}

std::vector<std::size_t> support(const Polynomial& p) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (!p.coeff(e).is_zero()) out.push_back(e);
  }
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// f == c T_k(mu x) for rationals c and mu^2; returns k.
std::optional<unsigned> scaled_chebyshev(const Polynomial& f) {
  if (!is_odd(f) || f.is_zero() || f.degree() < 3) return std::nullopt;
  const unsigned k = static_cast<unsigned>(f.degree());
  const Polynomial t = chebyshev(k);
  if (f.coeff(k - 2).is_zero()) return std::nullopt;
  const Rational top = f.coeff(k) / t.coeff(k);
  const Rational r = top / (f.coeff(k - 2) / t.coeff(k - 2));  // mu^2
  Rational expected = top;
  for (unsigned j = 0; 2 * j <= k; ++j) {
    if (f.coeff(k - 2 * j) != expected * t.coeff(k - 2 * j)) return std::nullopt;
    expected /= r;
  }
  return k;
}

bool is_monomial(const Polynomial& p) { return support(p).size() == 1; }

// q == x^t al(x^(2s)) with al nonconstant, al(0) == 1 after normalization.
std::optional<std::pair<unsigned, Polynomial>> spread_form(const Polynomial& q,
                                                           unsigned s) {
  const auto sup = support(q);
  if (sup.size() < 2) return std::nullopt;
  const std::size_t t = sup.front();
  for (std::size_t e : sup) {
    if ((e - t) % (2 * s) != 0) return std::nullopt;
  }
  std::vector<Rational> al((q.degree() - t) / (2 * s) + 1);
  for (std::size_t k = 0; k < al.size(); ++k) {
    al[k] = q.coeff(t + 2 * s * k) / q.coeff(t);
  }
  return std::make_pair(static_cast<unsigned>(t), Polynomial(std::move(al)));
}

// p == x^t e(x) with e even and an exact s-th power.
bool powered_form(const Polynomial& p, unsigned t, unsigned s) {
  const auto sup = support(p);
  if (sup.empty() || sup.front() != t) return false;
  Polynomial e(std::vector<Rational>(p.coeffs().begin() + t, p.coeffs().end()));
  if (!even_odd_split(e).second.is_zero()) return false;
  return exact_root(e, s).has_value();
}

std::optional<OddSwap> power_swap(const Polynomial& mono_right,
                                  const Polynomial& mono_left,
                                  const Polynomial& spread,
                                  const Polynomial& powered,
                                  OddSwapKind kind) {
  if (!is_monomial(mono_right) || !is_monomial(mono_left)) return std::nullopt;
  const std::size_t s = mono_right.degree();
  if (mono_left.degree() != s || !is_prime(s) || s % 2 == 0) {
    return std::nullopt;
  }
  auto form = spread_form(spread, static_cast<unsigned>(s));
  if (!form) return std::nullopt;
  const unsigned t = form->first;
  if (t % 2 == 0 || std::gcd<std::size_t>(t, s) != 1) return std::nullopt;
  if (!powered_form(powered, t, static_cast<unsigned>(s))) return std::nullopt;
  OddSwap out{kind, static_cast<unsigned>(s), t, std::move(form->second), 0, 0};
  return out;
}

}  // namespace

bool is_odd(const Polynomial& p) {
  for (std::size_t i = 0; i < p.size(); i += 2) {
    if (!p.coeff(i).is_zero()) return false;
  }
  return true;
}

std::optional<std::pair<Polynomial, Polynomial>> adjust_to_odd(
    const Polynomial& g, const Polynomial& h) {
  if (g.is_zero() || h.is_zero() || g.degree() < 2 || h.degree() < 2) {
    throw DomainError("both factors need degree at least 2");
  }
  if (!is_odd(compose(g, h))) throw DomainError("composite is not odd");
  const Polynomial even = even_odd_split(h).first;
  if (!even.is_constant()) return std::nullopt;
  const Rational c = even.coeff(0);
  return std::make_pair(compose(g, Polynomial({c, Rational(1)})),
                        h - Polynomial::constant(c));
}

std::vector<Decomposition> decompose_in_O(const Polynomial& a) {
  require_odd(a);
  std::vector<Decomposition> out;
  for (const Decomposition& cls : enumerate_classes(a)) {
    std::vector<Polynomial> f = cls.factors;
    bool ok = true;
    // Make every tail odd, right to left; the unit moves into the factor on
    // the left.
    for (std::size_t i = f.size(); i-- > 1 && ok;) {
      const std::span<const Polynomial> all(f);
      const Polynomial left = compose_chain(all.subspan(0, i));
      const Polynomial tail = compose_chain(all.subspan(i));
      auto adj = adjust_to_odd(left, tail);
      if (!adj) {
        ok = false;
        break;
      }
      const Rational c = tail.coeff(0) - adj->second.coeff(0);
      f[i] -= Polynomial::constant(c);
      f[i - 1] = compose(f[i - 1], Polynomial({c, Rational(1)}));
    }
    if (!ok) continue;
    for (const Polynomial& p : f) {
      if (!is_odd(p)) ok = false;
    }
    if (!ok) continue;
    // Odd factors have no constant term, so this only rescales.
    out.push_back({a, canonicalize(std::move(f))});
  }
  return out;
}

bool is_irreducible_in_O(const Polynomial& a) {
  require_odd(a);
  const std::size_t n = a.degree();
  for (std::size_t d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    auto gh = right_factor(a, d);
    if (gh && adjust_to_odd(gh->first, gh->second)) return false;
  }
  return true;
}

const char* to_string(OddSwapKind kind) {
  switch (kind) {
    case OddSwapKind::kChebyshev: return "a";
    case OddSwapKind::kPowerLeft: return "b";
    case OddSwapKind::kPowerRight: return "c";
  }
  return "?";
}

OddSwap classify_odd_swap(const Polynomial& p, const Polynomial& q,
                          const Polynomial& p_star,
                          const Polynomial& q_star) {
  for (const Polynomial* f : {&p, &q, &p_star, &q_star}) {
    require_odd(*f);
    if (!is_irreducible_in_O(*f)) {
      throw DomainError("swap factors must be irreducible in the odd monoid");
    }
  }
  if (compose(p, q) != compose(p_star, q_star)) {
    throw DomainError("the two pairs compose to different polynomials");
  }
  if (canonicalize({p, q}) == canonicalize({p_star, q_star})) {
    throw DomainError("the two pairs are unit-equivalent");
  }
  if (std::gcd(p.degree(), q.degree()) != 1) {
    throw PatternMismatch("swap degrees are not coprime");
  }
  auto kp = scaled_chebyshev(p), kq = scaled_chebyshev(q);
  auto kps = scaled_chebyshev(p_star), kqs = scaled_chebyshev(q_star);
  if (kp && kq && kps && kqs && *kp == *kqs && *kq == *kps) {
    OddSwap out{OddSwapKind::kChebyshev, 0, 0, Polynomial(), *kp, *kq};
    return out;
  }
  if (auto w = power_swap(q, p_star, q_star, p, OddSwapKind::kPowerLeft)) {
    return *w;
  }
  if (auto w = power_swap(p, q_star, q, p_star, OddSwapKind::kPowerRight)) {
    return *w;
  }
  throw PatternMismatch("no odd swap pattern matches");
}

}  // namespace polydecomp
