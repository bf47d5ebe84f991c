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
#include <cstddef>
#include <vector>

#include "int_poly.h"
#include "polydecomp/errors.h"
#include "polydecomp/polynomial.h"

namespace polydecomp {

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> parts;
  if (p.is_constant()) return parts;
  const Polynomial f = make_monic(p);
  const Polynomial df = derivative(f);
  const Polynomial a0 = gcd(f, df);
  Polynomial b = divmod(f, a0).first;
  Polynomial c = divmod(df, a0).first;
  Polynomial d = c - derivative(b);
  while (!b.is_constant()) {
    const Polynomial a = gcd(b, d);
    parts.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - derivative(b);
  }
  while (!parts.empty() && parts.back().is_constant()) parts.pop_back();
  return parts;
}

namespace {

using detail::ZVec;

// Integer multiple of p with coprime coefficients and the sign of p kept.
ZVec primitive_same_sign(const Polynomial& p) {
  detail::IntPoly ip = detail::to_int_poly(p);
  mpz_class content = 0;
  for (const mpz_class& c : ip.num) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  for (mpz_class& c : ip.num) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
  return ip.num;
}

Polynomial from_z(const ZVec& v) {
  return detail::from_int_poly(v, mpz_class(1));
}

int sign_at(const ZVec& p, const mpz_class& t) {
  mpz_class acc = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    acc *= t;
    acc += p[k];
  }
  return sgn(acc);
}

class SturmChain {
 public:
  // `p` must be squarefree with degree >= 1.
  explicit SturmChain(const Polynomial& p) {
    Polynomial a = from_z(primitive_same_sign(p));
    Polynomial b = derivative(a);
    b = from_z(primitive_same_sign(b));
    chain_.push_back(primitive_same_sign(a));
    chain_.push_back(primitive_same_sign(b));
    while (!b.is_constant()) {
      Polynomial r = -divmod(a, b).second;
      if (r.is_zero()) break;
      r = from_z(primitive_same_sign(r));
      chain_.push_back(primitive_same_sign(r));
      a = std::move(b);
      b = std::move(r);
    }
  }

  const ZVec& base() const { return chain_.front(); }

  int variations(const mpz_class& t) const {
    int changes = 0, last = 0;
    for (const ZVec& q : chain_) {
      const int s = sign_at(q, t);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  int variations_at_infinity(bool positive) const {
    int changes = 0, last = 0;
    for (const ZVec& q : chain_) {
      int s = sgn(q.back());
      if (!positive && (q.size() - 1) % 2 == 1) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

 private:
  std::vector<ZVec> chain_;
};

Polynomial squarefree_part(const Polynomial& p) {
  return divmod(p, gcd(p, derivative(p))).first;
}

// Integer roots in (lo, hi] of the squarefree monic polynomial behind `chain`.
void integer_roots(const SturmChain& chain, const mpz_class& lo,
                   const mpz_class& hi, int v_lo, int v_hi,
                   std::vector<mpz_class>& out) {
  const int count = v_lo - v_hi;
  if (count == 0) return;
  const ZVec& q = chain.base();
  if (hi - lo == 1) {
    if (sign_at(q, hi) == 0) out.push_back(hi);
    return;
  }
  if (count == 1) {
    const int s_hi = sign_at(q, hi);
    if (s_hi == 0) {
      out.push_back(hi);
      return;
    }
    int s_lo = sign_at(q, lo);
    if (s_lo != 0) {
      // One simple root strictly inside: plain sign bisection.
      mpz_class a = lo, b = hi;
      while (b - a > 1) {
        mpz_class mid = a + b;
        mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
        const int s = sign_at(q, mid);
        if (s == 0) {
          out.push_back(mid);
          return;
        }
        if (s == s_lo) {
          a = mid;
        } else {
          b = mid;
        }
      }
      return;
    }
  }
  mpz_class mid = lo + hi;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
  const int v_mid = chain.variations(mid);
  integer_roots(chain, lo, mid, v_lo, v_mid, out);
  integer_roots(chain, mid, hi, v_mid, v_hi, out);
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.is_constant()) return roots;
  std::size_t low = 0;
  while (p.coeff(low).is_zero()) ++low;
  if (low > 0) roots.emplace_back(0);
  Polynomial rest(std::vector<Rational>(p.coeffs().begin() + low,
                                        p.coeffs().end()));
  if (!rest.is_constant()) {
    const ZVec s = primitive_same_sign(squarefree_part(rest));
    const std::size_t n = s.size() - 1;
    mpz_class lead = s.back();
    // Q(y) = L^(n-1) S(y / L) is monic with integer coefficients; rational
    // roots of S are y / L for the integer roots y of Q.
    ZVec q(n + 1);
    mpz_class lpow = 1;
    for (std::size_t i = n + 1; i-- > 0;) {
      if (i == n) {
        q[i] = 1;
        continue;
      }
      q[i] = s[i] * lpow;
      lpow *= lead;
    }
    const SturmChain chain(from_z(q));
    const int v_neg = chain.variations_at_infinity(false);
    const int v_pos = chain.variations_at_infinity(true);
    mpz_class bound = 2;
    while (true) {
      const int a = chain.variations(-bound);
      const int b = chain.variations(bound);
      if (a - b == v_neg - v_pos) {
        std::vector<mpz_class> ys;
        integer_roots(chain, -bound, bound, a, b, ys);
        for (const mpz_class& y : ys) roots.emplace_back(y, lead);
        break;
      }
      bound *= bound;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::size_t real_root_count(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("real roots of the zero polynomial");
  if (p.is_constant()) return 0;
  const SturmChain chain(squarefree_part(p));
  return static_cast<std::size_t>(chain.variations_at_infinity(false) -
                                  chain.variations_at_infinity(true));
}

}  // namespace polydecomp
