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

#include "polydecomp/decompose.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "int_poly.h"
#include "polydecomp/errors.h"

namespace polydecomp {

namespace {

using detail::mod_add;
using detail::mod_inv;
using detail::mod_mul;
using detail::mod_sub;

std::uint64_t mod_from_signed(long v) {
  return v >= 0 ? static_cast<std::uint64_t>(v)
                : detail::kModPrime - static_cast<std::uint64_t>(-v);
}

// Same construction as the exact path, over the integers mod a prime. A
// nonconstant digit here proves there is no right factor of degree d.
bool modular_candidate_survives(const std::vector<std::uint64_t>& a,
                                std::size_t d, std::size_t r) {
  const std::size_t n = a.size() - 1;
  const std::uint64_t inv_lead = mod_inv(a[n]);
  const std::uint64_t alpha = mod_inv(r);
  std::vector<std::uint64_t> f(d), s(d);
  for (std::size_t j = 0; j < d; ++j) f[j] = mod_mul(a[n - j], inv_lead);
  s[0] = 1;
  for (std::size_t k = 1; k < d; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      const std::uint64_t w =
          mod_sub(mod_mul(alpha, j), mod_from_signed(static_cast<long>(k - j)));
      acc = mod_add(acc, mod_mul(w, mod_mul(f[j], s[k - j])));
    }
    s[k] = mod_mul(acc, mod_inv(k));
  }
  std::vector<std::uint64_t> h(d + 1, 0);
  for (std::size_t k = 0; k < d; ++k) h[d - k] = s[k];

  std::vector<std::uint64_t> cur = a;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t top = cur.size() - 1;
    std::vector<std::uint64_t> quot(top - d + 1, 0);
    for (std::size_t k = top + 1; k-- > d;) {
      const std::uint64_t q = cur[k];
      if (q == 0) continue;
      quot[k - d] = q;
      for (std::size_t j = 0; j < d; ++j) {
        if (h[j] != 0) cur[k - d + j] = mod_sub(cur[k - d + j], mod_mul(q, h[j]));
      }
      cur[k] = 0;
    }
    for (std::size_t j = 1; j < d; ++j) {
      if (cur[j] != 0) return false;
    }
    cur = std::move(quot);
  }
  return true;
}

// Monic h of degree d, h(0) = 0, whose r-th power agrees with a / lc(a) in
// the top d coefficients: the r-th root of the reversed series.
Polynomial series_root(const Polynomial& a, std::size_t d, std::size_t r) {
  const std::size_t n = a.degree();
  const Rational inv_lead = Rational(1) / a.leading();
  const Rational alpha = Rational(1) / Rational(static_cast<long>(r));
  std::vector<Rational> f(d), s(d);
  for (std::size_t j = 0; j < d; ++j) f[j] = a.coeff(n - j) * inv_lead;
  s[0] = 1;
  for (std::size_t k = 1; k < d; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (f[j].is_zero() || s[k - j].is_zero()) continue;
      const Rational w = alpha * Rational(static_cast<long>(j)) -
                         Rational(static_cast<long>(k - j));
      acc += w * f[j] * s[k - j];
    }
    s[k] = acc / Rational(static_cast<long>(k));
  }
  std::vector<Rational> h(d + 1);
  for (std::size_t k = 0; k < d; ++k) h[d - k] = s[k];
  return Polynomial(std::move(h));
}

std::string class_key(std::span<const Polynomial> factors) {
  std::string key;
  for (const Polynomial& f : factors) {
    for (const Rational& c : f.coeffs()) {
      key += c.to_string();
      key += ',';
    }
    key += ';';
  }
  return key;
}

std::vector<std::size_t> proper_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

void check_degree(const Polynomial& a) {
  if (a.is_zero() || a.degree() < 2) {
    throw DomainError("polynomial of degree at least 2 required");
  }
}

// Basis of the null space of m (rows x cols), by reduced row echelon form.
std::vector<std::vector<Rational>> null_space(
    std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = Rational(1) / m[row][col];
    for (Rational& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) !=
        pivot_cols.end()) {
      continue;
    }
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = -m[i][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<std::pair<Polynomial, Polynomial>> right_factor(
    const Polynomial& a, std::size_t d) {
  check_degree(a);
  const std::size_t n = a.degree();
  if (d <= 1 || d >= n || n % d != 0) {
    throw DomainError("right factor degree must be a proper divisor of " +
                      std::to_string(n));
  }
  const std::size_t r = n / d;
  if (auto reduced = detail::mod_reduce(a); reduced && (*reduced)[n] != 0) {
    if (!modular_candidate_survives(*reduced, d, r)) return std::nullopt;
  }
  const Polynomial h = series_root(a, d, r);
  // Base-h expansion: a = sum c_i h^i, accepted iff every digit is constant.
  std::vector<Rational> digits(r + 1);
  Polynomial cur = a;
  for (std::size_t i = 0; i < r; ++i) {
    auto [q, rem] = divmod(cur, h);
    if (!rem.is_constant()) return std::nullopt;
    digits[i] = rem.coeff(0);
    cur = std::move(q);
  }
  if (!cur.is_constant()) return std::nullopt;
  digits[r] = cur.coeff(0);
  return std::make_pair(Polynomial(std::move(digits)), h);
}

bool is_indecomposable(const Polynomial& a) {
  check_degree(a);
  for (std::size_t d : proper_divisors(a.degree())) {
    if (right_factor(a, d)) return false;
  }
  return true;
}

Decomposition complete_decomposition(const Polynomial& a) {
  check_degree(a);
  std::vector<Polynomial> rights;
  Polynomial cur = a;
  while (true) {
    bool split = false;
    for (std::size_t d : proper_divisors(cur.degree())) {
      if (auto gh = right_factor(cur, d)) {
        rights.push_back(std::move(gh->second));
        cur = std::move(gh->first);
        split = true;
        break;
      }
    }
    if (!split) break;
  }
  Decomposition out;
  out.target = a;
  out.factors.push_back(std::move(cur));
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) {
    out.factors.push_back(std::move(*it));
  }
  return out;
}

std::vector<Polynomial> canonicalize(std::vector<Polynomial> factors) {
  for (std::size_t i = factors.size(); i-- > 1;) {
    const Polynomial& f = factors[i];
    const Unit u(f.coeff(0), f.leading());
    if (u == Unit::identity()) continue;
    factors[i] = (f - Polynomial::constant(u.shift())) *
                 (Rational(1) / u.scale());
    factors[i - 1] = compose(factors[i - 1], u);
  }
  return factors;
}

std::vector<std::size_t> degree_sequence(std::span<const Polynomial> factors) {
  std::vector<std::size_t> out;
  out.reserve(factors.size());
  for (const Polynomial& f : factors) out.push_back(f.degree());
  return out;
}

bool class_less(const Decomposition& a, const Decomposition& b) {
  const auto da = degree_sequence(a.factors);
  const auto db = degree_sequence(b.factors);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const auto ca = a.factors[i].coeffs();
    const auto cb = b.factors[i].coeffs();
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (ca[k] != cb[k]) return ca[k] < cb[k];
    }
  }
  return false;
}

std::vector<DecompositionClass> enumerate_classes_from(const Decomposition& d) {
  std::vector<DecompositionClass> found;
  std::set<std::string> seen;
  std::deque<std::vector<Polynomial>> frontier;
  auto visit = [&](std::vector<Polynomial> factors) {
    factors = canonicalize(std::move(factors));
    if (!seen.insert(class_key(factors)).second) return;
    found.push_back({d.target, factors});
    frontier.push_back(std::move(factors));
  };
  visit(d.factors);
  while (!frontier.empty()) {
    const std::vector<Polynomial> state = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < state.size(); ++i) {
      const Polynomial c = compose(state[i], state[i + 1]);
      for (std::size_t deg : proper_divisors(c.degree())) {
        if (deg == state[i + 1].degree()) continue;
        auto gh = right_factor(c, deg);
        if (!gh) continue;
        std::vector<Polynomial> next(state.begin(), state.begin() + i);
        // A swap normally yields two indecomposables; refine anyway so that
        // a longer chain, if one ever appeared, would surface in the result.
        for (const Polynomial* part : {&gh->first, &gh->second}) {
          const Decomposition sub = complete_decomposition(*part);
          next.insert(next.end(), sub.factors.begin(), sub.factors.end());
        }
        next.insert(next.end(), state.begin() + i + 2, state.end());
        visit(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end(), class_less);
  return found;
}

std::vector<DecompositionClass> enumerate_classes(const Polynomial& a) {
  return enumerate_classes_from(complete_decomposition(a));
}

Ritt1Report ritt1_check(std::span<const DecompositionClass> classes) {
  Ritt1Report report;
  report.class_count = classes.size();
  if (classes.empty()) return report;
  auto multiset = [](const Decomposition& d) {
    auto v = degree_sequence(d.factors);
    std::sort(v.begin(), v.end());
    return v;
  };
  report.length = classes.front().factors.size();
  report.degree_multiset = multiset(classes.front());
  report.pass = std::all_of(classes.begin(), classes.end(),
                            [&](const Decomposition& d) {
                              return d.factors.size() == report.length &&
                                     multiset(d) == report.degree_multiset;
                            });
  return report;
}

Ritt1Report ritt1_check(const Polynomial& a) {
  const auto classes = enumerate_classes(a);
  return ritt1_check(classes);
}

std::optional<CommonComposite> common_composite(const Polynomial& a,
                                                const Polynomial& b,
                                                std::size_t degree_bound) {
  check_degree(a);
  check_degree(b);
  const std::size_t m = a.degree(), n = b.degree();
  const std::size_t l = std::lcm(m, n);
  if (l > degree_bound) {
    throw DomainError("lcm of the degrees (" + std::to_string(l) +
                      ") exceeds the degree bound");
  }
  const std::size_t ni = l / m, nj = l / n;
  std::vector<Polynomial> powers;
  Polynomial p = Polynomial::constant(1);
  for (std::size_t i = 1; i <= ni; ++i) powers.push_back(p = p * a);
  p = Polynomial::constant(1);
  for (std::size_t j = 1; j <= nj; ++j) powers.push_back(-(p = p * b));
  // Columns: alpha_1..alpha_I then beta_1..beta_J; rows: x^1..x^L.
  const std::size_t cols = ni + nj;
  std::vector<std::vector<Rational>> rows(l, std::vector<Rational>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t e = 1; e <= l; ++e) rows[e - 1][c] = powers[c].coeff(e);
  }
  for (const auto& v : null_space(std::move(rows), cols)) {
    if (v[ni - 1].is_zero()) continue;
    std::vector<Rational> alpha(ni + 1), beta(nj + 1);
    for (std::size_t i = 0; i < ni; ++i) alpha[i + 1] = v[i];
    for (std::size_t j = 0; j < nj; ++j) beta[j + 1] = v[ni + j];
    Polynomial al(std::move(alpha)), be(std::move(beta));
    Polynomial c = compose(al, a);
    const Rational lead = c.leading();
    const Rational c0 = c.coeff(0);
    const Rational b0 = compose(be, b).coeff(0);
    al = (al - Polynomial::constant(c0)) * (Rational(1) / lead);
    be = (be - Polynomial::constant(b0)) * (Rational(1) / lead);
    c = (c - Polynomial::constant(c0)) * (Rational(1) / lead);
    if (compose(be, b) != c) {
      throw std::logic_error("common composite failed to verify");
    }
    return CommonComposite{std::move(c), std::move(al), std::move(be)};
  }
  return std::nullopt;
}

}  // namespace polydecomp
