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

#include "polydecomp/cusp.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "polydecomp/chebyshev.h"
#include "polydecomp/classify.h"
#include "polydecomp/errors.h"

namespace polydecomp {

namespace {

void require_in_A(const Polynomial& a) {
  if (a.is_zero() || a.degree() < 2) {
    throw DomainError("polynomial of degree at least 2 required");
  }
  if (!in_A(a)) throw DomainError("polynomial is not in A (a'(0) != 0)");
}

Polynomial shift_poly(const Rational& s) { return Polynomial({s, Rational(1)}); }

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Rational t with (chain[0] o chain[1] o ...)(t) == value.
std::vector<Rational> chain_preimages(std::span<const Polynomial> chain,
                                      const Rational& value) {
  if (chain.empty()) return {value};
  std::vector<Rational> out;
  for (const Rational& y :
       rational_roots(chain.front() - Polynomial::constant(value))) {
    auto more = chain_preimages(chain.subspan(1), y);
    out.insert(out.end(), more.begin(), more.end());
  }
  sort_unique(out);
  return out;
}

std::string factors_key(std::span<const Polynomial> factors) {
  std::string key;
  for (const Polynomial& f : factors) {
    for (const Rational& c : f.coeffs()) key += c.to_string() + ",";
    key += ";";
  }
  return key;
}

// f == A T_k(mu (x - c)) + B for an odd prime k, mu^2 rational.
std::optional<unsigned> shifted_chebyshev_degree(const Polynomial& f) {
  if (f.is_zero() || f.degree() < 3 || f.degree() % 2 == 0) return std::nullopt;
  const unsigned k = static_cast<unsigned>(f.degree());
  for (unsigned d = 2; d * d <= k; ++d) {
    if (k % d == 0) return std::nullopt;
  }
  const Rational c =
      -f.coeff(k - 1) / (Rational(static_cast<long>(k)) * f.leading());
  const Polynomial g = compose(f, shift_poly(c)) -
                       Polynomial::constant(evaluate(f, c));
  const Polynomial t = chebyshev(k);
  if (g.coeff(k - 2).is_zero()) return std::nullopt;
  const Rational top = g.coeff(k) / t.coeff(k);
  const Rational r = top / (g.coeff(k - 2) / t.coeff(k - 2));
  Rational expected = top;
  for (unsigned e = k + 1; e-- > 0;) {
    if ((k - e) % 2 == 1) {
      if (!g.coeff(e).is_zero()) return std::nullopt;
      continue;
    }
    if (g.coeff(e) != expected * t.coeff(e)) return std::nullopt;
    expected /= r;
  }
  return k;
}

// The admissible shift a move introduces for f.
Rational pick_shift(const Polynomial& f, const std::optional<Rational>& wanted) {
  const Polynomial df = derivative(f);
  if (wanted) {
    if (!evaluate(df, *wanted).is_zero()) {
      throw DomainError("shift " + wanted->to_string() +
                        " is not admissible: not a root of the derivative");
    }
    return *wanted;
  }
  const auto roots = rational_roots(df);
  if (roots.empty()) {
    throw IrrationalRootRequired(
        "no rational root of the derivative: the admissible unit would be "
        "irrational");
  }
  if (std::binary_search(roots.begin(), roots.end(), Rational(0))) return 0;
  return roots.front();
}

std::size_t lowest_exponent(const Polynomial& p) {
  std::size_t e = 0;
  while (p.coeff(e).is_zero()) ++e;
  return e;
}

}  // namespace

bool in_A(const Polynomial& p) { return p.coeff(1).is_zero(); }

CompositionInA compose_in_A_criterion(const Polynomial& a,
                                      const Polynomial& b) {
  CompositionInA out;
  if (in_A(b)) {
    out.branch = ABranch::kRightInA;
  } else if (evaluate(derivative(a), b.coeff(0)).is_zero()) {
    out.branch = ABranch::kCriticalValue;
  }
  out.in_a = out.branch != ABranch::kNeither;
  return out;
}

std::vector<Rational> admissible_shifts(const Polynomial& f) {
  if (f.is_constant()) throw DomainError("admissible shifts need nonconstant f");
  return rational_roots(derivative(f));
}

std::vector<Rational> chain_critical_points(std::span<const Polynomial> chain) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const Polynomial d = derivative(chain[j]);
    if (d.is_zero()) continue;
    for (const Rational& rho : rational_roots(d)) {
      auto pts = chain_preimages(chain.subspan(j + 1), rho);
      out.insert(out.end(), pts.begin(), pts.end());
    }
  }
  sort_unique(out);
  return out;
}

const char* to_string(CuspClass c) {
  switch (c) {
    case CuspClass::kC: return "C";
    case CuspClass::kD: return "D";
    case CuspClass::kNotIrreducibleInA: return "not_irreducible_in_A";
  }
  return "?";
}

const char* to_string(ABranch b) {
  switch (b) {
    case ABranch::kRightInA: return "right_in_A";
    case ABranch::kCriticalValue: return "critical_value";
    case ABranch::kNeither: return "neither";
  }
  return "?";
}

const char* to_string(CuspMove m) {
  switch (m) {
    case CuspMove::kAdm: return "adm";
    case CuspMove::kCa: return "ca";
    case CuspMove::kCb: return "cb";
    case CuspMove::kCc: return "cc";
  }
  return "?";
}

std::vector<std::size_t> zero_positions(std::span<const Polynomial> factors) {
  std::vector<std::size_t> out;
  Rational v = 0;
  for (std::size_t i = factors.size(); i-- > 0;) {
    if (evaluate(derivative(factors[i]), v).is_zero()) out.push_back(i + 1);
    v = evaluate(factors[i], v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

CuspClass classify_CD(const Polynomial& p) {
  require_in_A(p);
  if (is_indecomposable(p)) return CuspClass::kC;
  for (const Decomposition& cls : enumerate_classes(p)) {
    // Tail p_2 o ... o p_r has zero derivative at 0 iff some factor of the
    // tail has a critical point at the value fed into it.
    const auto zeros =
        zero_positions(std::span<const Polynomial>(cls.factors).subspan(1));
    if (!zeros.empty()) return CuspClass::kNotIrreducibleInA;
  }
  return CuspClass::kD;
}

std::size_t index_at_zero(const Polynomial& a) {
  require_in_A(a);
  std::size_t index = 0;
  for (const Decomposition& cls : enumerate_classes(a)) {
    for (std::size_t i : zero_positions(cls.factors)) index = std::max(index, i);
  }
  return index;
}

CuspReport cusp_report(const Polynomial& a) {
  require_in_A(a);
  const auto classes = enumerate_classes(a);
  CuspReport report;
  report.l = classes.front().factors.size();
  std::vector<std::vector<std::size_t>> zeros;
  for (const Decomposition& cls : classes) {
    zeros.push_back(zero_positions(cls.factors));
    if (!zeros.back().empty()) {
      report.index = std::max(report.index, zeros.back().back());
    }
  }
  report.l_a = report.index;
  report.defect = report.l - report.l_a;
  report.regular = report.defect == 0;
  bool have_witness = false;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (zeros[c].empty() || zeros[c].back() != report.index) continue;
    bool realizable = true;
    for (std::size_t j = 0; j + 1 < report.index; ++j) {
      if (admissible_shifts(classes[c].factors[j]).empty()) realizable = false;
    }
    if (!have_witness || (realizable && !report.rational_realizable)) {
      report.witness = classes[c];
      report.rational_realizable = realizable;
      have_witness = true;
    }
  }
  return report;
}

ADecompositionSet enumerate_A_decompositions(const Polynomial& a) {
  require_in_A(a);
  ADecompositionSet out;
  std::set<std::string> seen;
  std::map<std::string, CuspClass> cd_cache;
  auto cd = [&](const Polynomial& q) {
    const std::string key = factors_key(std::span<const Polynomial>(&q, 1));
    auto it = cd_cache.find(key);
    if (it != cd_cache.end()) return it->second;
    const CuspClass c = classify_CD(q);
    cd_cache.emplace(key, c);
    return c;
  };
  for (const Decomposition& cls : enumerate_classes(a)) {
    const std::size_t r = cls.factors.size();
    const std::span<const Polynomial> f(cls.factors);
    for (std::size_t mask = 0; mask < (std::size_t{1} << (r - 1)); ++mask) {
      std::vector<std::size_t> sizes;
      std::size_t run = 1;
      for (std::size_t j = 0; j + 1 < r; ++j) {
        if (mask & (std::size_t{1} << j)) {
          sizes.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      sizes.push_back(run);
      const std::size_t k = sizes.size();
      std::vector<Polynomial> blocks;
      std::vector<std::vector<Rational>> shifts;
      std::size_t at = 0;
      for (std::size_t b = 0; b < k; ++b) {
        const auto part = f.subspan(at, sizes[b]);
        at += sizes[b];
        blocks.push_back(compose_chain(part));
        if (b + 1 < k) shifts.push_back(chain_critical_points(part));
      }
      if (!in_A(blocks.back())) continue;
      if (std::any_of(shifts.begin(), shifts.end(),
                      [](const auto& s) { return s.empty(); })) {
        continue;
      }
      std::vector<std::size_t> choice(k - 1, 0);
      while (true) {
        std::vector<Polynomial> qs;
        std::vector<CuspClass> kinds;
        bool ok = true;
        Rational prev = 0;
        for (std::size_t b = 0; b < k && ok; ++b) {
          Polynomial q = blocks[b] - Polynomial::constant(prev);
          if (b + 1 < k) {
            const Rational& s = shifts[b][choice[b]];
            q = compose(q, shift_poly(s));
            prev = s;
          }
          const CuspClass c = cd(q);
          if (c == CuspClass::kNotIrreducibleInA) ok = false;
          kinds.push_back(c);
          qs.push_back(std::move(q));
        }
        if (ok && seen.insert(factors_key(qs)).second) {
          out.members.push_back({std::move(qs), std::move(kinds), sizes});
        }
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == shifts[pos].size()) {
          choice[pos++] = 0;
        }
        if (pos == choice.size()) break;
      }
    }
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const ADecomposition& x, const ADecomposition& y) {
              if (x.factors.size() != y.factors.size()) {
                return x.factors.size() < y.factors.size();
              }
              return class_less({Polynomial(), x.factors},
                                {Polynomial(), y.factors});
            });
  for (const ADecomposition& m : out.members) out.lengths.push_back(m.factors.size());
  out.lengths.erase(std::unique(out.lengths.begin(), out.lengths.end()),
                    out.lengths.end());
  return out;
}

MaxSkeleton max_decompositions(const Polynomial& a) {
  require_in_A(a);
  const auto classes = enumerate_classes(a);
  MaxSkeleton out;
  std::vector<std::vector<std::size_t>> zeros;
  for (const Decomposition& cls : classes) {
    zeros.push_back(zero_positions(cls.factors));
    if (!zeros.back().empty()) {
      out.length = std::max(out.length, zeros.back().back());
    }
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::find(zeros[c].begin(), zeros[c].end(), out.length) ==
        zeros[c].end()) {
      continue;
    }
    MaxBase base;
    base.base = classes[c];
    base.rational_realizable = true;
    for (std::size_t j = 0; j + 1 < out.length; ++j) {
      base.shift_sets.push_back(admissible_shifts(classes[c].factors[j]));
      if (base.shift_sets.back().empty()) base.rational_realizable = false;
    }
    out.bases.push_back(std::move(base));
  }
  return out;
}

std::vector<Polynomial> instantiate(const MaxBase& base,
                                    std::span<const Rational> shifts) {
  const std::size_t i = base.shift_sets.size() + 1;
  if (shifts.size() != i - 1) {
    throw DomainError("expected " + std::to_string(i - 1) + " shifts");
  }
  const auto& p = base.base.factors;
  std::vector<Polynomial> out;
  Rational prev = 0;
  for (std::size_t j = 0; j + 1 < i; ++j) {
    if (!evaluate(derivative(p[j]), shifts[j]).is_zero()) {
      throw DomainError("shift " + shifts[j].to_string() +
                        " is not admissible for factor " +
                        std::to_string(j + 1));
    }
    out.push_back(compose(p[j] - Polynomial::constant(prev),
                          shift_poly(shifts[j])));
    prev = shifts[j];
  }
  out.push_back(compose_chain(std::span<const Polynomial>(p).subspan(i - 1)) -
                Polynomial::constant(prev));
  return out;
}

std::vector<std::vector<Polynomial>> max_members(const MaxSkeleton& skeleton,
                                                 std::size_t limit) {
  std::vector<std::vector<Polynomial>> out;
  for (const MaxBase& base : skeleton.bases) {
    if (!base.rational_realizable) continue;
    std::vector<std::size_t> choice(base.shift_sets.size(), 0);
    while (out.size() < limit) {
      std::vector<Rational> shifts;
      for (std::size_t j = 0; j < choice.size(); ++j) {
        shifts.push_back(base.shift_sets[j][choice[j]]);
      }
      out.push_back(instantiate(base, shifts));
      std::size_t pos = 0;
      while (pos < choice.size() &&
             ++choice[pos] == base.shift_sets[pos].size()) {
        choice[pos++] = 0;
      }
      if (pos == choice.size()) break;
    }
  }
  return out;
}

std::vector<Polynomial> undo_adm(std::span<const Polynomial> factors,
                                 std::size_t pos, const Rational& shift) {
  if (pos < 1 || pos >= factors.size()) {
    throw DomainError("position out of range");
  }
  std::vector<Polynomial> out(factors.begin(), factors.end());
  out[pos - 1] = compose(out[pos - 1], shift_poly(-shift));
  out[pos] = out[pos] + Polynomial::constant(shift);
  return out;
}

CuspMoveResult apply_cusp_move(std::span<const Polynomial> factors,
                               std::size_t pos, CuspMove kind,
                               const std::optional<Rational>& shift) {
  const std::size_t r = factors.size();
  if (pos < 1 || pos >= r) {
    throw DomainError("position " + std::to_string(pos) +
                      " out of range: the move needs factors " +
                      std::to_string(pos) + " and " + std::to_string(pos + 1) +
                      " of " + std::to_string(r));
  }
  const std::size_t i = pos - 1, j = pos;
  const bool terminal = j + 1 == r;
  std::vector<Polynomial> out(factors.begin(), factors.end());
  switch (kind) {
    case CuspMove::kAdm: {
      const Rational s = pick_shift(factors[i], shift);
      out[i] = compose(factors[i], shift_poly(s));
      out[j] = factors[j] - Polynomial::constant(s);
      break;
    }
    case CuspMove::kCa: {
      const auto k = shifted_chebyshev_degree(factors[i]);
      const auto l = shifted_chebyshev_degree(factors[j]);
      if (!k || !l || *k == *l) {
        throw PatternMismatch(
            "Ca needs two Chebyshev factors of distinct odd prime degree");
      }
      // After the swap the new left factor needs a T_l-admissible unit and
      // the new right factor a T_k-admissible one.
      for (unsigned n : {*l, *k}) {
        if (rational_roots(derivative(chebyshev(n))).empty()) {
          throw IrrationalRootRequired(
              "the Chebyshev swap needs a root of T_" + std::to_string(n) +
              "', which has no rational roots");
        }
      }
      throw std::logic_error("Chebyshev swap with rational admissible units");
    }
    case CuspMove::kCb: {
      const auto ps = p_shape(factors[i]);
      if (!ps) throw PatternMismatch("Cb needs a power-shaped left factor");
      const std::size_t p = ps->l;
      const Polynomial moved =
          factors[j] - Polynomial::constant(ps->center);  // (x - c) o p_j
      if (std::gcd(p, moved.degree()) != 1) {
        throw PatternMismatch("Cb needs coprime degrees");
      }
      const std::size_t n = moved.degree();
      const Rational beta =
          -moved.coeff(n - 1) / (Rational(static_cast<long>(n)) * moved.leading());
      if (!evaluate(moved, beta).is_zero()) {
        throw PatternMismatch("Cb right factor has no x^s g(x^p) form");
      }
      const Polynomial core = compose(moved, shift_poly(beta));
      const std::size_t s = lowest_exponent(core);
      for (std::size_t e = s; e <= n; ++e) {
        if (!core.coeff(e).is_zero() && (e - s) % p != 0) {
          throw PatternMismatch("Cb right factor has no x^s g(x^p) form");
        }
      }
      std::vector<Rational> g((n - s) / p + 1);
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = core.coeff(s + p * k);
      const Polynomial swapped = compose(
          ps->left, Polynomial::monomial(1, s) * pow(Polynomial(g), p));
      if (terminal && !beta.is_zero()) {
        throw PatternMismatch(
            "terminal Cb needs the right factor centred at 0");
      }
      const Rational w = pick_shift(swapped, shift);
      out[i] = compose(swapped, shift_poly(w));
      out[j] = Polynomial::monomial(1, p) - Polynomial::constant(w);
      if (!terminal) out[j + 1] = factors[j + 1] - Polynomial::constant(beta);
      break;
    }
    case CuspMove::kCc: {
      const auto ps = p_shape(factors[j]);
      if (!ps || !ps->center.is_zero()) {
        throw PatternMismatch("Cc needs a right factor A + B x^p");
      }
      const std::size_t p = ps->l;
      if (std::gcd(p, factors[i].degree()) != 1) {
        throw PatternMismatch("Cc needs coprime degrees");
      }
      const Polynomial big = compose(factors[i], Polynomial({factors[j].coeff(0),
                                                             factors[j].leading()}));
      const Rational base = big.coeff(0);
      const Polynomial f = big - Polynomial::constant(base);
      const std::size_t s = lowest_exponent(f);
      const Rational c = f.leading();
      Polynomial e(std::vector<Rational>(f.coeffs().begin() + s, f.coeffs().end()));
      e *= Rational(1) / c;
      const auto g = exact_root(e, static_cast<unsigned>(p));
      if (!g) throw PatternMismatch("Cc left factor has no x^s g^p form");
      const Polynomial spread =
          Polynomial::monomial(1, s) * compose(*g, Polynomial::monomial(1, p));
      out[i] = Polynomial::monomial(c, p) + Polynomial::constant(base);
      if (terminal) {
        if (shift && !shift->is_zero()) {
          throw DomainError("terminal Cc takes no shift");
        }
        if (s < 2) {
          throw PatternMismatch("terminal Cc would leave A (needs s >= 2)");
        }
        out[j] = spread;
      } else {
        const Rational z = pick_shift(spread, shift);
        out[j] = compose(spread, shift_poly(z));
        out[j + 1] = factors[j + 1] - Polynomial::constant(z);
      }
      break;
    }
  }
  if (compose_chain(out) != compose_chain(factors)) {
    throw std::logic_error("cusp move changed the composite");
  }
  CuspMoveResult result;
  result.all_in_A = std::all_of(out.begin(), out.end(),
                                [](const Polynomial& q) { return in_A(q); });
  result.factors = std::move(out);
  return result;
}

}  // namespace polydecomp
