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

#include "polydecomp/classify.h"

#include <algorithm>
#include <numeric>

#include "polydecomp/decompose.h"
#include "polydecomp/errors.h"

namespace polydecomp {

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// The only point a centred form can use: the subleading coefficient of
// a (x - c)^n + ... pins c.
Rational forced_center(const Polynomial& p) {
  const std::size_t n = p.degree();
  return -p.coeff(n - 1) / (Rational(static_cast<long>(n)) * p.leading());
}

std::vector<QWitness> power_inside(const Polynomial& p) {
  std::vector<QWitness> out;
  const Rational c = forced_center(p);
  const Rational base = evaluate(p, c);
  const Polynomial q =
      compose(p, Polynomial({c, Rational(1)})) - Polynomial::constant(base);
  std::vector<std::size_t> support;
  for (std::size_t e = 0; e < q.size(); ++e) {
    if (!q.coeff(e).is_zero()) support.push_back(e);
  }
  if (support.size() < 2) return out;
  const std::size_t s = support.front();
  std::size_t spread = 0;
  for (std::size_t e : support) spread = std::gcd(spread, e - s);
  for (std::size_t l = 2; l <= spread; ++l) {
    if (spread % l != 0 || !is_prime(l)) continue;
    std::vector<Rational> g((q.degree() - s) / l + 1);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = q.coeff(s + l * k);
    QWitness w{QVariant::kPowerInside, static_cast<unsigned>(l),
               static_cast<unsigned>(s), Polynomial(std::move(g)),
               Unit(base, 1), Unit(-c, 1)};
    out.push_back(std::move(w));
  }
  return out;
}

// Res_x(p', p - y) as a polynomial in y, by interpolation.
Polynomial critical_value_polynomial(const Polynomial& p) {
  const Polynomial dp = derivative(p);
  const std::size_t m = dp.degree();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= m; ++k) {
    const Rational y(static_cast<long>(k));
    xs.push_back(y);
    ys.push_back(resultant(dp, p - Polynomial::constant(y)));
  }
  return interpolate(xs, ys);
}

std::optional<QWitness> power_outside_at(const Polynomial& p,
                                         const Rational& kappa,
                                         std::size_t l) {
  const auto parts = squarefree_decomposition(p - Polynomial::constant(kappa));
  std::optional<std::size_t> lone;
  Polynomial h = Polynomial::constant(1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t k = i + 1;
    if (parts[i].is_constant()) continue;
    if (k % l != 0) {
      if (lone) return std::nullopt;
      lone = i;
    } else {
      h = h * pow(parts[i], k / l);
    }
  }
  if (!lone || parts[*lone].degree() != 1 || h.is_constant()) {
    return std::nullopt;
  }
  const Rational beta = -parts[*lone].coeff(0);
  QWitness w{QVariant::kPowerOutside, static_cast<unsigned>(l),
             static_cast<unsigned>(*lone + 1),
             compose(h, Polynomial({beta, Rational(1)})),
             Unit(kappa, p.leading()), Unit(-beta, 1)};
  return w;
}

std::vector<QWitness> power_outside(const Polynomial& p,
                                    bool& irrational_candidate) {
  std::vector<QWitness> out;
  const std::size_t n = p.degree();
  const std::size_t threshold = n / 2;  // ceil((n - 1) / 2)
  const auto parts = squarefree_decomposition(critical_value_polynomial(p));
  std::vector<Rational> candidates;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < threshold || parts[i].is_constant()) continue;
    const auto roots = rational_roots(parts[i]);
    if (roots.size() < parts[i].degree()) irrational_candidate = true;
    candidates.insert(candidates.end(), roots.begin(), roots.end());
  }
  std::sort(candidates.begin(), candidates.end());
  for (std::size_t l = 2; l <= n; ++l) {
    if (!is_prime(l)) continue;
    for (const Rational& kappa : candidates) {
      if (auto w = power_outside_at(p, kappa, l)) out.push_back(std::move(*w));
    }
  }
  return out;
}

}  // namespace

std::optional<ShapeClass> p_shape(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2) {
    throw DomainError("shape classification needs degree at least 2");
  }
  const std::size_t n = p.degree();
  if (!is_prime(n)) return std::nullopt;
  const Rational c = forced_center(p);
  const Rational base = evaluate(p, c);
  const Polynomial q =
      compose(p, Polynomial({c, Rational(1)})) - Polynomial::constant(base);
  if (q != Polynomial::monomial(p.leading(), n)) return std::nullopt;
  ShapeClass out;
  out.tag = ShapeTag::P;
  out.l = static_cast<unsigned>(n);
  out.center = c;
  out.left = Unit(base, p.leading());
  return out;
}

std::vector<QWitness> q_shapes(const Polynomial& p,
                               bool& irrational_candidate) {
  if (p.is_zero() || p.degree() < 2) {
    throw DomainError("shape classification needs degree at least 2");
  }
  std::vector<QWitness> out = power_inside(p);
  std::vector<QWitness> outside = power_outside(p, irrational_candidate);
  out.insert(out.end(), outside.begin(), outside.end());
  return out;
}

ShapeClass classify_indecomposable(const Polynomial& p) {
  if (auto shape = p_shape(p)) return *shape;
  bool irrational = false;
  ShapeClass out;
  out.witnesses = q_shapes(p, irrational);
  if (!out.witnesses.empty()) {
    out.tag = ShapeTag::Q;
  } else {
    out.tag = irrational ? ShapeTag::Undetermined : ShapeTag::R;
  }
  return out;
}

ShapeClass classify_shape(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2) {
    throw DomainError("shape classification needs degree at least 2");
  }
  if (!is_indecomposable(p)) {
    throw DomainError("shape classification needs an indecomposable input");
  }
  return classify_indecomposable(p);
}

Polynomial witness_core(const QWitness& w) {
  const Polynomial xs = Polynomial::monomial(1, w.s);
  if (w.variant == QVariant::kPowerInside) {
    return xs * compose(w.g, Polynomial::monomial(1, w.l));
  }
  return xs * pow(w.g, w.l);
}

Polynomial reconstruct(const QWitness& w) {
  return compose(w.left, compose(witness_core(w), w.right));
}

Polynomial reconstruct(const ShapeClass& c) {
  switch (c.tag) {
    case ShapeTag::P:
      return compose(c.left,
                     compose(Polynomial::monomial(1, c.l),
                             Polynomial({-c.center, Rational(1)})));
    case ShapeTag::Q:
      return reconstruct(c.witnesses.front());
    default:
      throw DomainError("only P and Q classifications carry a witness");
  }
}

const char* to_string(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::P: return "P";
    case ShapeTag::Q: return "Q";
    case ShapeTag::R: return "R";
    case ShapeTag::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(QVariant variant) {
  return variant == QVariant::kPowerInside ? "power_inside" : "power_outside";
}

RittInvariants invariants_of(std::span<const Polynomial> factors) {
  RittInvariants out;
  for (const Polynomial& f : factors) {
    const ShapeClass c = classify_indecomposable(f);
    switch (c.tag) {
      case ShapeTag::P:
        ++out.n_p;
        ++out.n_p_by_prime[c.l];
        break;
      case ShapeTag::Q: ++out.n_q; break;
      case ShapeTag::R: ++out.n_r; break;
      case ShapeTag::Undetermined: ++out.n_undetermined; break;
    }
  }
  return out;
}

RittInvariants ritt_invariants(const Polynomial& a) {
  return invariants_of(complete_decomposition(a).factors);
}

}  // namespace polydecomp
