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

#include "polydecomp/corpus.h"

#include <limits>

namespace polydecomp {

long CorpusRng::uniform(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v > limit);
  return lo + static_cast<long>(v % range);
}

Polynomial random_factor(CorpusRng& rng, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = rng.uniform(-3, 3);
  long lead = 0;
  while (lead == 0) lead = rng.uniform(-3, 3);
  c[degree] = lead;
  return Polynomial(std::move(c));
}

namespace {

const std::vector<std::size_t> kDegrees = {2, 3, 5, 7};

std::vector<Polynomial> random_chain(CorpusRng& rng, std::size_t count) {
  std::vector<Polynomial> factors;
  for (std::size_t j = 0; j < count; ++j) {
    factors.push_back(random_factor(rng, rng.pick(kDegrees)));
  }
  return factors;
}

// Sets the linear coefficient so that p'(rho) == 0.
Polynomial with_critical_point(const Polynomial& p, const Rational& rho) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  Rational rest;
  for (std::size_t k = 2; k < c.size(); ++k) {
    rest += Rational(static_cast<long>(k)) * c[k] * pow(rho, k - 1);
  }
  c[1] = -rest;
  return Polynomial(std::move(c));
}

}  // namespace

std::vector<CorpusElement> ritt_corpus(std::uint64_t seed, std::size_t count) {
  CorpusRng rng(seed);
  std::vector<CorpusElement> out;
  for (std::size_t n = 0; n < count; ++n) {
    CorpusElement e;
    e.factors = random_chain(rng, static_cast<std::size_t>(rng.uniform(2, 4)));
    e.target = compose_chain(e.factors);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusElement> cusp_corpus(std::uint64_t seed, std::size_t count,
                                       std::size_t max_factors) {
  CorpusRng rng(seed);
  std::vector<CorpusElement> out;
  for (std::size_t n = 0; n < count; ++n) {
    CorpusElement e;
    e.built_regular = n % 2 == 0;
    e.factors = random_chain(
        rng, static_cast<std::size_t>(rng.uniform(2, static_cast<long>(max_factors))));
    const std::size_t r = e.factors.size();
    for (std::size_t j = 0; j + 1 < r; ++j) {
      e.factors[j] = with_critical_point(e.factors[j], rng.uniform(-2, 2));
    }
    if (e.built_regular) {
      e.factors[r - 1] = with_critical_point(e.factors[r - 1], 0);
    } else {
      // Solve p_1's linear coefficient at the value the tail takes at 0.
      const Rational v =
          evaluate(compose_chain(std::span<const Polynomial>(e.factors).subspan(1)), 0);
      e.factors[0] = with_critical_point(e.factors[0], v);
    }
    e.target = compose_chain(e.factors);
    out.push_back(std::move(e));
  }
  return out;
}

Rational random_coefficient(CorpusRng& rng) {
  Rational c = rng.uniform(-3, 3);
  if (rng.uniform(0, 1) == 1) c /= 2;
  return c;
}

Polynomial random_polynomial(CorpusRng& rng, std::size_t min_degree,
                             std::size_t max_degree) {
  const std::size_t d = static_cast<std::size_t>(rng.uniform(
      static_cast<long>(min_degree), static_cast<long>(max_degree)));
  std::vector<Rational> c(d + 1);
  for (std::size_t i = 0; i < d; ++i) c[i] = random_coefficient(rng);
  while (c[d].is_zero()) c[d] = random_coefficient(rng);
  return Polynomial(std::move(c));
}

Polynomial random_odd_polynomial(CorpusRng& rng, std::size_t min_degree,
                                 std::size_t max_degree) {
  // Odd degrees only.
  std::vector<std::size_t> degrees;
  for (std::size_t d = min_degree; d <= max_degree; ++d) {
    if (d % 2 == 1) degrees.push_back(d);
  }
  const std::size_t d = rng.pick(degrees);
  std::vector<Rational> c(d + 1);
  for (std::size_t i = 1; i < d; i += 2) c[i] = random_coefficient(rng);
  while (c[d].is_zero()) c[d] = random_coefficient(rng);
  return Polynomial(std::move(c));
}

}  // namespace polydecomp
