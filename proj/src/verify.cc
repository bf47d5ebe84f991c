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

#include "polydecomp/verify.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <span>

#include "polydecomp/chebyshev.h"
#include "polydecomp/classify.h"
#include "polydecomp/corpus.h"
#include "polydecomp/cusp.h"
#include "polydecomp/decompose.h"
#include "polydecomp/errors.h"
#include "polydecomp/odd_monoid.h"
#include "polydecomp/text.h"

namespace polydecomp {

namespace {

constexpr std::size_t kMaxFailures = 20;
// Cusp corpus elements are much more expensive than the other trials.
constexpr std::size_t kMaxCuspElements = 50;
// Exhaustive bracket search is only run up to this degree.
constexpr std::size_t kBracketSearchDegree = 16;

class Tally {
 public:
  Tally(std::string suite, std::uint64_t seed) {
    report_.suite = std::move(suite);
    report_.seed = seed;
  }

  // Runs one check; exceptions count as failures.
  void check(const std::string& label, const std::function<bool()>& body) {
    ++report_.trials;
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(": ") + e.what();
    }
    if (ok) {
      ++report_.passed;
      return;
    }
    ++report_.failed;
    if (report_.failures.size() < kMaxFailures) {
      report_.failures.push_back(label + why);
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string chain_label(std::span<const Polynomial> factors) {
  std::string out = "[";
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j) out += ", ";
    out += format(factors[j]);
  }
  return out + "]";
}

std::vector<std::size_t> sorted_degrees(std::span<const Polynomial> factors) {
  auto d = degree_sequence(factors);
  std::sort(d.begin(), d.end());
  return d;
}

SuiteReport ritt1_suite(std::size_t trials, std::uint64_t seed) {
  Tally t("ritt1", seed);
  for (const CorpusElement& e : ritt_corpus(seed, trials)) {
    t.check(chain_label(e.factors), [&] {
      const auto classes = enumerate_classes(e.target);
      const Ritt1Report r = ritt1_check(classes);
      if (!r.pass || r.length != e.factors.size()) return false;
      if (r.degree_multiset != sorted_degrees(e.factors)) return false;
      return std::all_of(classes.begin(), classes.end(), [&](const auto& c) {
        return compose_chain(c.factors) == e.target;
      });
    });
  }
  return t.take();
}

SuiteReport invariants_suite(std::size_t trials, std::uint64_t seed) {
  Tally t("invariants", seed);
  for (const CorpusElement& e : ritt_corpus(seed, trials)) {
    t.check(chain_label(e.factors), [&] {
      const auto classes = enumerate_classes(e.target);
      const RittInvariants first = invariants_of(classes.front().factors);
      if (first.n_undetermined != 0) return false;
      return std::all_of(classes.begin(), classes.end(), [&](const auto& c) {
        return invariants_of(c.factors) == first;
      });
    });
  }
  return t.take();
}

SuiteReport chebyshev_suite(std::size_t trials, std::uint64_t seed) {
  Tally t("chebyshev", seed);
  CorpusRng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const unsigned m = static_cast<unsigned>(rng.uniform(1, 12));
    const unsigned n = static_cast<unsigned>(rng.uniform(1, 60 / m));
    t.check("T_" + std::to_string(m) + " o T_" + std::to_string(n), [&] {
      return compose(chebyshev(m), chebyshev(n)) == chebyshev(m * n) &&
             compose(chebyshev(n), chebyshev(m)) == chebyshev(m * n);
    });
  }
  for (const ReductionIdentityCheck& c : chebyshev_reduction_identities()) {
    t.check("reduction identities n=" + std::to_string(c.n),
            [&] { return c.composed_with_t2 && c.conjugated; });
  }
  return t.take();
}

Polynomial random_nonconstant(CorpusRng& rng) {
  return random_polynomial(rng, 1, 7);
}

Rational random_nonzero(CorpusRng& rng) {
  Rational c;
  while (c.is_zero()) c = random_coefficient(rng);
  return c;
}

SuiteReport odd_suite(std::size_t trials, std::uint64_t seed) {
  Tally t("odd", seed);
  CorpusRng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Polynomial a = random_odd_polynomial(rng, 3, 7);
    const Rational mu = random_nonzero(rng);
    const Polynomial f = random_nonconstant(rng);
    t.check("(x + mu) o a o f, a = " + format(a) + ", f = " + format(f), [&] {
      return !is_odd(compose(Polynomial({mu, Rational(1)}), compose(a, f)));
    });

    const Polynomial g = random_nonconstant(rng);
    const Rational shift = random_coefficient(rng);
    const Unit u(shift, random_nonzero(rng));
    t.check("g o x^2 o u, g = " + format(g), [&] {
      return !is_odd(compose(compose(g, Polynomial::monomial(1, 2)),
                             u.to_polynomial()));
    });

    // With one side odd, an odd composite forces the other side odd.
    const Polynomial p = random_odd_polynomial(rng, 1, 7);
    const Polynomial q = random_nonconstant(rng);
    t.check("one odd side, p = " + format(p) + ", q = " + format(q), [&] {
      const bool left = !is_odd(compose(p, q)) || is_odd(q);
      const bool right = !is_odd(compose(q, p)) || is_odd(q);
      const bool closure = is_odd(compose(p, random_odd_polynomial(rng, 1, 5)));
      return left && right && closure;
    });

    const Polynomial outer = random_odd_polynomial(rng, 3, 7);
    const Polynomial inner = random_odd_polynomial(rng, 3, 5);
    t.check("odd classes of " + format(outer) + " o " + format(inner), [&] {
      const auto classes = decompose_in_O(compose(outer, inner));
      const auto want = sorted_degrees(classes.front().factors);
      return std::all_of(classes.begin(), classes.end(), [&](const auto& c) {
        return sorted_degrees(c.factors) == want &&
               std::all_of(c.factors.begin(), c.factors.end(),
                           [](const Polynomial& x) {
                             return x.degree() % 2 == 1 && is_odd(x);
                           });
      });
    });
  }
  return t.take();
}

bool members_recompose(const Polynomial& a,
                       const std::vector<std::vector<Polynomial>>& members) {
  return std::all_of(members.begin(), members.end(), [&](const auto& m) {
    return compose_chain(m) == a &&
           std::all_of(m.begin(), m.end(),
                       [](const Polynomial& q) { return in_A(q); });
  });
}

// Undoing each shift of an instantiation recovers the base with its tail
// collapsed.
bool adm_round_trip(const MaxBase& base) {
  std::vector<Rational> shifts;
  for (const auto& s : base.shift_sets) shifts.push_back(s.front());
  std::vector<Polynomial> cur = instantiate(base, shifts);
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    cur = undo_adm(cur, j + 1, shifts[j]);
  }
  const auto& p = base.base.factors;
  const std::size_t i = shifts.size() + 1;
  std::vector<Polynomial> want(p.begin(), p.begin() + (i - 1));
  want.push_back(compose_chain(std::span<const Polynomial>(p).subspan(i - 1)));
  return cur == want;
}

SuiteReport cusp_suite(std::size_t trials, std::uint64_t seed) {
  Tally t("cusp", seed);
  CorpusRng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const Polynomial a = random_polynomial(rng, 1, 5);
    Polynomial b = random_polynomial(rng, 1, 5);
    // Make both branches show up regularly.
    if (k % 3 == 1) b = b - Polynomial::monomial(b.coeff(1), 1);
    t.check("A criterion, a = " + format(a) + ", b = " + format(b), [&] {
      const bool expected =
          in_A(b) || evaluate(derivative(a), evaluate(b, 0)).is_zero();
      const CompositionInA got = compose_in_A_criterion(a, b);
      return in_A(compose(a, b)) == expected && got.in_a == expected;
    });
  }
  for (const CorpusElement& e :
       cusp_corpus(seed, std::min(trials, kMaxCuspElements))) {
    const std::string label = chain_label(e.factors);
    t.check("cusp element " + label, [&] {
      if (!in_A(e.target)) return false;
      const CuspReport r = cusp_report(e.target);
      if (r.l_a != r.index || r.l != r.l_a + r.defect) return false;
      const MaxSkeleton skel = max_decompositions(e.target);
      const auto members = max_members(skel);
      if (!members_recompose(e.target, members)) return false;
      for (const MaxBase& base : skel.bases) {
        if (base.rational_realizable && !adm_round_trip(base)) return false;
      }
      if (r.regular && r.rational_realizable) {
        std::set<std::vector<std::size_t>> multisets;
        for (const auto& m : members) multisets.insert(sorted_degrees(m));
        if (multisets.size() != 1) return false;
      }
      if (r.rational_realizable &&
          static_cast<std::size_t>(e.target.degree()) <= kBracketSearchDegree) {
        const ADecompositionSet all = enumerate_A_decompositions(e.target);
        if (all.lengths.empty() || all.lengths.back() != r.l_a) return false;
      }
      return true;
    });
  }
  return t.take();
}

using SuiteFn = SuiteReport (*)(std::size_t, std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
      {"ritt1", ritt1_suite},   {"invariants", invariants_suite},
      {"chebyshev", chebyshev_suite}, {"odd", odd_suite},
      {"cusp", cusp_suite},
  };
  return kSuites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return kNames;
}

std::vector<SuiteReport> run_suites(const std::string& name,
                                    std::size_t trials, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const auto& [suite, fn] : suites()) {
    if (name == "all" || name == suite) out.push_back(fn(trials, seed));
  }
  if (out.empty()) throw DomainError("unknown suite '" + name + "'");
  return out;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["failures"] = r.failures;
  return j;
}

}  // namespace polydecomp
