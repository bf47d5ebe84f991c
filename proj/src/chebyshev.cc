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

#include "polydecomp/chebyshev.h"

#include "polydecomp/errors.h"

namespace polydecomp {

Polynomial chebyshev(unsigned n) {
  if (n == 0) throw DomainError("Chebyshev index must be at least 1");
  Polynomial prev = Polynomial::constant(1);
  Polynomial cur = Polynomial::identity();
  const Polynomial two_x = Polynomial::monomial(2, 1);
  for (unsigned k = 1; k < n; ++k) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial extract_odd_base(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("odd base of the zero polynomial");
  std::vector<Rational> t(p.size() / 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i % 2 == 0) {
      if (!p.coeff(i).is_zero()) {
        throw DomainError("polynomial has an even-exponent term");
      }
    } else {
      t[i / 2] = p.coeff(i);
    }
  }
  return Polynomial(std::move(t));
}

std::vector<ReductionIdentityCheck> chebyshev_reduction_identities(
    unsigned max_n) {
  const Unit al(-1, 2);
  const Unit al_inv = unit_inverse(al);
  const Polynomial t2 = chebyshev(2);
  std::vector<ReductionIdentityCheck> out;
  for (unsigned n = 3; n <= max_n; n += 2) {
    const Polynomial tn = chebyshev(n);
    const Polynomial t = extract_odd_base(tn);
    const Polynomial middle = Polynomial::identity() * (t * t);
    ReductionIdentityCheck check;
    check.n = n;
    check.conjugated = compose(al, compose(middle, al_inv)) == tn;
    check.composed_with_t2 =
        compose(t2, tn) == compose(al, compose(middle, compose(al_inv, t2)));
    out.push_back(check);
  }
  return out;
}

}  // namespace polydecomp
