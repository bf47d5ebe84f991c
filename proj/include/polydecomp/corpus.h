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

// Seeded random instances for the verification suites. The mapping from the
// 64-bit engine to small ranges is spelled out here rather than left to
// std::uniform_int_distribution, whose output differs between standard
// libraries; a seed therefore names the same corpus everywhere.

#ifndef POLYDECOMP_CORPUS_H_
#define POLYDECOMP_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "polydecomp/polynomial.h"

namespace polydecomp {

class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi] by rejection sampling.
  long uniform(long lo, long hi);
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(
        uniform(0, static_cast<long>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

struct CorpusElement {
  Polynomial target;
  std::vector<Polynomial> factors;  // the factors it was built from
  bool built_regular = false;       // cusp corpus only
};

// Random factor of the given degree: coefficients uniform in {-3..3}, leading
// coefficient nonzero.
Polynomial random_factor(CorpusRng& rng, std::size_t degree);

// Composites of 2-4 factors with degrees drawn from {2, 3, 5, 7}.
std::vector<CorpusElement> ritt_corpus(std::uint64_t seed, std::size_t count);

// Elements of A with rational admissible shifts: every factor but the last
// gets a rational critical point in {-2..2} by solving for its linear
// coefficient. Even-numbered instances make the last factor lie in A;
// odd-numbered ones instead force p_1'((p_2 o ... o p_r)(0)) = 0.
std::vector<CorpusElement> cusp_corpus(std::uint64_t seed, std::size_t count,
                                       std::size_t max_factors = 3);

// Coefficient in {-3..3}, halved with probability 1/2.
Rational random_coefficient(CorpusRng& rng);
// Degree uniform in [min_degree, max_degree], leading coefficient nonzero.
Polynomial random_polynomial(CorpusRng& rng, std::size_t min_degree,
                             std::size_t max_degree);
Polynomial random_odd_polynomial(CorpusRng& rng, std::size_t min_degree,
                                 std::size_t max_degree);

}  // namespace polydecomp

#endif  // POLYDECOMP_CORPUS_H_
