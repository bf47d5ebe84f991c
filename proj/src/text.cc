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

#include "polydecomp/text.h"

#include <cctype>
#include <cstddef>
#include <optional>
#include <vector>

#include "polydecomp/errors.h"

namespace polydecomp {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    std::vector<Rational> acc;
    bool negate = false;
    // A sign in front of the first term is accepted so that "-x" works.
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      add_term(acc, negate);
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') {
        throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
      }
      negate = peek() == '-';
      ++pos_;
    }
    return Polynomial(std::move(acc));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  std::optional<std::string> digits() {
    skip_space();
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out.push_back(peek());
      ++pos_;
    }
    if (out.empty()) return std::nullopt;
    return out;
  }

  void add_term(std::vector<Rational>& acc, bool negate) {
    skip_space();
    const std::size_t start = pos_;
    Rational coeff = 1;
    bool have_coeff = false;
    if (auto num = digits()) {
      have_coeff = true;
      mpz_class n(*num);
      mpz_class d = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t den_at = pos_;
        auto den = digits();
        if (!den) throw ParseError("expected denominator", pos_);
        d = mpz_class(*den);
        if (d == 0) throw ParseError("division by zero", den_at);
      }
      coeff = Rational(n, d);
    }
    skip_space();
    bool have_x = false;
    std::size_t exponent = 0;
    if (!at_end() && peek() == '*') {
      if (!have_coeff) throw ParseError("unexpected '*'", pos_);
      ++pos_;
      skip_space();
      if (at_end() || peek() != 'x') throw ParseError("expected 'x'", pos_);
    }
    if (!at_end() && peek() == 'x') {
      have_x = true;
      ++pos_;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        const std::size_t exp_at = pos_;
        auto e = digits();
        if (!e) {
          skip_space();
          throw ParseError("expected nonnegative integer exponent", pos_);
        }
        if (e->size() > 9) throw ParseError("exponent too large", exp_at);
        exponent = std::stoul(*e);
      }
    }
    if (!have_coeff && !have_x) throw ParseError("expected term", start);
    if (negate) coeff = -coeff;
    if (acc.size() <= exponent) acc.resize(exponent + 1);
    acc[exponent] += coeff;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text) { return Parser(text).run(); }

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace polydecomp
