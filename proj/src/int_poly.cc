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

#include "int_poly.h"

#include <gmp.h>

#include <algorithm>
#include <cstddef>

namespace polydecomp::detail {

IntPoly to_int_poly(const Polynomial& p) {
  IntPoly out;
  for (const Rational& c : p.coeffs()) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(),
            c.mpq().get_den_mpz_t());
  }
  out.num.reserve(p.size());
  for (const Rational& c : p.coeffs()) {
    mpz_class v;
    mpz_divexact(v.get_mpz_t(), out.den.get_mpz_t(), c.mpq().get_den_mpz_t());
    v *= c.mpq().get_num();
    out.num.push_back(std::move(v));
  }
  return out;
}

Polynomial from_int_poly(const ZVec& num, const mpz_class& den) {
  std::vector<Rational> coeffs;
  coeffs.reserve(num.size());
  for (const mpz_class& n : num) coeffs.emplace_back(n, den);
  return Polynomial(std::move(coeffs));
}

namespace {

constexpr std::size_t kLimbBits = sizeof(mp_limb_t) * 8;

ZVec schoolbook(const ZVec& a, const ZVec& b) {
  ZVec out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::size_t max_bits(const ZVec& v) {
  std::size_t m = 1;
  for (const mpz_class& z : v) {
    m = std::max(m, mpz_sizeinbase(z.get_mpz_t(), 2));
  }
  return m;
}

// Packs sum v_i 2^(slot*i) where each v_i is split by sign into two
// nonnegative packings; returns their difference.
mpz_class pack(const ZVec& v, std::size_t slot_limbs) {
  std::vector<mp_limb_t> pos(v.size() * slot_limbs, 0);
  std::vector<mp_limb_t> neg(v.size() * slot_limbs, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = sgn(v[i]);
    if (s == 0) continue;
    std::vector<mp_limb_t>& dst = s > 0 ? pos : neg;
    const std::size_t n = mpz_size(v[i].get_mpz_t());
    for (std::size_t k = 0; k < n; ++k) {
      dst[i * slot_limbs + k] = mpz_getlimbn(v[i].get_mpz_t(), k);
    }
  }
  mpz_class p, q;
  mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0,
             pos.data());
  mpz_import(q.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0,
             neg.data());
  return p - q;
}

ZVec unpack(const mpz_class& z, std::size_t count, std::size_t slot_limbs) {
  const int s = sgn(z);
  mpz_class mag = abs(z);
  std::vector<mp_limb_t> limbs(count * slot_limbs + 1, 0);
  std::size_t written = 0;
  mpz_export(limbs.data(), &written, -1, sizeof(mp_limb_t), 0, 0,
             mag.get_mpz_t());
  mpz_class half, full;
  mpz_setbit(half.get_mpz_t(), slot_limbs * kLimbBits - 1);
  mpz_setbit(full.get_mpz_t(), slot_limbs * kLimbBits);
  ZVec out(count);
  int carry = 0;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_class v;
    mpz_import(v.get_mpz_t(), slot_limbs, -1, sizeof(mp_limb_t), 0, 0,
               limbs.data() + i * slot_limbs);
    v += carry;
    if (v >= half) {
      v -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    if (s < 0) v = -v;
    out[i] = std::move(v);
  }
  return out;
}

}  // namespace

ZVec multiply(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t shorter = std::min(a.size(), b.size());
  if (shorter < 24) return schoolbook(a, b);
  const std::size_t bits = max_bits(a) + max_bits(b) +
                           mpz_sizeinbase(mpz_class(shorter).get_mpz_t(), 2) +
                           2;
  const std::size_t slot_limbs = (bits + kLimbBits - 1) / kLimbBits;
  const mpz_class za = pack(a, slot_limbs);
  const mpz_class zb = pack(b, slot_limbs);
  const mpz_class prod = za * zb;
  return unpack(prod, a.size() + b.size() - 1, slot_limbs);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kModPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kModPrime) r -= kModPrime;
  return r;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kModPrime) r -= kModPrime;
  return r;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kModPrime - b;
}

std::uint64_t mod_inv(std::uint64_t a) {
  std::uint64_t result = 1;
  std::uint64_t e = kModPrime - 2;
  while (e != 0) {
    if (e & 1) result = mod_mul(result, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> mod_reduce(const Rational& r) {
  static const mpz_class prime(std::to_string(kModPrime));
  mpz_class n, d;
  mpz_mod(n.get_mpz_t(), r.mpq().get_num_mpz_t(), prime.get_mpz_t());
  mpz_mod(d.get_mpz_t(), r.mpq().get_den_mpz_t(), prime.get_mpz_t());
  if (d == 0) return std::nullopt;
  return mod_mul(mpz_get_ui(n.get_mpz_t()), mod_inv(mpz_get_ui(d.get_mpz_t())));
}

std::optional<std::vector<std::uint64_t>> mod_reduce(const Polynomial& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.size());
  for (const Rational& c : p.coeffs()) {
    auto v = mod_reduce(c);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

}  // namespace polydecomp::detail
