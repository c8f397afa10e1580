// Copyright 2026 The ntruvfk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ntruvfk/ring.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace ntruvfk {
namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_power_of_two(std::int64_t n) {
  return n > 0 && std::has_single_bit(static_cast<std::uint64_t>(n));
}

void require_same_context(const Poly& a, const Poly& b) {
  if (!(a.context() == b.context())) {
    throw Error(ErrorCode::kContextMismatch,
                "polynomials belong to different ring contexts");
  }
}

// Dense polynomials over F_l, lowest degree first, kept trimmed.
using FieldPoly = std::vector<std::int64_t>;

void trim(FieldPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const FieldPoly& p) { return static_cast<int>(p.size()) - 1; }

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::int64_t inv_mod_prime(std::int64_t a, std::int64_t l) {
  return pow_mod(a, l - 2, l);
}

// r0 <- r0 mod r1, returning the quotient.
FieldPoly divmod_inplace(FieldPoly& r0, const FieldPoly& r1, std::int64_t l) {
  FieldPoly quot(std::max(0, deg(r0) - deg(r1) + 1), 0);
  const std::int64_t lead_inv = inv_mod_prime(r1.back(), l);
  while (!r0.empty() && deg(r0) >= deg(r1)) {
    const int shift = deg(r0) - deg(r1);
    const std::int64_t c = r0.back() * lead_inv % l;
    quot[shift] = c;
    for (int i = 0; i <= deg(r1); ++i) {
      r0[shift + i] = floor_mod(r0[shift + i] - c * r1[i], l);
    }
    trim(r0);
  }
  return quot;
}

FieldPoly field_mul(const FieldPoly& a, const FieldPoly& b, std::int64_t l) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % l;
    }
  }
  trim(out);
  return out;
}

FieldPoly field_sub(const FieldPoly& a, const FieldPoly& b, std::int64_t l) {
  FieldPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] = floor_mod(out[i] - b[i], l);
  }
  trim(out);
  return out;
}

// Extended Euclid: a^{-1} modulo the monic polynomial modulus over F_l.
FieldPoly field_inverse(FieldPoly a, const FieldPoly& modulus, std::int64_t l) {
  for (auto& c : a) c = floor_mod(c, l);
  trim(a);
  {
    FieldPoly m = modulus;
    if (!a.empty()) divmod_inplace(a, m, l);
  }
  if (a.empty()) throw NotInvertible("zero has no inverse");

  FieldPoly r0 = modulus, r1 = a;
  FieldPoly s0, s1{1};
  while (deg(r1) > 0) {
    FieldPoly quot = divmod_inplace(r0, r1, l);
    FieldPoly s2 = field_sub(s0, field_mul(quot, s1, l), l);
    std::swap(r0, r1);  // r1 now holds the remainder
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) {
      throw NotInvertible("polynomial shares a factor with the modulus");
    }
  }
  const std::int64_t c_inv = inv_mod_prime(r1[0], l);
  for (auto& c : s1) c = c * c_inv % l;
  FieldPoly m = modulus;
  if (deg(s1) >= deg(m)) divmod_inplace(s1, m, l);
  return s1;
}

// The polynomial the inverse is taken modulo: Phi_N or D.
FieldPoly inversion_modulus(const RingContext& ctx) {
  const int n = ctx.degree();
  if (ctx.kind() == RingKind::kCyclic) return FieldPoly(n, 1);
  FieldPoly d(n + 1, 0);
  d[0] = -1;
  d[1] = -1;
  d[n] = 1;
  return d;
}

// Reduction onto the inversion modulus (identity for prime rings).
Poly reduce_for_inverse(const Poly& a) {
  return a.context().kind() == RingKind::kCyclic ? reduce_phi_n(a) : a;
}

Poly inverse_mod_prime(const Poly& a) {
  const RingContext& ctx = a.context();
  const std::int64_t l = ctx.modulus();
  FieldPoly modulus = inversion_modulus(ctx);
  for (auto& c : modulus) c = floor_mod(c, l);
  const Poly reduced = reduce_for_inverse(a);
  const auto span = reduced.coeffs();
  FieldPoly inv = field_inverse(FieldPoly(span.begin(), span.end()), modulus, l);
  inv.resize(ctx.degree(), 0);
  return Poly(ctx, std::move(inv));
}

// Inverse modulo 2, then Newton iteration b <- b (2 - a b), doubling the
// number of correct bits per step.
Poly inverse_mod_power_of_two(const Poly& a) {
  const RingContext& ctx = a.context();
  const std::int64_t q = ctx.modulus();
  const auto span = a.coeffs();
  FieldPoly modulus = inversion_modulus(ctx);
  for (auto& c : modulus) c = floor_mod(c, 2);
  FieldPoly inv2 =
      field_inverse(FieldPoly(span.begin(), span.end()), modulus, 2);
  inv2.resize(ctx.degree(), 0);
  Poly b(ctx, std::move(inv2));
  const Poly two = scale(Poly::one(ctx), 2);
  for (std::int64_t bits = 1; (std::int64_t{1} << std::min<std::int64_t>(bits, 62)) < q;
       bits *= 2) {
    b = reduce_for_inverse(mul(b, sub(two, reduce_for_inverse(mul(a, b)))));
  }
  return b;
}

}  // namespace

RingContext::RingContext(RingKind kind, int degree, std::int64_t modulus)
    : kind_(kind), degree_(degree), modulus_(modulus) {
  if (degree < 1) {
    throw Error(ErrorCode::kInvalidArgument, "ring degree must be positive");
  }
  if (modulus != 0 && modulus < 2) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 2");
  }
}

Poly::Poly(const RingContext& ctx) : ctx_(ctx), coeffs_(ctx.degree(), 0) {}

Poly::Poly(const RingContext& ctx, std::vector<std::int64_t> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ctx.degree()) {
    throw Error(ErrorCode::kInvalidArgument,
                "coefficient count " + std::to_string(coeffs_.size()) +
                    " does not match ring degree " +
                    std::to_string(ctx.degree()));
  }
  if (ctx.has_modulus()) {
    for (auto& c : coeffs_) c = floor_mod(c, ctx.modulus());
  }
}

Poly Poly::one(const RingContext& ctx) { return monomial(ctx, 0, 1); }

Poly Poly::monomial(const RingContext& ctx, int exponent, std::int64_t coeff) {
  std::vector<std::int64_t> c(ctx.degree(), 0);
  c.at(exponent) = coeff;
  return Poly(ctx, std::move(c));
}

bool Poly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::int64_t c) { return c == 0; });
}

int Poly::degree() const {
  for (int i = size() - 1; i >= 0; --i) {
    if (coeffs_[i] != 0) return i;
  }
  return -1;
}

Poly add(const Poly& a, const Poly& b) {
  require_same_context(a, b);
  std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
  for (int i = 0; i < a.size(); ++i) c[i] += b[i];
  return Poly(a.context(), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
  require_same_context(a, b);
  std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
  for (int i = 0; i < a.size(); ++i) c[i] -= b[i];
  return Poly(a.context(), std::move(c));
}

Poly scale(const Poly& a, std::int64_t factor) {
  std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v *= factor;
  return Poly(a.context(), std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
  require_same_context(a, b);
  const int n = a.size();
  std::vector<std::int64_t> acc(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    for (int j = 0; j < n; ++j) acc[i + j] += ai * b[j];
  }
  if (a.context().kind() == RingKind::kCyclic) {
    // x^N = 1
    for (int i = 2 * n - 2; i >= n; --i) acc[i - n] += acc[i];
  } else {
    // x^p = x + 1; i - n + 1 <= n - 1, so one pass suffices
    for (int i = 2 * n - 2; i >= n; --i) {
      acc[i - n] += acc[i];
      acc[i - n + 1] += acc[i];
    }
  }
  acc.resize(n);
  return Poly(a.context(), std::move(acc));
}

Poly reduce(const Poly& a, const RingContext& target) {
  if (a.context().kind() != target.kind() ||
      a.context().degree() != target.degree()) {
    throw Error(ErrorCode::kContextMismatch, "cannot reduce across rings");
  }
  return Poly(target,
              std::vector<std::int64_t>(a.coeffs().begin(), a.coeffs().end()));
}

Poly reduce_phi_n(const Poly& a) {
  if (a.context().kind() != RingKind::kCyclic) {
    throw Error(ErrorCode::kInvalidArgument,
                "Phi_N reduction needs a cyclic ring");
  }
  std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
  const std::int64_t top = c.back();
  for (auto& v : c) v -= top;
  return Poly(a.context(), std::move(c));
}

Poly inverse(const Poly& a) {
  const std::int64_t m = a.context().modulus();
  Poly inv = [&] {
    if (is_prime(m)) return inverse_mod_prime(a);
    if (is_power_of_two(m)) return inverse_mod_power_of_two(a);
    throw Error(ErrorCode::kInvalidArgument,
                "inverse needs a prime or power-of-two modulus, got " +
                    std::to_string(m));
  }();
  if (!(reduce_for_inverse(mul(a, inv)) ==
        reduce_for_inverse(Poly::one(a.context())))) {
    throw NotInvertible("polynomial is not invertible modulo " +
                        std::to_string(m));
  }
  return inv;
}

std::int64_t centered(std::int64_t value, std::int64_t m) {
  const std::int64_t r = floor_mod(value, m);
  return r >= (m + 1) / 2 ? r - m : r;
}

Poly centerlift(const Poly& a, std::int64_t m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 2");
  std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v = centered(v, m);
  return Poly(a.context().with_modulus(0), std::move(c));
}

Poly lift3_phi_n(const Poly& a) {
  return centerlift(reduce_phi_n(a), 3);
}

TernarySpec TernarySpec::unrestricted(int max_degree) {
  return TernarySpec{max_degree, TernaryKind::kUnrestricted, 0, 0, 0};
}

TernarySpec TernarySpec::fixed_signs(int max_degree, int d1, int d2) {
  return TernarySpec{max_degree, TernaryKind::kFixedSigns, d1, d2, 0};
}

TernarySpec TernarySpec::fixed_weight(int max_degree, int w) {
  return TernarySpec{max_degree, TernaryKind::kFixedWeight, 0, 0, w};
}

void TernarySpec::validate() const {
  const int slots = max_degree + 1;
  const bool ok =
      max_degree >= 0 && d1 >= 0 && d2 >= 0 && w >= 0 &&
      (kind != TernaryKind::kFixedSigns || d1 + d2 <= slots) &&
      (kind != TernaryKind::kFixedWeight || w <= slots);
  if (!ok) {
    throw Error(ErrorCode::kInvalidArgument, "inconsistent ternary spec");
  }
}

Poly sample_ternary(const TernarySpec& spec, const RingContext& ctx,
                    std::mt19937_64& rng) {
  spec.validate();
  if (spec.max_degree >= ctx.degree()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ternary spec degree exceeds the ring degree");
  }
  const int slots = spec.max_degree + 1;
  std::vector<std::int64_t> c(slots, 0);
  switch (spec.kind) {
    case TernaryKind::kUnrestricted: {
      std::uniform_int_distribution<int> coef(-1, 1);
      for (auto& v : c) v = coef(rng);
      break;
    }
    case TernaryKind::kFixedSigns:
      std::fill_n(c.begin(), spec.d1, 1);
      std::fill_n(c.begin() + spec.d1, spec.d2, -1);
      std::shuffle(c.begin(), c.end(), rng);
      break;
    case TernaryKind::kFixedWeight: {
      std::bernoulli_distribution sign(0.5);
      for (int i = 0; i < spec.w; ++i) c[i] = sign(rng) ? 1 : -1;
      std::shuffle(c.begin(), c.end(), rng);
      break;
    }
  }
  c.resize(ctx.degree(), 0);
  return Poly(ctx.with_modulus(0), std::move(c));
}

bool is_ternary(const Poly& a) {
  const std::int64_t m = a.context().modulus();
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [m](std::int64_t c) {
    const std::int64_t v = m ? centered(c, m) : c;
    return v >= -1 && v <= 1;
  });
}

bool is_member(const Poly& a, const TernarySpec& spec) {
  const std::int64_t m = a.context().modulus();
  int plus = 0, minus = 0;
  for (int i = 0; i < a.size(); ++i) {
    const std::int64_t v = m ? centered(a[i], m) : a[i];
    if (v < -1 || v > 1) return false;
    if (v != 0 && i > spec.max_degree) return false;
    if (v == 1) ++plus;
    if (v == -1) ++minus;
  }
  switch (spec.kind) {
    case TernaryKind::kUnrestricted:
      return true;
    case TernaryKind::kFixedSigns:
      return plus == spec.d1 && minus == spec.d2;
    case TernaryKind::kFixedWeight:
      return plus + minus == spec.w;
  }
  return false;
}

}  // namespace ntruvfk
