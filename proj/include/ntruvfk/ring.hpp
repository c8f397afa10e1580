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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ntruvfk/error.hpp"

namespace ntruvfk {

// Quotient polynomial D(x) of the ring Z[x]/<D(x)>.
enum class RingKind {
  kCyclic,  // x^N - 1, with factors Phi_1 = x - 1 and Phi_N
  kPrime,   // x^p - x - 1
};

// Z[x]/<D(x)> optionally reduced modulo an integer. modulus == 0 means the
// coefficients live in Z. Plain value type; two polynomials are compatible
// iff their contexts compare equal.
class RingContext {
 public:
  RingContext(RingKind kind, int degree, std::int64_t modulus = 0);

  RingKind kind() const { return kind_; }
  int degree() const { return degree_; }
  std::int64_t modulus() const { return modulus_; }
  bool has_modulus() const { return modulus_ != 0; }

  // Same ring, different coefficient modulus (0 for Z).
  RingContext with_modulus(std::int64_t modulus) const {
    return RingContext(kind_, degree_, modulus);
  }

  bool operator==(const RingContext&) const = default;

 private:
  RingKind kind_;
  int degree_;
  std::int64_t modulus_;
};

class Poly {
 public:
  // Zero polynomial.
  explicit Poly(const RingContext& ctx);
  // Coefficients are reduced into [0, m) when the context has modulus m.
  Poly(const RingContext& ctx, std::vector<std::int64_t> coeffs);

  static Poly one(const RingContext& ctx);
  static Poly monomial(const RingContext& ctx, int exponent,
                       std::int64_t coeff = 1);

  const RingContext& context() const { return ctx_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t operator[](int i) const { return coeffs_[i]; }

  bool is_zero() const;
  // Largest index with a nonzero coefficient, -1 for zero.
  int degree() const;

  bool operator==(const Poly&) const = default;

 private:
  RingContext ctx_;
  std::vector<std::int64_t> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(const Poly& a, std::int64_t factor);
Poly mul(const Poly& a, const Poly& b);

// Re-express a's coefficients in another context of the same ring.
Poly reduce(const Poly& a, const RingContext& target);

// For cyclic rings: the representative of a modulo Phi_N, i.e. the unique
// congruent polynomial with a zero coefficient at x^(N-1).
Poly reduce_phi_n(const Poly& a);

// Inverse in the context ring. Cyclic contexts invert modulo Phi_N (the
// returned polynomial has degree <= N-2); prime contexts invert modulo D.
// Supported moduli: primes and powers of two. Throws NotInvertible.
Poly inverse(const Poly& a);

// Maps every coefficient to its symmetric representative modulo m and
// returns the result over Z.
Poly centerlift(const Poly& a, std::int64_t m);
std::int64_t centered(std::int64_t value, std::int64_t m);

// Lift_3 for cyclic rings: reduce modulo (3, Phi_N) and center, yielding the
// ternary representative of degree <= N-2, over Z.
Poly lift3_phi_n(const Poly& a);

enum class TernaryKind { kUnrestricted, kFixedSigns, kFixedWeight };

struct TernarySpec {
  int max_degree = 0;
  TernaryKind kind = TernaryKind::kUnrestricted;
  int d1 = 0;  // number of +1 (fixed signs)
  int d2 = 0;  // number of -1 (fixed signs)
  int w = 0;   // number of nonzeros (fixed weight)

  static TernarySpec unrestricted(int max_degree);
  static TernarySpec fixed_signs(int max_degree, int d1, int d2);
  static TernarySpec fixed_weight(int max_degree, int w);

  void validate() const;
};

// Uniform sample from the space described by spec, returned over Z in ctx's
// ring (degree taken from ctx).
Poly sample_ternary(const TernarySpec& spec, const RingContext& ctx,
                    std::mt19937_64& rng);

// Coefficients are read as integers if a is over Z and as centered
// representatives otherwise.
bool is_member(const Poly& a, const TernarySpec& spec);
bool is_ternary(const Poly& a);

}  // namespace ntruvfk
