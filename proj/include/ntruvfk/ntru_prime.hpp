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
#include <optional>
#include <random>

#include "ntruvfk/codec.hpp"
#include "ntruvfk/ring.hpp"

namespace ntruvfk::prime {

// Streamlined NTRU Prime over Z[x]/<x^p - x - 1>, q prime, w = weight of f
// and r.
struct PrimeParams {
  int p = 0;
  std::int64_t q = 0;
  int w = 0;

  // Cheap arithmetic conditions only; see is_irreducible_mod for the
  // irreducibility of x^p - x - 1.
  void validate() const;

  RingContext ring_z() const { return {RingKind::kPrime, p, 0}; }
  RingContext ring_q() const { return {RingKind::kPrime, p, q}; }
  RingContext ring_3() const { return {RingKind::kPrime, p, 3}; }

  TernarySpec sample_f() const { return TernarySpec::fixed_weight(p - 1, w); }
  TernarySpec sample_g() const { return TernarySpec::unrestricted(p - 1); }
  TernarySpec sample_r() const { return sample_f(); }
};

// Rabin's test for x^p - x - 1 over F_q (p, q prime). Cost O(p^3).
bool is_irreducible_mod(int p, std::int64_t q);

struct PrimeKeyPair {
  Poly h;   // public key, R/q
  Poly f;   // secret, over Z
  Poly g3;  // g^{-1} mod (3, D)
};

struct Encapsulation {
  Digest shared_secret{};
  Poly ct;  // Round(h*r), over Z, coefficients in 3Z
  // Harness-only ground truth: m = c1 - Round(c1) where c1 = h*r.
  Poly m;
  Poly r;
};

// Multiple of 3 nearest to x; halves round away from zero.
std::int64_t closest3(std::int64_t x);

// closest3 applied to the symmetric lift of every coefficient; over Z.
Poly round_poly(const Poly& a);

PrimeKeyPair keygen(const PrimeParams& params, std::mt19937_64& rng);

// SHA-256(encode(r) || encode(ct)).
Digest shared_secret(const Poly& r, const Poly& ct);

Encapsulation encap(const PrimeParams& params, const Poly& h,
                    std::mt19937_64& rng);

// std::nullopt when the re-encryption check fails.
std::optional<Digest> decap(const PrimeParams& params, const PrimeKeyPair& sk,
                            const Poly& ct);

}  // namespace ntruvfk::prime
