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

#include <array>
#include <cstdint>
#include <random>

#include "ntruvfk/codec.hpp"
#include "ntruvfk/ring.hpp"

namespace ntruvfk::hps {

// NTRU-HPS over R = Z[x]/<x^N - 1>. d = q/16 - 1 fixes the sign counts of
// g and m.
struct HpsParams {
  int n = 0;
  std::int64_t q = 0;

  std::int64_t d() const { return q / 16 - 1; }
  void validate() const;

  RingContext ring_z() const { return {RingKind::kCyclic, n, 0}; }
  RingContext ring_q() const { return {RingKind::kCyclic, n, q}; }
  RingContext ring_3() const { return {RingKind::kCyclic, n, 3}; }

  TernarySpec sample_f() const { return TernarySpec::unrestricted(n - 2); }
  TernarySpec sample_r() const { return TernarySpec::unrestricted(n - 2); }
  TernarySpec sample_g() const;
  TernarySpec sample_m() const { return sample_g(); }
};

struct HpsKeyPair {
  Poly h;   // public key, R/q
  Poly f;   // secret, over Z
  Poly f3;  // f^{-1} mod (3, Phi_N)
  Poly hq;  // h^{-1} mod (q, Phi_N)
  std::array<std::uint8_t, 32> s{};  // implicit-rejection seed
};

struct DecryptResult {
  Poly m;  // over Z
  Poly r;  // over Z
  bool fail = true;
};

struct Encapsulation {
  Poly c;  // ciphertext in R/q
  Digest shared_secret{};
  // Ground truth for test harnesses; never part of the ciphertext.
  Poly r;
  Poly m;
};

HpsKeyPair keygen(const HpsParams& params, std::mt19937_64& rng);

// c = h*r + Lift_3(m) mod (q, x^N - 1). Throws if r or m lies outside its
// sample space.
Poly encrypt(const HpsParams& params, const Poly& h, const Poly& r,
             const Poly& m);

DecryptResult decrypt(const HpsParams& params, const HpsKeyPair& kp,
                      const Poly& c);

// SHA-256(encode(r) || encode(m)).
Digest shared_secret(const Poly& r, const Poly& m);

Encapsulation encap(const HpsParams& params, const Poly& h,
                    std::mt19937_64& rng);

// Implicit rejection: SHA-256(S || encode(c)) when decryption fails.
Digest decap(const HpsParams& params, const HpsKeyPair& kp, const Poly& c);

}  // namespace ntruvfk::hps
