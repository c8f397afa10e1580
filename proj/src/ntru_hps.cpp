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

#include "ntruvfk/ntru_hps.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace ntruvfk::hps {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

void HpsParams::validate() const {
  if (!is_prime(n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "HPS degree N=" + std::to_string(n) + " is not prime");
  }
  if (q < 32 || !std::has_single_bit(static_cast<std::uint64_t>(q))) {
    throw Error(ErrorCode::kInvalidArgument,
                "HPS modulus q=" + std::to_string(q) +
                    " is not a power of two >= 32");
  }
  if (3 * q > 16 * static_cast<std::int64_t>(n) + 48) {
    throw Error(ErrorCode::kInvalidArgument,
                "HPS modulus violates q <= 16N/3 + 16");
  }
  if (2 * d() > n - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "HPS sign counts do not fit in degree N-2");
  }
}

TernarySpec HpsParams::sample_g() const {
  const int dd = static_cast<int>(d());
  return TernarySpec::fixed_signs(n - 2, dd, dd);
}

HpsKeyPair keygen(const HpsParams& params, std::mt19937_64& rng) {
  params.validate();
  const RingContext rq = params.ring_q();
  const RingContext r3 = params.ring_3();
  for (;;) {
    Poly f = sample_ternary(params.sample_f(), params.ring_z(), rng);
    Poly g = sample_ternary(params.sample_g(), params.ring_z(), rng);
    try {
      Poly fq = inverse(reduce(f, rq));
      Poly f3 = inverse(reduce(f, r3));
      Poly h = mul(scale(reduce(g, rq), 3), fq);
      Poly hq = inverse(h);
      HpsKeyPair kp{std::move(h), std::move(f), std::move(f3), std::move(hq)};
      std::uniform_int_distribution<int> byte(0, 255);
      for (auto& b : kp.s) b = static_cast<std::uint8_t>(byte(rng));
      return kp;
    } catch (const NotInvertible&) {
      // resample
    }
  }
}

Poly encrypt(const HpsParams& params, const Poly& h, const Poly& r,
             const Poly& m) {
  if (!is_member(r, params.sample_r())) {
    throw Error(ErrorCode::kInvalidArgument, "nonce r is outside L_r");
  }
  if (!is_member(m, params.sample_m())) {
    throw Error(ErrorCode::kInvalidArgument, "message m is outside L_m");
  }
  const RingContext rq = params.ring_q();
  const Poly m_lift = lift3_phi_n(reduce(m, params.ring_z()));
  return add(mul(h, reduce(r, rq)), reduce(m_lift, rq));
}

DecryptResult decrypt(const HpsParams& params, const HpsKeyPair& kp,
                      const Poly& c_in) {
  const RingContext rq = params.ring_q();
  const RingContext r3 = params.ring_3();
  const Poly c = reduce(c_in, rq);
  DecryptResult failed{Poly(params.ring_z()), Poly(params.ring_z()), true};

  std::int64_t c_at_one = 0;
  for (auto v : c.coeffs()) c_at_one += v;
  if (c_at_one % params.q != 0) return failed;

  const Poly a = centerlift(mul(c, reduce(kp.f, rq)), params.q);
  const Poly m = lift3_phi_n(mul(reduce(a, r3), kp.f3));
  const Poly r = centerlift(
      reduce_phi_n(mul(sub(c, reduce(m, rq)), kp.hq)), params.q);

  if (!is_member(r, params.sample_r()) || !is_member(m, params.sample_m())) {
    return failed;
  }
  return DecryptResult{m, r, false};
}

Digest shared_secret(const Poly& r, const Poly& m) {
  const Bytes er = encode(r);
  const Bytes em = encode(m);
  return sha256_concat({er, em});
}

Encapsulation encap(const HpsParams& params, const Poly& h,
                    std::mt19937_64& rng) {
  Poly r = sample_ternary(params.sample_r(), params.ring_z(), rng);
  Poly m = sample_ternary(params.sample_m(), params.ring_z(), rng);
  Poly c = encrypt(params, h, r, m);
  const Digest s = shared_secret(r, m);
  return Encapsulation{std::move(c), s, std::move(r), std::move(m)};
}

Digest decap(const HpsParams& params, const HpsKeyPair& kp, const Poly& c) {
  const DecryptResult dec = decrypt(params, kp, c);
  if (!dec.fail) return shared_secret(dec.r, dec.m);
  const Bytes ec = encode(reduce(c, params.ring_q()));
  return sha256_concat({kp.s, ec});
}

}  // namespace ntruvfk::hps
