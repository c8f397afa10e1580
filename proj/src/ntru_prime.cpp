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

#include "ntruvfk/ntru_prime.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace ntruvfk::prime {
namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

using Vec = std::vector<std::int64_t>;

// a*b mod (q, x^p - x - 1) on raw coefficient vectors of length p.
Vec mul_mod_d(const Vec& a, const Vec& b, std::int64_t q) {
  const int p = static_cast<int>(a.size());
  Vec acc(2 * p - 1, 0);
  for (int i = 0; i < p; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < p; ++j) acc[i + j] += a[i] * b[j];
  }
  for (int i = 2 * p - 2; i >= p; --i) {
    acc[i - p] += acc[i];
    acc[i - p + 1] += acc[i];
  }
  acc.resize(p);
  for (auto& v : acc) v %= q;
  return acc;
}

Vec pow_x_mod_d(std::int64_t e, int p, std::int64_t q) {
  Vec result(p, 0), base(p, 0);
  result[0] = 1;
  base[1 % p] = 1;
  while (e > 0) {
    if (e & 1) result = mul_mod_d(result, base, q);
    base = mul_mod_d(base, base, q);
    e >>= 1;
  }
  return result;
}

}  // namespace

void PrimeParams::validate() const {
  if (!is_prime(p) || !is_prime(q)) {
    throw Error(ErrorCode::kInvalidArgument, "NTRU Prime needs prime p and q");
  }
  if (w < 1 || w % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "weight w must be even and >= 1");
  }
  if (2 * p < 3 * w) {
    throw Error(ErrorCode::kInvalidArgument, "needs p >= 1.5 w");
  }
  if (q < 16 * static_cast<std::int64_t>(w) + 1) {
    throw Error(ErrorCode::kInvalidArgument, "needs q >= 16 w + 1");
  }
}

bool is_irreducible_mod(int p, std::int64_t q) {
  // Frobenius matrix: row i holds x^(q i) mod D.
  const Vec xq = pow_x_mod_d(q, p, q);
  std::vector<Vec> frob(p);
  frob[0] = Vec(p, 0);
  frob[0][0] = 1;
  for (int i = 1; i < p; ++i) frob[i] = mul_mod_d(frob[i - 1], xq, q);

  // x^q - x must be coprime to D: with p prime, D then has no linear factor,
  // and x^(q^p) = x forces every factor to have degree p.
  {
    Vec g = xq;
    g[1 % p] = (g[1 % p] - 1 + q) % q;
    // gcd(g, D) via repeated remainder over F_q.
    auto inv = [q](std::int64_t a) {
      std::int64_t r = 1, b = ((a % q) + q) % q, e = q - 2;
      while (e > 0) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
      }
      return r;
    };
    Vec a(p + 1, 0);
    a[0] = q - 1;
    a[1] = q - 1;
    a[p] = 1;
    Vec b = g;
    auto trim = [](Vec& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(b);
    while (!b.empty()) {
      const std::int64_t lead = inv(b.back());
      while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::int64_t c = a.back() * lead % q;
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[shift + i] = ((a[shift + i] - c * b[i]) % q + q) % q;
        }
        trim(a);
      }
      std::swap(a, b);
    }
    if (a.size() != 1) return false;
  }

  Vec y(p, 0);
  y[1 % p] = 1;
  for (int step = 0; step < p; ++step) {
    Vec next(p, 0);
    for (int i = 0; i < p; ++i) {
      if (y[i] == 0) continue;
      for (int j = 0; j < p; ++j) next[j] += y[i] * frob[i][j];
    }
    for (auto& v : next) v %= q;
    y = std::move(next);
  }
  Vec x(p, 0);
  x[1 % p] = 1;
  return y == x;
}

std::int64_t closest3(std::int64_t x) {
  const std::int64_t mag = (2 * std::llabs(x) + 3) / 6;
  return x < 0 ? -3 * mag : 3 * mag;
}

Poly round_poly(const Poly& a) {
  const std::int64_t q = a.context().modulus();
  if (q == 0 || q % 3 == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Round needs a modulus q not divisible by 3");
  }
  std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v = closest3(centered(v, q));
  return Poly(a.context().with_modulus(0), std::move(c));
}

PrimeKeyPair keygen(const PrimeParams& params, std::mt19937_64& rng) {
  params.validate();
  const RingContext rq = params.ring_q();
  const RingContext r3 = params.ring_3();
  Poly f = sample_ternary(params.sample_f(), params.ring_z(), rng);
  for (;;) {
    Poly g = sample_ternary(params.sample_g(), params.ring_z(), rng);
    try {
      Poly g3 = inverse(reduce(g, r3));
      Poly h = mul(reduce(g, rq), inverse(scale(reduce(f, rq), 3)));
      return PrimeKeyPair{std::move(h), std::move(f), std::move(g3)};
    } catch (const NotInvertible&) {
      // resample g
    }
  }
}

Digest shared_secret(const Poly& r, const Poly& ct) {
  const Bytes er = encode(r);
  const Bytes ec = encode(ct);
  return sha256_concat({er, ec});
}

Encapsulation encap(const PrimeParams& params, const Poly& h,
                    std::mt19937_64& rng) {
  Poly r = sample_ternary(params.sample_r(), params.ring_z(), rng);
  const Poly c1 = mul(h, reduce(r, params.ring_q()));
  Poly ct = round_poly(c1);
  Poly m = sub(centerlift(c1, params.q), ct);
  const Digest k = shared_secret(r, ct);
  return Encapsulation{k, std::move(ct), std::move(m), std::move(r)};
}

std::optional<Digest> decap(const PrimeParams& params, const PrimeKeyPair& sk,
                            const Poly& ct_in) {
  const RingContext rq = params.ring_q();
  const RingContext r3 = params.ring_3();
  const Poly ct = ct_in.context().has_modulus()
                      ? centerlift(ct_in, params.q)
                      : reduce(ct_in, params.ring_z());

  const Poly e1 = mul(scale(reduce(sk.f, rq), 3), reduce(ct, rq));
  const Poly e2 = centerlift(e1, params.q);
  const Poly r2 = mul(reduce(e2, r3), sk.g3);
  const Poly r1 = centerlift(r2, 3);
  const Poly c_prime = round_poly(mul(sk.h, reduce(r1, rq)));
  if (!(c_prime == ct)) return std::nullopt;
  return shared_secret(r1, c_prime);
}

}  // namespace ntruvfk::prime
