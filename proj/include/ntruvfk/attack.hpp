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
#include <span>
#include <vector>

#include "ntruvfk/codec.hpp"
#include "ntruvfk/cvp.hpp"
#include "ntruvfk/ntru_hps.hpp"
#include "ntruvfk/ntru_prime.hpp"
#include "ntruvfk/vfk.hpp"

namespace ntruvfk::attack {

enum class Variant { kHps, kPrime };

// One public key and one ciphertext under attack, together with the secrets
// the harness needs to simulate the oracle and to check the outcome.
//
// The lattice sees the message as msg = c - h*r (mod q), centered. For HPS
// that is Lift_3(m). For Prime, where ct = h*r - m, it is -m.
class AttackInstance {
 public:
  // Fresh keygen + encapsulation driven by `seed`.
  static AttackInstance create_hps(const hps::HpsParams& params,
                                   std::uint64_t seed);
  static AttackInstance create_prime(const prime::PrimeParams& params,
                                     std::uint64_t seed);

  Variant variant() const { return variant_; }
  int n() const { return n_; }
  std::int64_t q() const { return q_; }

  // Public data.
  const Poly& public_key() const { return h_; }
  std::span<const std::int64_t> ciphertext() const { return c_; }  // centered

  // Harness-only ground truth.
  std::span<const std::int64_t> message() const { return msg_; }
  std::span<const std::int64_t> h_times_r() const { return hr_; }  // centered
  const Digest& shared_secret() const { return key_; }
  std::int64_t message_norm_sq() const;

  // (-m, -v) M_k == (-m, b + u) with v = (k m - b - u) / q integral. Throws
  // Error(kVerification) otherwise.
  void check_membership_identity(std::int64_t k) const;

  // Attacker side: from a candidate lattice message, rebuild r and the
  // shared key. std::nullopt unless both land in their sample spaces.
  struct Recovered {
    std::vector<std::int64_t> msg;
    std::vector<std::int64_t> r;
    Digest key{};
  };
  std::optional<Recovered> complete(std::span<const std::int64_t> msg) const;

 private:
  AttackInstance() = default;

  Variant variant_ = Variant::kHps;
  int n_ = 0;
  std::int64_t q_ = 0;
  std::optional<hps::HpsParams> hps_;
  std::optional<prime::PrimeParams> prime_;
  Poly h_{RingContext(RingKind::kCyclic, 1)};
  Poly h_inv_{RingContext(RingKind::kCyclic, 1)};
  std::vector<std::int64_t> c_;
  std::vector<std::int64_t> msg_;
  std::vector<std::int64_t> hr_;
  Digest key_{};
};

struct OracleOutput {
  std::vector<std::int64_t> e;  // E'
  int R = 0;
  std::uint64_t seed = 0;
};

// u_i = centered(-k (h r)_i mod q).
std::vector<std::int64_t> oracle_center(const AttackInstance& inst,
                                        std::int64_t k);

// E'_i = u_i + delta_i, delta_i uniform on {-R..R}, drawn from `seed`.
OracleOutput oracle(const AttackInstance& inst, std::int64_t k, int R,
                    std::uint64_t seed);

// (0, ..., 0, b_1 + E'_1, ..., b_N + E'_N) with b_i = centered(k c_i mod q).
std::vector<std::int64_t> build_target(const AttackInstance& inst,
                                       std::int64_t k,
                                       std::span<const std::int64_t> e);
// Same, from a bare ciphertext c (any representatives modulo q).
std::vector<std::int64_t> build_target(std::span<const std::int64_t> c,
                                       std::int64_t q, std::int64_t k,
                                       std::span<const std::int64_t> e);

struct RecoverResult {
  bool success = false;  // candidate passed every membership check
  std::optional<AttackInstance::Recovered> recovered;
  std::int64_t cvp_distance_sq = 0;
  double cvp_distance = 0.0;
  int cvp_iterations = 0;
};

RecoverResult recover(const AttackInstance& inst, const VfkLattice& lat,
                      std::span<const std::int64_t> e);

struct AttackRecord {
  int R = 0;
  int call_index = 0;
  std::uint64_t seed = 0;
  // Recovered key equals the ground-truth key.
  bool success = false;
  std::vector<std::int64_t> recovered_msg;  // empty unless success
  double cvp_distance = 0.0;
  int cvp_iterations = 0;
  double wall_ms = 0.0;
};

// Seed of oracle call `call_index` at range R.
std::uint64_t call_seed(std::uint64_t master_seed, int R, int call_index);

// `calls` independent oracle + recover rounds, spread over `threads` worker
// threads (0 = hardware concurrency). Records come back in call order.
std::vector<AttackRecord> run_attack(const AttackInstance& inst,
                                     const VfkLattice& lat, int R, int calls,
                                     std::uint64_t master_seed,
                                     int threads = 0);

bool any_success(std::span<const AttackRecord> records);

struct SweepResult {
  std::optional<int> r0;  // largest R with at least one success
  std::vector<AttackRecord> records;
};

SweepResult sweep_r0(const AttackInstance& inst, const VfkLattice& lat,
                     int r_min, int r_max, int calls,
                     std::uint64_t master_seed, int threads = 0);

// sqrt((lambda1^2/4 - (q/8 - 2)) / N): the largest real R for which
// N R^2 + ||m||^2 < lambda1^2 / 4 holds with the HPS message weight.
// std::nullopt when even R = 0 misses the bound.
std::optional<double> theoretical_r_bound(const hps::HpsParams& params,
                                          std::int64_t lambda1_sq);

// Largest integer R with N R^2 + msg_norm_sq < lambda1_sq / 4.
std::optional<int> guaranteed_range(int n, std::int64_t msg_norm_sq,
                                    std::int64_t lambda1_sq);

}  // namespace ntruvfk::attack
