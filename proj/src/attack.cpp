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

#include "ntruvfk/attack.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

namespace ntruvfk::attack {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::int64_t> to_vector(const Poly& a) {
  return {a.coeffs().begin(), a.coeffs().end()};
}

std::int64_t mod_q(std::int64_t v, std::int64_t q) {
  v %= q;
  return v < 0 ? v + q : v;
}

}  // namespace

AttackInstance AttackInstance::create_hps(const hps::HpsParams& params,
                                          std::uint64_t seed) {
  params.validate();
  std::mt19937_64 rng(seed);
  const hps::HpsKeyPair kp = hps::keygen(params, rng);
  const hps::Encapsulation enc = hps::encap(params, kp.h, rng);
  const RingContext rq = params.ring_q();

  AttackInstance inst;
  inst.variant_ = Variant::kHps;
  inst.n_ = params.n;
  inst.q_ = params.q;
  inst.hps_ = params;
  inst.h_ = kp.h;
  inst.h_inv_ = inverse(kp.h);
  inst.c_ = to_vector(centerlift(enc.c, params.q));
  inst.msg_ = to_vector(lift3_phi_n(enc.m));
  inst.hr_ = to_vector(centerlift(mul(kp.h, reduce(enc.r, rq)), params.q));
  inst.key_ = enc.shared_secret;

  for (int i = 0; i < inst.n_; ++i) {
    if (mod_q(inst.c_[i] - inst.hr_[i] - inst.msg_[i], inst.q_) != 0) {
      throw Error(ErrorCode::kVerification, "c != h*r + Lift_3(m)");
    }
  }
  return inst;
}

AttackInstance AttackInstance::create_prime(const prime::PrimeParams& params,
                                            std::uint64_t seed) {
  params.validate();
  std::mt19937_64 rng(seed);
  const prime::PrimeKeyPair kp = prime::keygen(params, rng);
  const prime::Encapsulation enc = prime::encap(params, kp.h, rng);
  const RingContext rq = params.ring_q();

  AttackInstance inst;
  inst.variant_ = Variant::kPrime;
  inst.n_ = params.p;
  inst.q_ = params.q;
  inst.prime_ = params;
  inst.h_ = kp.h;
  inst.h_inv_ = inverse(kp.h);
  inst.c_ = to_vector(enc.ct);
  inst.hr_ = to_vector(centerlift(mul(kp.h, reduce(enc.r, rq)), params.q));
  inst.key_ = enc.shared_secret;

  inst.msg_.resize(inst.n_);
  for (int i = 0; i < inst.n_; ++i) {
    inst.msg_[i] = centered(inst.c_[i] - inst.hr_[i], inst.q_);
    if (inst.msg_[i] != -enc.m[i]) {
      throw Error(ErrorCode::kVerification, "ct != h*r - m");
    }
  }
  return inst;
}

std::int64_t AttackInstance::message_norm_sq() const {
  std::int64_t acc = 0;
  for (auto v : msg_) acc += v * v;
  return acc;
}

void AttackInstance::check_membership_identity(std::int64_t k) const {
  const std::vector<std::int64_t> u = oracle_center(*this, k);
  for (int i = 0; i < n_; ++i) {
    const std::int64_t b = centered(k * c_[i], q_);
    const std::int64_t num = k * msg_[i] - b - u[i];
    if (num % q_ != 0) {
      throw Error(ErrorCode::kVerification,
                  "k m - b - u is not divisible by q at index " +
                      std::to_string(i));
    }
    const std::int64_t v = num / q_;
    // Second half of (-m, -v) M_k.
    if (-k * -msg_[i] + q_ * -v != b + u[i]) {
      throw Error(ErrorCode::kVerification, "membership identity fails");
    }
  }
}

std::optional<AttackInstance::Recovered> AttackInstance::complete(
    std::span<const std::int64_t> msg) const {
  if (static_cast<int>(msg.size()) != n_) {
    throw Error(ErrorCode::kInvalidArgument, "candidate has wrong length");
  }
  for (auto v : msg) {
    if (v < -1 || v > 1) return std::nullopt;
  }
  Recovered out;
  out.msg.assign(msg.begin(), msg.end());

  if (variant_ == Variant::kHps) {
    const hps::HpsParams& p = *hps_;
    const Poly m(p.ring_z(), out.msg);
    if (!is_member(m, p.sample_m())) return std::nullopt;
    const RingContext rq = p.ring_q();
    const Poly c(rq, c_);
    const Poly r = centerlift(
        reduce_phi_n(mul(sub(c, reduce(m, rq)), h_inv_)), q_);
    if (!is_member(r, p.sample_r())) return std::nullopt;
    out.r = to_vector(r);
    out.key = hps::shared_secret(r, m);
    return out;
  }

  const prime::PrimeParams& p = *prime_;
  const RingContext rq = p.ring_q();
  const Poly ct(p.ring_z(), c_);
  const Poly r =
      centerlift(mul(sub(reduce(ct, rq), Poly(rq, out.msg)), h_inv_), q_);
  if (!is_member(r, p.sample_r())) return std::nullopt;
  out.r = to_vector(r);
  out.key = prime::shared_secret(r, ct);
  return out;
}

std::vector<std::int64_t> oracle_center(const AttackInstance& inst,
                                        std::int64_t k) {
  const auto hr = inst.h_times_r();
  std::vector<std::int64_t> u(hr.size());
  for (std::size_t i = 0; i < hr.size(); ++i) {
    u[i] = centered(-k * hr[i], inst.q());
  }
  return u;
}

OracleOutput oracle(const AttackInstance& inst, std::int64_t k, int R,
                    std::uint64_t seed) {
  if (R < 0) throw Error(ErrorCode::kInvalidArgument, "range R must be >= 0");
  OracleOutput out{oracle_center(inst, k), R, seed};
  if (R == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> delta(-R, R);
  for (auto& v : out.e) v += delta(rng);
  return out;
}

std::vector<std::int64_t> build_target(std::span<const std::int64_t> c,
                                       std::int64_t q, std::int64_t k,
                                       std::span<const std::int64_t> e) {
  if (e.size() != c.size()) {
    throw Error(ErrorCode::kInvalidArgument, "oracle output has wrong length");
  }
  const std::size_t n = c.size();
  std::vector<std::int64_t> t(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) t[n + i] = centered(k * c[i], q) + e[i];
  return t;
}

std::vector<std::int64_t> build_target(const AttackInstance& inst,
                                       std::int64_t k,
                                       std::span<const std::int64_t> e) {
  return build_target(inst.ciphertext(), inst.q(), k, e);
}

RecoverResult recover(const AttackInstance& inst, const VfkLattice& lat,
                      std::span<const std::int64_t> e) {
  if (lat.n() != inst.n() || lat.q() != inst.q()) {
    throw Error(ErrorCode::kContextMismatch,
                "lattice does not match the attacked parameter set");
  }
  const std::vector<std::int64_t> target = build_target(inst, lat.k(), e);
  const CvpResult w = cvp_vfk(lat, target);

  RecoverResult res;
  res.cvp_distance_sq = w.distance_sq;
  res.cvp_distance = w.distance;
  res.cvp_iterations = w.iterations;
  std::vector<std::int64_t> msg(inst.n());
  for (int i = 0; i < inst.n(); ++i) msg[i] = -w.point[i];
  res.recovered = inst.complete(msg);
  res.success = res.recovered.has_value();
  return res;
}

std::uint64_t call_seed(std::uint64_t master_seed, int R, int call_index) {
  const std::uint64_t per_r =
      splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(R)));
  return splitmix64(per_r + static_cast<std::uint64_t>(call_index));
}

std::vector<AttackRecord> run_attack(const AttackInstance& inst,
                                     const VfkLattice& lat, int R, int calls,
                                     std::uint64_t master_seed, int threads) {
  if (calls < 1) throw Error(ErrorCode::kInvalidArgument, "calls must be >= 1");
  if (R < 0) throw Error(ErrorCode::kInvalidArgument, "range R must be >= 0");

  std::vector<AttackRecord> records(calls);
  auto one_call = [&](int i) {
    const auto start = std::chrono::steady_clock::now();
    AttackRecord& rec = records[i];
    rec.R = R;
    rec.call_index = i;
    rec.seed = call_seed(master_seed, R, i);
    const OracleOutput e = oracle(inst, lat.k(), R, rec.seed);
    const RecoverResult res = recover(inst, lat, e.e);
    rec.success = res.recovered && res.recovered->key == inst.shared_secret();
    if (rec.success) rec.recovered_msg = res.recovered->msg;
    rec.cvp_distance = res.cvp_distance;
    rec.cvp_iterations = res.cvp_iterations;
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  };

  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, calls);
  if (workers == 1) {
    for (int i = 0; i < calls; ++i) one_call(i);
    return records;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < calls; i = next++) {
        try {
          one_call(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

bool any_success(std::span<const AttackRecord> records) {
  return std::any_of(records.begin(), records.end(),
                     [](const AttackRecord& r) { return r.success; });
}

SweepResult sweep_r0(const AttackInstance& inst, const VfkLattice& lat,
                     int r_min, int r_max, int calls,
                     std::uint64_t master_seed, int threads) {
  if (r_min < 0 || r_min > r_max) {
    throw Error(ErrorCode::kInvalidArgument, "needs 0 <= R_min <= R_max");
  }
  SweepResult out;
  for (int R = r_min; R <= r_max; ++R) {
    auto recs = run_attack(inst, lat, R, calls, master_seed, threads);
    if (any_success(recs)) out.r0 = R;
    out.records.insert(out.records.end(),
                       std::make_move_iterator(recs.begin()),
                       std::make_move_iterator(recs.end()));
  }
  return out;
}

std::optional<double> theoretical_r_bound(const hps::HpsParams& params,
                                          std::int64_t lambda1_sq) {
  params.validate();
  const double slack =
      static_cast<double>(lambda1_sq) / 4.0 - static_cast<double>(params.q / 8 - 2);
  if (slack <= 0.0) return std::nullopt;
  return std::sqrt(slack / params.n);
}

std::optional<int> guaranteed_range(int n, std::int64_t msg_norm_sq,
                                    std::int64_t lambda1_sq) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  auto holds = [&](std::int64_t R) {
    return 4 * (n * R * R + msg_norm_sq) < lambda1_sq;
  };
  if (!holds(0)) return std::nullopt;
  int R = 0;
  while (holds(R + 1)) ++R;
  return R;
}

}  // namespace ntruvfk::attack
