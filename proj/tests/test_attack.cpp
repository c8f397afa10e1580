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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "ntruvfk/attack.hpp"

namespace ntruvfk::attack {
namespace {

using Vec = std::vector<std::int64_t>;

const hps::HpsParams kSurrogate{101, 512};
const hps::HpsParams kHps509{509, 2048};
const prime::PrimeParams kSntrup653{653, 4621, 288};

VfkLattice lattice_for(int n, std::int64_t q) {
  const KAndP kp = max_k(q);
  return VfkLattice::build(n, q, kp.k, kp.P);
}

class AttackFixture : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    surrogate_ = new AttackInstance(AttackInstance::create_hps(kSurrogate, 1));
    hps509_ = new AttackInstance(AttackInstance::create_hps(kHps509, 2));
    sntrup_ = new AttackInstance(AttackInstance::create_prime(kSntrup653, 3));
  }
  static void TearDownTestSuite() {
    delete surrogate_;
    delete hps509_;
    delete sntrup_;
  }
  static inline AttackInstance* surrogate_ = nullptr;
  static inline AttackInstance* hps509_ = nullptr;
  static inline AttackInstance* sntrup_ = nullptr;
};

TEST_F(AttackFixture, InstanceShape) {
  EXPECT_EQ(surrogate_->variant(), Variant::kHps);
  EXPECT_EQ(sntrup_->variant(), Variant::kPrime);
  EXPECT_EQ(hps509_->n(), 509);
  EXPECT_EQ(hps509_->ciphertext().size(), 509u);
  for (auto v : hps509_->ciphertext()) {
    EXPECT_GE(v, -1024);
    EXPECT_LT(v, 1024);
  }
  for (auto v : hps509_->message()) EXPECT_LE(std::llabs(v), 1);
}

TEST_F(AttackFixture, LatticeMessageIsCiphertextMinusHr) {
  for (const AttackInstance* inst : {surrogate_, hps509_, sntrup_}) {
    for (int i = 0; i < inst->n(); ++i) {
      EXPECT_EQ(centered(inst->ciphertext()[i] - inst->h_times_r()[i], inst->q()),
                inst->message()[i]);
    }
  }
}

TEST_F(AttackFixture, MembershipIdentity) {
  for (const AttackInstance* inst : {surrogate_, hps509_, sntrup_}) {
    EXPECT_NO_THROW(inst->check_membership_identity(max_k(inst->q()).k));
  }
}

TEST_F(AttackFixture, OracleWithZeroRangeIsExact) {
  const std::int64_t k = max_k(512).k;
  const OracleOutput o = oracle(*surrogate_, k, 0, 99);
  EXPECT_EQ(o.e, oracle_center(*surrogate_, k));
  for (int i = 0; i < surrogate_->n(); ++i) {
    EXPECT_EQ(o.e[i], centered(-k * surrogate_->h_times_r()[i], 512));
  }
  EXPECT_THROW(oracle(*surrogate_, k, -1, 0), Error);
}

TEST_F(AttackFixture, OracleStaysWithinRange) {
  const std::int64_t k = max_k(512).k;
  const Vec u = oracle_center(*surrogate_, k);
  for (int R : {1, 3, 17}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const OracleOutput o = oracle(*surrogate_, k, R, seed);
      for (int i = 0; i < surrogate_->n(); ++i) {
        ASSERT_LE(std::llabs(o.e[i] - u[i]), R);
      }
    }
  }
  EXPECT_EQ(oracle(*surrogate_, k, 5, 7).e, oracle(*surrogate_, k, 5, 7).e);
  EXPECT_NE(oracle(*surrogate_, k, 5, 7).e, oracle(*surrogate_, k, 5, 8).e);
}

TEST_F(AttackFixture, OracleNoiseIsUniform) {
  // Chi-square over the 11 offsets of R = 5, about 1e5 draws, df = 10.
  const int R = 5;
  const std::int64_t k = max_k(512).k;
  const Vec u = oracle_center(*surrogate_, k);
  std::vector<long> counts(2 * R + 1, 0);
  long total = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const OracleOutput o = oracle(*surrogate_, k, R, call_seed(5, R, seed));
    for (int i = 0; i < surrogate_->n(); ++i) {
      ++counts[o.e[i] - u[i] + R];
      ++total;
    }
  }
  const double expected = double(total) / counts.size();
  double chi2 = 0.0;
  for (long c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 29.59);  // 0.999 quantile
}

TEST(BuildTarget, Formula) {
  const Vec c{1, 0, -1, 1000};
  const Vec e{0, 5, 0, -2};
  const Vec t = build_target(c, 2048, 64, e);
  EXPECT_EQ(t, (Vec{0, 0, 0, 0, 64, 5, -64, centered(64000, 2048) - 2}));
  EXPECT_EQ(build_target(Vec(3, 0), 2048, 64, Vec(3, 0)), Vec(6, 0));
  EXPECT_THROW(build_target(c, 2048, 64, Vec(3, 0)), Error);
}

TEST_F(AttackFixture, TargetDistanceIdentity) {
  // (-msg, b + u) is a lattice point at squared distance
  // ||msg||^2 + ||u - E'||^2 from the target.
  for (const AttackInstance* inst : {surrogate_, hps509_, sntrup_}) {
    const VfkLattice lat = lattice_for(inst->n(), inst->q());
    const Vec u = oracle_center(*inst, lat.k());
    const OracleOutput o = oracle(*inst, lat.k(), 7, 123);
    const Vec t = build_target(*inst, lat.k(), o.e);
    const int n = inst->n();
    Vec w(2 * n);
    std::int64_t noise = 0;
    for (int i = 0; i < n; ++i) {
      w[i] = -inst->message()[i];
      w[n + i] = centered(lat.k() * inst->ciphertext()[i], inst->q()) + u[i];
      noise += (u[i] - o.e[i]) * (u[i] - o.e[i]);
    }
    const ScaledVector z = solve_coordinates(lat, w);
    for (auto v : z.numer) ASSERT_EQ(v % z.denom, 0);
    EXPECT_EQ(squared_distance(w, t), inst->message_norm_sq() + noise);
  }
}

TEST_F(AttackFixture, RecoversInsideGuaranteeBall) {
  for (const AttackInstance* inst : {surrogate_, hps509_, sntrup_}) {
    const VfkLattice lat = lattice_for(inst->n(), inst->q());
    const std::int64_t l2 = lambda1_squared(lat);
    const Vec u = oracle_center(*inst, lat.k());
    // Largest squared noise keeping 4 (||msg||^2 + ||delta||^2) < lambda1^2.
    const std::int64_t budget = (l2 - 1) / 4 - inst->message_norm_sq();
    ASSERT_GE(budget, 0) << inst->n();
    for (int j = 0; j < 10; ++j) {
      Vec e = u;
      std::int64_t left = budget;
      for (int i = j; i < inst->n() && left > 0; i += 7) {
        e[i] += (i % 2 ? 1 : -1);
        --left;
      }
      const RecoverResult r = recover(*inst, lat, e);
      ASSERT_TRUE(r.success);
      EXPECT_EQ(r.recovered->msg, Vec(inst->message().begin(), inst->message().end()));
      EXPECT_EQ(r.recovered->key, inst->shared_secret());
    }
  }
}

TEST_F(AttackFixture, CompleteRejectsWrongMessages) {
  for (const AttackInstance* inst : {surrogate_, hps509_, sntrup_}) {
    Vec msg(inst->message().begin(), inst->message().end());
    ASSERT_TRUE(inst->complete(msg).has_value());
    msg[0] = 2;
    EXPECT_FALSE(inst->complete(msg).has_value());
    msg[0] = inst->message()[0] == 0 ? 1 : 0;
    const auto other = inst->complete(msg);
    if (other) EXPECT_NE(other->key, inst->shared_secret());
  }
}

TEST_F(AttackFixture, RunAttackAtZeroRange) {
  for (const AttackInstance* inst : {surrogate_, hps509_, sntrup_}) {
    const VfkLattice lat = lattice_for(inst->n(), inst->q());
    const auto recs = run_attack(*inst, lat, 0, 3, 11);
    ASSERT_EQ(recs.size(), 3u);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      EXPECT_TRUE(recs[i].success);
      EXPECT_EQ(recs[i].call_index, static_cast<int>(i));
      EXPECT_EQ(recs[i].recovered_msg,
                Vec(inst->message().begin(), inst->message().end()));
    }
  }
}

TEST_F(AttackFixture, FarBeyondRangeAlwaysFails) {
  // Ten times the empirical threshold of hps509.
  const VfkLattice lat = lattice_for(509, 2048);
  const auto recs = run_attack(*hps509_, lat, 320, 100, 5);
  EXPECT_FALSE(any_success(recs));
  for (const auto& r : recs) EXPECT_TRUE(r.recovered_msg.empty());
}

TEST_F(AttackFixture, ThreadCountDoesNotChangeResults) {
  const VfkLattice lat = lattice_for(101, 512);
  const auto a = run_attack(*surrogate_, lat, 15, 40, 77, 1);
  const auto b = run_attack(*surrogate_, lat, 15, 40, 77, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].success, b[i].success);
    EXPECT_EQ(a[i].cvp_distance, b[i].cvp_distance);
    EXPECT_EQ(a[i].cvp_iterations, b[i].cvp_iterations);
  }
}

TEST_F(AttackFixture, Sweep) {
  const VfkLattice lat = lattice_for(101, 512);
  const SweepResult s = sweep_r0(*surrogate_, lat, 0, 2, 5, 1);
  EXPECT_EQ(s.r0, 2);
  EXPECT_EQ(s.records.size(), 15u);
  EXPECT_FALSE(sweep_r0(*surrogate_, lat, 200, 201, 5, 1).r0.has_value());
  EXPECT_THROW(sweep_r0(*surrogate_, lat, 3, 2, 5, 1), Error);
  EXPECT_THROW(run_attack(*surrogate_, lat, 0, 0, 1), Error);
  EXPECT_THROW(run_attack(*surrogate_, lattice_for(509, 2048), 0, 1, 1), Error);
}

TEST(CallSeed, DistinctAcrossRangeAndIndex) {
  std::set<std::uint64_t> seen;
  for (int R = 0; R < 50; ++R)
    for (int i = 0; i < 100; ++i) seen.insert(call_seed(42, R, i));
  EXPECT_EQ(seen.size(), 5000u);
  EXPECT_EQ(call_seed(1, 2, 3), call_seed(1, 2, 3));
}

TEST(Bounds, TheoreticalRange) {
  // With the closed-form minimum sqrt(1 + k^2) for q = 2048.
  const auto b = theoretical_r_bound(kHps509, 1 + 64 * 64);
  ASSERT_TRUE(b.has_value());
  EXPECT_NEAR(*b, std::sqrt((4097.0 / 4 - 254) / 509), 1e-12);
  EXPECT_NEAR(*b, 1.2301, 1e-4);
  EXPECT_EQ(kHps509.q / 8 - 2, 254);
  // With the true minimum 32^2 the ball barely contains the message.
  EXPECT_NEAR(*theoretical_r_bound(kHps509, 1024), std::sqrt(2.0 / 509), 1e-12);
  EXPECT_FALSE(theoretical_r_bound(hps::HpsParams{821, 4096}, 2026).has_value());
}

TEST(Bounds, GuaranteedRange) {
  EXPECT_EQ(guaranteed_range(509, 254, 4097), 1);
  EXPECT_EQ(guaranteed_range(509, 254, 1024), 0);
  EXPECT_FALSE(guaranteed_range(509, 256, 1024).has_value());
  EXPECT_EQ(guaranteed_range(1, 0, 401), 10);
}

}  // namespace
}  // namespace ntruvfk::attack
