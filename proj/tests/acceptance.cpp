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

// Acceptance checks. Usage: ntruvfk_acceptance [criterion | all]
//
// Prints one "[PASS] name: ..." or "[FAIL] name: ..." line per criterion and
// exits nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ntruvfk/attack.hpp"
#include "ntruvfk/cvp.hpp"
#include "ntruvfk/ntru_hps.hpp"
#include "ntruvfk/ntru_prime.hpp"
#include "ntruvfk/registry.hpp"
#include "ntruvfk/vfk.hpp"

namespace {

using namespace ntruvfk;
using Vec = std::vector<std::int64_t>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

std::int64_t dot(std::span<const std::int64_t> a,
                 std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_lattice_point(const VfkLattice& lat, std::span<const std::int64_t> y) {
  const ScaledVector z = solve_coordinates(lat, y);
  return std::all_of(z.numer.begin(), z.numer.end(),
                     [&](std::int64_t v) { return v % z.denom == 0; });
}

// ---------------------------------------------------------------------------

Outcome table1() {
  struct Row {
    std::int64_t q, k, P;
  };
  const Row rows[] = {{32, 8, 3},     {64, 11, 5},    {128, 16, 7},
                      {256, 23, 11},  {512, 32, 15},  {1024, 47, 21},
                      {2048, 64, 31}, {4096, 91, 45}, {4621, 101, 45},
                      {4591, 98, 46}, {5167, 106, 48}};
  const auto t0 = Clock::now();
  int ok = 0;
  std::ostringstream bad;
  for (const Row& r : rows) {
    const KAndP kp = max_k(r.q);
    if (kp.k == r.k && kp.P == r.P && choose_p(r.k, r.q) == r.P) {
      ++ok;
    } else {
      bad << " q=" << r.q << "->(" << kp.k << "," << kp.P << ")";
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/11 columns match" << bad.str();
  return {ok == 11 && secs < 1.0, d.str()};
}

Outcome table2() {
  struct Row {
    const char* set;
    double printed;
  };
  const Row rows[] = {{"ntruhps2048509", 64.0078},
                      {"ntruhps2048677", 64.0078},
                      {"sntrup653", 101.004},
                      {"sntrup761", 98.005}};
  const ParamRegistry reg = ParamRegistry::builtin();
  const auto t0 = Clock::now();
  bool pass = true;
  std::ostringstream d;
  for (const Row& r : rows) {
    const ParamSet& ps = reg.get(r.set);
    const VfkLattice lat = ps.lattice();
    const double got = lambda1(lat);
    const double closed = lambda1_closed_form(lat);
    const bool row_ok = std::abs(got - r.printed) <= 1e-3 &&
                        std::abs(got - closed) <= 1e-9 * closed;
    pass &= row_ok;
    d << " " << r.set << ": lambda1=" << got << " sqrt(1+k^2)=" << closed;
    if (!row_ok) {
      // Shortest witness in the planar block (a, -k a mod q).
      std::int64_t best_a = 0, best_b = 0, best = ps.q * ps.q;
      for (std::int64_t a = 1; a <= ps.q; ++a) {
        const std::int64_t b = centered(-ps.k * a, ps.q);
        if (a * a + b * b < best) {
          best = a * a + b * b;
          best_a = a;
          best_b = b;
        }
      }
      Vec w(lat.dimension(), 0);
      w[0] = best_a;
      w[lat.n()] = best_b;
      d << " witness a*e_1+b*e_{N+1} with (a,b)=(" << best_a << "," << best_b
        << "), norm^2=" << best
        << (is_lattice_point(lat, w) ? " in L_k" : " NOT in L_k") << ";";
    }
  }
  const double secs = seconds_since(t0);
  return {pass && secs < 60.0, d.str()};
}

Outcome cvp_exactness() {
  struct Case {
    const char* set;
    int targets;
  };
  const ParamRegistry reg = ParamRegistry::builtin();
  const auto t0 = Clock::now();
  std::ostringstream d;
  bool pass = true;
  for (const Case& c : {Case{"toy-2-8", 300}, Case{"toy-3-32", 100}}) {
    const ParamSet& ps = reg.get(c.set);
    const VfkLattice lat = ps.lattice();
    const IntMatrix basis = lat.basis();
    std::mt19937_64 rng(0xC0FFEE + ps.n);
    std::uniform_int_distribution<std::int64_t> dist(-2 * ps.q, 2 * ps.q);
    int agree = 0;
    for (int t = 0; t < c.targets; ++t) {
      Vec y(lat.dimension());
      for (auto& v : y) v = dist(rng);
      const CvpResult r = cvp_vfk(lat, y);
      const Vec b = cvp_bruteforce(basis, y);
      if (r.distance_sq == squared_distance(y, b) &&
          r.distance_sq == squared_distance(y, r.point) &&
          is_lattice_point(lat, r.point)) {
        ++agree;
      }
    }
    pass &= agree == c.targets;
    d << " " << c.set << ": " << agree << "/" << c.targets << " exact;";
  }
  const double secs = seconds_since(t0);
  return {pass && secs < 120.0, d.str()};
}

Outcome mincut_optimality() {
  struct Lat {
    std::int64_t q, k, P;
  };
  const Lat lats[] = {{8, 3, 2}, {32, 8, 3}, {70, 10, 6}, {512, 32, 15},
                      {2048, 64, 31}};
  std::int64_t steps = 0, optimal = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Lat& l : lats) {
      const VfkLattice lat = VfkLattice::build(n, l.q, l.k, l.P);
      const IntMatrix sb = lat.superbasis();
      const int count = lat.superbasis_size();
      std::vector<std::int64_t> g(count * count);
      for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) g[i * count + j] = dot(sb.row(i), sb.row(j));

      std::mt19937_64 rng(1000 * n + l.q);
      std::uniform_int_distribution<std::int64_t> dist(-3 * l.q, 3 * l.q);
      for (int target = 0; target < 40; ++target) {
        Vec y(lat.dimension());
        for (auto& v : y) v = dist(rng);
        const ScaledVector z = solve_coordinates(lat, y);
        Vec u(count);
        for (int i = 0; i < count; ++i) u[i] = floor_div(z.numer[i], z.denom);

        cvp_vfk(lat, y, [&](const CvpStep& step) {
          // scale * Q(t), with p = z - u evaluated densely.
          Vec p(count);
          for (int i = 0; i < count; ++i) p[i] = z.numer[i] - z.denom * u[i];
          Vec s(count, 0);
          for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j) s[i] -= 2 * g[i * count + j] * p[j];
          auto q_of = [&](unsigned mask) {
            std::int64_t v = 0;
            for (int i = 0; i < count; ++i) {
              if (!(mask >> i & 1)) continue;
              v += s[i];
              for (int j = 0; j < count; ++j) {
                if (mask >> j & 1) v += z.denom * g[i * count + j];
              }
            }
            return v;
          };
          std::int64_t best = std::numeric_limits<std::int64_t>::max();
          for (unsigned mask = 0; mask < (1u << count); ++mask) {
            best = std::min(best, q_of(mask));
          }
          unsigned chosen = 0;
          for (int i = 0; i < count; ++i) chosen |= unsigned(step.t[i]) << i;
          ++steps;
          if (q_of(chosen) == best) ++optimal;
          for (int i = 0; i < count; ++i) u[i] += step.t[i];
        });
      }
    }
  }
  std::ostringstream d;
  d << optimal << "/" << steps
    << " min-cut steps attain min Q(t) over all assignments (N=1..5)";
  return {steps > 0 && optimal == steps, d.str()};
}

Outcome kem_correctness() {
  const ParamRegistry reg = ParamRegistry::builtin();
  const char* sets[] = {"ntruhps2048509", "ntruhps2048677", "ntruhps4096821",
                        "sntrup653",      "sntrup761",      "sntrup857"};
  constexpr int kTrials = 1000;
  constexpr int kKeys = 10;
  struct Tally {
    int agreed = 0;
    int ternary = 0;
  };
  std::vector<Tally> tally(std::size(sets));
  std::vector<std::thread> pool;
  for (std::size_t s = 0; s < std::size(sets); ++s) {
    pool.emplace_back([&, s] {
      const ParamSet& ps = reg.get(sets[s]);
      std::mt19937_64 rng(0x5EED0000 + s);
      for (int key = 0; key < kKeys; ++key) {
        if (ps.variant == SetVariant::kHps) {
          const hps::HpsParams hp = ps.hps();
          const hps::HpsKeyPair kp = hps::keygen(hp, rng);
          for (int t = 0; t < kTrials / kKeys; ++t) {
            const hps::Encapsulation e = hps::encap(hp, kp.h, rng);
            tally[s].agreed += hps::decap(hp, kp, e.c) == e.shared_secret;
          }
        } else {
          const prime::PrimeParams pp = ps.prime();
          const prime::PrimeKeyPair sk = prime::keygen(pp, rng);
          for (int t = 0; t < kTrials / kKeys; ++t) {
            const prime::Encapsulation e = prime::encap(pp, sk.h, rng);
            const auto k = prime::decap(pp, sk, e.ct);
            tally[s].agreed += k.has_value() && *k == e.shared_secret;
            tally[s].ternary += is_ternary(e.m);
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  bool pass = true;
  std::ostringstream d;
  for (std::size_t s = 0; s < std::size(sets); ++s) {
    const bool prime = std::string(sets[s]).rfind("sntrup", 0) == 0;
    d << " " << sets[s] << ": " << tally[s].agreed << "/" << kTrials;
    pass &= tally[s].agreed == kTrials;
    if (prime) {
      d << " (m ternary " << tally[s].ternary << "/" << kTrials << ")";
      pass &= tally[s].ternary == kTrials;
    }
    d << ";";
  }
  return {pass, d.str()};
}

attack::AttackInstance make_instance(const ParamSet& ps, std::uint64_t seed) {
  return ps.variant == SetVariant::kHps
             ? attack::AttackInstance::create_hps(ps.hps(), seed)
             : attack::AttackInstance::create_prime(ps.prime(), seed);
}

Outcome guarantee_regime() {
  const ParamRegistry reg = ParamRegistry::builtin();
  bool pass = true;
  std::ostringstream d;
  for (const ParamSet& ps : reg.entries()) {
    if (ps.variant == SetVariant::kLattice) continue;
    const attack::AttackInstance inst = make_instance(ps, 0xA77AC4);
    const VfkLattice lat = ps.lattice();
    inst.check_membership_identity(lat.k());
    const std::int64_t closed_sq = 1 + ps.k * ps.k;
    const std::int64_t true_sq = lambda1_squared(lat);
    const auto r_closed =
        attack::guaranteed_range(ps.n, inst.message_norm_sq(), closed_sq);
    const auto r_true =
        attack::guaranteed_range(ps.n, inst.message_norm_sq(), true_sq);
    std::vector<int> ranges{0};
    if (r_closed && *r_closed > 0) ranges.push_back(*r_closed);
    d << " " << ps.name << " (|m|^2=" << inst.message_norm_sq()
      << ", R_max=" << (r_closed ? std::to_string(*r_closed) : "none")
      << " with sqrt(1+k^2), "
      << (r_true ? std::to_string(*r_true) : "none") << " with lambda1):";
    for (int R : ranges) {
      const auto recs = attack::run_attack(inst, lat, R, 20, 0x6A7E + R);
      const auto ok = std::count_if(recs.begin(), recs.end(),
                                    [](const auto& r) { return r.success; });
      pass &= ok == 20;
      d << " R=" << R << " " << ok << "/20";
    }
    d << ";";
  }
  return {pass, d.str()};
}

Outcome r0_ballpark() {
  const ParamRegistry reg = ParamRegistry::builtin();
  const auto t0 = Clock::now();
  std::ostringstream d;
  bool pass = true;
  auto successes = [](const std::vector<attack::AttackRecord>& recs) {
    return std::count_if(recs.begin(), recs.end(),
                         [](const auto& r) { return r.success; });
  };

  {
    const ParamSet& ps = reg.get("ntruhps2048509");
    const auto inst = make_instance(ps, 509);
    const VfkLattice lat = ps.lattice();
    const auto at26 = successes(attack::run_attack(inst, lat, 26, 100, 26));
    d << " ntruhps2048509 R=26: " << at26 << "/100;";
    pass &= at26 > 0;
    long at32 = 0;
    int batch = 0;
    while (batch < 3 && at32 == 0) {
      at32 = successes(attack::run_attack(inst, lat, 32, 100, 3200 + batch));
      ++batch;
    }
    d << " R=32: " << at32 << "/100 in batch " << batch << ";";
    pass &= at32 > 0;
  }
  {
    const ParamSet& ps = reg.get("sntrup653");
    const auto inst = make_instance(ps, 653);
    const VfkLattice lat = ps.lattice();
    long at50 = 0;
    int batch = 0;
    while (batch < 3 && at50 == 0) {
      at50 = successes(attack::run_attack(inst, lat, 50, 100, 5000 + batch));
      ++batch;
    }
    d << " sntrup653 R=50: " << at50 << "/100 in batch " << batch << ";";
    pass &= at50 > 0;
  }
  {
    const ParamSet& ps = reg.get("hps-surrogate-101");
    const auto inst = make_instance(ps, 101);
    const auto sweep = attack::sweep_r0(inst, ps.lattice(), 0, 30, 100, 101);
    d << " surrogate R0=" << (sweep.r0 ? std::to_string(*sweep.r0) : "none")
      << ";";
    pass &= sweep.r0.has_value() && *sweep.r0 >= 5;
  }
  const double secs = seconds_since(t0);
  return {pass && secs < 4 * 3600.0, d.str()};
}

Outcome babai_dominance() {
  const int n = 677;
  const VfkLattice lat = VfkLattice::build(n, 70, 10, choose_p(10, 70));
  const BabaiSolver babai(lat.basis());
  std::mt19937_64 rng(0xBAB0);
  std::uniform_int_distribution<std::int64_t> bit(0, 1), wide(-1000, 1000);
  int dominated = 0, lattice = 0, equal = 0;
  for (int t = 0; t < 100; ++t) {
    Vec y(2 * n);
    for (int i = 0; i < n; ++i) y[i] = bit(rng);
    for (int i = n; i < 2 * n; ++i) y[i] = wide(rng);
    const CvpResult exact = cvp_vfk(lat, y);
    const Vec b = babai.solve(y);
    const std::int64_t db = squared_distance(y, b);
    dominated += exact.distance_sq <= db;
    equal += exact.distance_sq == db;
    lattice += is_lattice_point(lat, b);
  }
  std::ostringstream d;
  d << "P=" << lat.P() << "; min-cut <= Babai on " << dominated
    << "/100 (equal on " << equal << "), Babai lattice points " << lattice
    << "/100";
  return {dominated == 100 && lattice == 100, d.str()};
}

Outcome monotone_convergence() {
  const ParamRegistry reg = ParamRegistry::builtin();
  const auto& sets = reg.entries();
  constexpr int kTargets = 1000;
  int ok = 0, max_iters = 0;
  for (int t = 0; t < kTargets; ++t) {
    const ParamSet& ps = sets[t % sets.size()];
    const VfkLattice lat = ps.lattice();
    std::mt19937_64 rng(0x30A0 + t);
    std::uniform_int_distribution<std::int64_t> dist(-ps.q, ps.q);
    Vec y(lat.dimension());
    for (auto& v : y) v = dist(rng);
    bool monotone = true, converged = false;
    const CvpResult r = cvp_vfk(lat, y, [&](const CvpStep& s) {
      monotone &= s.distance_sq_after <= s.distance_sq_before;
      const auto ones = std::count(s.t.begin(), s.t.end(), 1);
      converged = ones == 0 || ones == static_cast<long>(s.t.size());
    });
    max_iters = std::max(max_iters, r.iterations);
    if (monotone && converged && r.iterations <= lat.superbasis_size()) ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << kTargets << " targets over " << sets.size()
    << " lattices non-increasing and converged within 2N+1 rounds (max "
    << max_iters << " rounds)";
  return {ok == kTargets, d.str()};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {"table1", table1},
    {"table2", table2},
    {"cvp_exactness", cvp_exactness},
    {"mincut_optimality", mincut_optimality},
    {"kem_correctness", kem_correctness},
    {"guarantee_regime", guarantee_regime},
    {"r0_ballpark", r0_ballpark},
    {"babai_dominance", babai_dominance},
    {"monotone_convergence", monotone_convergence},
};

}  // namespace

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  bool any = false, all_pass = true;
  for (const Criterion& c : kCriteria) {
    if (which != "all" && which != c.name) continue;
    any = true;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    all_pass &= o.pass;
  }
  if (!any) {
    std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
    return 2;
  }
  return all_pass ? 0 : 1;
}
