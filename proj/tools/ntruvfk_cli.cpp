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

// Experiment driver for ntruvfk. Links only the C API.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ntruvfk/ntruvfk.h"

namespace {

using json = nlohmann::json;

constexpr int kExitParam = 2;
constexpr int kExitVerify = 3;
constexpr std::uint64_t kDefaultSeed = 20240229;

struct CliError {
  int code;
  std::string message;
};

void check(nv_status s) {
  if (s == NV_OK) return;
  const int code = s == NV_ERR_VERIFICATION ? kExitVerify : kExitParam;
  throw CliError{code, std::string(nv_status_string(s)) + ": " + nv_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Registry = std::unique_ptr<nv_registry, Deleter<nv_registry, nv_registry_free>>;
using Lattice = std::unique_ptr<nv_lattice, Deleter<nv_lattice, nv_lattice_free>>;
using Babai = std::unique_ptr<nv_babai, Deleter<nv_babai, nv_babai_free>>;
using Kem = std::unique_ptr<nv_kem, Deleter<nv_kem, nv_kem_free>>;
using Attack = std::unique_ptr<nv_attack, Deleter<nv_attack, nv_attack_free>>;

struct Options {
  std::string registry;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "csv";
  std::string summary;
  bool no_timing = false;
  int threads = 0;

  std::string set;
  int R = 0;
  int r_min = 0;
  int r_max = 0;
  int calls = 100;
  int trials = 100;
  int n = 677;
  std::int64_t q = 70;
  std::int64_t k = 10;
};

Registry open_registry(const Options& o) {
  nv_registry* raw = nullptr;
  check(o.registry.empty() ? nv_registry_builtin(&raw)
                           : nv_registry_load(o.registry.c_str(), &raw));
  return Registry(raw);
}

nv_param_info lookup(const nv_registry* reg, const std::string& name) {
  if (name.empty()) throw CliError{kExitParam, "--set is required"};
  nv_param_info info{};
  check(nv_registry_get(reg, name.c_str(), &info));
  return info;
}

const char* variant_label(nv_variant v) {
  switch (v) {
    case NV_VARIANT_HPS:
      return "hps";
    case NV_VARIANT_PRIME:
      return "prime";
    case NV_VARIANT_LATTICE:
      return "lattice";
  }
  return "?";
}

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::out | std::ios::trunc);
      if (!file_) throw CliError{kExitParam, "cannot write " + path};
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path, std::ios::out | std::ios::trunc);
  if (!f) throw CliError{kExitParam, "cannot write " + path};
  f << j.dump(2) << "\n";
}

double timing(const Options& o, double ms) { return o.no_timing ? 0.0 : ms; }

int cmd_table1(const Options& o) {
  static const std::int64_t kQs[] = {32,   64,   128,  256,  512, 1024,
                                     2048, 4096, 4621, 4591, 5167};
  Sink sink(o.out);
  json rows = json::array();
  if (o.format == "csv") sink.os() << "q,k,P\n";
  for (std::int64_t q : kQs) {
    std::int64_t k = 0, P = 0;
    check(nv_max_k(q, &k, &P));
    if (o.format == "csv") {
      sink.os() << q << "," << k << "," << P << "\n";
    } else {
      rows.push_back({{"q", q}, {"k", k}, {"P", P}});
    }
  }
  if (o.format == "json") sink.os() << rows.dump(2) << "\n";
  return 0;
}

int cmd_lambda1(const Options& o) {
  Registry reg = open_registry(o);
  const nv_param_info info = lookup(reg.get(), o.set);
  nv_lattice* raw = nullptr;
  check(nv_lattice_create(info.n, info.q, info.k, info.P, &raw));
  Lattice lat(raw);
  std::int64_t sq = 0;
  double len = 0.0;
  check(nv_lattice_lambda1(lat.get(), &sq, &len));
  const double closed = nv_lattice_lambda1_closed_form(lat.get());

  Sink sink(o.out);
  if (o.format == "csv") {
    sink.os() << "param_set,N,q,k,P,lambda1_sq,lambda1,sqrt_1_plus_k2\n"
              << info.name << "," << info.n << "," << info.q << "," << info.k
              << "," << info.P << "," << sq << "," << fmt(len, 9) << ","
              << fmt(closed, 9) << "\n";
  } else {
    sink.os() << json{{"param_set", info.name}, {"N", info.n},
                      {"q", info.q},            {"k", info.k},
                      {"P", info.P},            {"lambda1_sq", sq},
                      {"lambda1", len},         {"sqrt_1_plus_k2", closed}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

int cmd_keygen(const Options& o) {
  Registry reg = open_registry(o);
  const nv_param_info info = lookup(reg.get(), o.set);
  nv_kem* raw = nullptr;
  check(nv_kem_keygen(reg.get(), info.name, o.seed, &raw));
  Kem kem(raw);
  std::vector<std::int64_t> h(nv_kem_degree(kem.get()));
  check(nv_kem_public_key(kem.get(), h.data(), h.size()));

  Sink sink(o.out);
  if (o.format == "csv") {
    sink.os() << "index,coeff\n";
    for (std::size_t i = 0; i < h.size(); ++i) sink.os() << i << "," << h[i] << "\n";
  } else {
    sink.os() << json{{"param_set", info.name},
                      {"variant", variant_label(info.variant)},
                      {"seed", o.seed},
                      {"q", info.q},
                      {"public_key", h}}
                     .dump()
              << "\n";
  }
  return 0;
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t i) {
  std::uint64_t x = master + 0x9e3779b97f4a7c15ULL * (i + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int cmd_kem_roundtrip(const Options& o) {
  Registry reg = open_registry(o);
  const nv_param_info info = lookup(reg.get(), o.set);
  if (o.trials < 1) throw CliError{kExitParam, "--trials must be >= 1"};
  nv_kem* raw = nullptr;
  check(nv_kem_keygen(reg.get(), info.name, o.seed, &raw));
  Kem kem(raw);
  std::vector<std::int64_t> ct(nv_kem_degree(kem.get()));
  int agreed = 0;
  for (int t = 0; t < o.trials; ++t) {
    std::uint8_t k1[32], k2[32];
    check(nv_kem_encap(kem.get(), mix_seed(o.seed, t), ct.data(), ct.size(), k1));
    const nv_status s = nv_kem_decap(kem.get(), ct.data(), ct.size(), k2);
    if (s == NV_OK && std::equal(k1, k1 + 32, k2)) ++agreed;
  }
  Sink sink(o.out);
  if (o.format == "csv") {
    sink.os() << "param_set,trials,agreed\n"
              << info.name << "," << o.trials << "," << agreed << "\n";
  } else {
    sink.os() << json{{"param_set", info.name},
                      {"trials", o.trials},
                      {"agreed", agreed}}
                     .dump(2)
              << "\n";
  }
  return agreed == o.trials ? 0 : kExitVerify;
}

struct AttackRun {
  nv_param_info info;
  std::vector<nv_attack_record> records;
  std::optional<int> r0;
  double total_wall_s = 0.0;
};

AttackRun run_ranges(const Options& o, int r_min, int r_max) {
  if (o.calls < 1) throw CliError{kExitParam, "--calls must be >= 1"};
  if (r_min < 0 || r_min > r_max) {
    throw CliError{kExitParam, "need 0 <= R-min <= R-max"};
  }
  Registry reg = open_registry(o);
  AttackRun run;
  run.info = lookup(reg.get(), o.set);
  const auto start = std::chrono::steady_clock::now();
  nv_attack* raw = nullptr;
  check(nv_attack_create(reg.get(), run.info.name, o.seed, &raw));
  Attack att(raw);
  for (int R = r_min; R <= r_max; ++R) {
    std::vector<nv_attack_record> recs(o.calls);
    check(nv_attack_run(att.get(), R, o.calls, o.seed, o.threads, recs.data()));
    for (const auto& r : recs) {
      if (r.success) run.r0 = R;
    }
    run.records.insert(run.records.end(), recs.begin(), recs.end());
  }
  run.total_wall_s = timing(
      o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
             .count());
  // Keep the registry alive until the names have been copied out.
  run.info.name = nullptr;
  return run;
}

int emit_attack(const Options& o, AttackRun run) {
  const std::string name = o.set;
  json summary{{"param_set", name},
               {"R0", run.r0 ? json(*run.r0) : json(nullptr)},
               {"calls_per_R", o.calls},
               {"total_wall_s", run.total_wall_s}};
  Sink sink(o.out);
  if (o.format == "csv") {
    auto& os = sink.os();
    os << "param_set,variant,N,q,k,P,R,call_index,seed,success,cvp_distance,"
          "cvp_iterations,wall_ms\n";
    for (const auto& r : run.records) {
      os << name << "," << variant_label(run.info.variant) << "," << run.info.n
         << "," << run.info.q << "," << run.info.k << "," << run.info.P << ","
         << r.R << "," << r.call_index << "," << r.seed << "," << r.success
         << "," << fmt(r.cvp_distance) << "," << r.cvp_iterations << ","
         << fmt(timing(o, r.wall_ms), 3) << "\n";
    }
    if (o.summary.empty() && !o.out.empty()) std::cout << summary.dump() << "\n";
  } else {
    json recs = json::array();
    for (const auto& r : run.records) {
      recs.push_back({{"R", r.R},
                      {"call_index", r.call_index},
                      {"seed", r.seed},
                      {"success", r.success != 0},
                      {"cvp_distance", r.cvp_distance},
                      {"cvp_iterations", r.cvp_iterations},
                      {"wall_ms", timing(o, r.wall_ms)}});
    }
    json full = summary;
    full["variant"] = variant_label(run.info.variant);
    full["N"] = run.info.n;
    full["q"] = run.info.q;
    full["k"] = run.info.k;
    full["P"] = run.info.P;
    full["records"] = std::move(recs);
    sink.os() << full.dump(2) << "\n";
  }
  if (!o.summary.empty()) write_json_file(o.summary, summary);
  return 0;
}

int cmd_attack(const Options& o) { return emit_attack(o, run_ranges(o, o.R, o.R)); }

int cmd_sweep(const Options& o) {
  return emit_attack(o, run_ranges(o, o.r_min, o.r_max));
}

int cmd_bench_babai(const Options& o) {
  if (o.trials < 1) throw CliError{kExitParam, "--trials must be >= 1"};
  std::int64_t P = 0;
  check(nv_choose_p(o.k, o.q, &P));
  nv_lattice* raw = nullptr;
  check(nv_lattice_create(o.n, o.q, o.k, P, &raw));
  Lattice lat(raw);
  nv_babai* braw = nullptr;
  check(nv_babai_create(lat.get(), &braw));
  Babai babai(braw);

  const int dim = 2 * o.n;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::int64_t> bit(0, 1), wide(-1000, 1000);
  std::vector<std::int64_t> y(dim), xb(dim), xc(dim), numer(dim + 1);
  bool ok = true;

  Sink sink(o.out);
  auto& os = sink.os();
  os << "instance_id,solver,distance,wall_ms,iterations\n";
  for (int t = 0; t < o.trials; ++t) {
    for (int i = 0; i < o.n; ++i) y[i] = bit(rng);
    for (int i = o.n; i < dim; ++i) y[i] = wide(rng);

    std::int64_t db = 0, dc = 0;
    std::int32_t iters = 0;
    auto t0 = std::chrono::steady_clock::now();
    check(nv_babai_solve(babai.get(), y.data(), dim, xb.data(), &db));
    auto t1 = std::chrono::steady_clock::now();
    check(nv_lattice_cvp(lat.get(), y.data(), dim, xc.data(), &dc, &iters));
    auto t2 = std::chrono::steady_clock::now();

    std::int64_t denom = 1;
    check(nv_lattice_coordinates(lat.get(), xb.data(), dim, numer.data(), &denom));
    for (auto v : numer) ok = ok && v % denom == 0;
    ok = ok && dc <= db;

    const double mb = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double mc = std::chrono::duration<double, std::milli>(t2 - t1).count();
    os << t << ",babai," << fmt(std::sqrt(double(db))) << ","
       << fmt(timing(o, mb), 3) << ",0\n";
    os << t << ",mincut," << fmt(std::sqrt(double(dc))) << ","
       << fmt(timing(o, mc), 3) << "," << iters << "\n";
  }
  if (!ok) {
    std::cerr << "verification failed: a min-cut distance exceeded Babai's or "
                 "Babai returned a non-lattice point\n";
    return kExitVerify;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ntruvfk: NTRU message recovery through exact CVP on VFK lattices"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--registry", o.registry,
                 "Parameter registry file (default: built-in data/params.conf)");
  app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  app.add_option("--out", o.out, "Output path (default: stdout)");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--no-timing", o.no_timing,
               "Write 0 for all timings so reruns are byte-identical");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  auto* t1 = app.add_subcommand("table1", "max k and P for the standard NTRU moduli");
  auto* l1 = app.add_subcommand("lambda1", "shortest vector length of L_k");
  l1->add_option("--set", o.set, "Parameter set")->required();
  auto* kg = app.add_subcommand("keygen", "print a public key");
  kg->add_option("--set", o.set, "Parameter set")->required();
  auto* rt = app.add_subcommand("kem-roundtrip", "encapsulate and decapsulate");
  rt->add_option("--set", o.set, "Parameter set")->required();
  rt->add_option("--trials", o.trials, "Round trips")->capture_default_str();
  auto* at = app.add_subcommand("attack", "message recovery at one range R");
  at->add_option("--set", o.set, "Parameter set")->required();
  at->add_option("--R", o.R, "Oracle range")->required()->check(CLI::NonNegativeNumber);
  at->add_option("--calls", o.calls, "Oracle calls")->capture_default_str();
  at->add_option("--summary", o.summary, "Write the JSON summary here");
  auto* sw = app.add_subcommand("sweep", "message recovery over a range of R");
  sw->add_option("--set", o.set, "Parameter set")->required();
  sw->add_option("--R-min", o.r_min, "Smallest R")->required();
  sw->add_option("--R-max", o.r_max, "Largest R")->required();
  sw->add_option("--calls", o.calls, "Oracle calls per R")->capture_default_str();
  sw->add_option("--summary", o.summary, "Write the JSON summary here");
  auto* bb = app.add_subcommand("bench-babai", "Babai versus min-cut CVP");
  bb->add_option("--N", o.n, "Block count N")->capture_default_str();
  bb->add_option("--q", o.q, "Modulus q")->capture_default_str();
  bb->add_option("--k", o.k, "Multiplier k")->capture_default_str();
  bb->add_option("--trials", o.trials, "Targets")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParam;
  }

  try {
    if (*t1) return cmd_table1(o);
    if (*l1) return cmd_lambda1(o);
    if (*kg) return cmd_keygen(o);
    if (*rt) return cmd_kem_roundtrip(o);
    if (*at) return cmd_attack(o);
    if (*sw) return cmd_sweep(o);
    if (*bb) return cmd_bench_babai(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kExitParam;
}
