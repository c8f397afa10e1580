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

#include "ntruvfk/ntruvfk.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "ntruvfk/attack.hpp"
#include "ntruvfk/cvp.hpp"
#include "ntruvfk/registry.hpp"

struct nv_registry {
  ntruvfk::ParamRegistry reg;
};

struct nv_lattice {
  ntruvfk::VfkLattice lat;
};

struct nv_babai {
  ntruvfk::BabaiSolver solver;
};

struct nv_kem {
  ntruvfk::ParamSet set;
  std::variant<ntruvfk::hps::HpsKeyPair, ntruvfk::prime::PrimeKeyPair> keys;
};

struct nv_attack {
  ntruvfk::ParamSet set;
  ntruvfk::VfkLattice lat;
  ntruvfk::attack::AttackInstance inst;
  std::int64_t lambda1_sq;
};

namespace {

thread_local std::string g_last_error;

nv_status to_status(ntruvfk::ErrorCode code) {
  using ntruvfk::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return NV_ERR_INVALID_ARGUMENT;
    case ErrorCode::kContextMismatch:
      return NV_ERR_CONTEXT_MISMATCH;
    case ErrorCode::kNotInvertible:
      return NV_ERR_NOT_INVERTIBLE;
    case ErrorCode::kNotObtuse:
      return NV_ERR_NOT_OBTUSE;
    case ErrorCode::kUnknownSet:
      return NV_ERR_UNKNOWN_SET;
    case ErrorCode::kNumerical:
      return NV_ERR_NUMERICAL;
    case ErrorCode::kVerification:
      return NV_ERR_VERIFICATION;
    case ErrorCode::kIo:
      return NV_ERR_IO;
  }
  return NV_ERR_INTERNAL;
}

nv_status fail(nv_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <typename F>
nv_status guarded(F&& f) {
  try {
    return f();
  } catch (const ntruvfk::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NV_ERR_INTERNAL, "unknown exception");
  }
}

nv_status null_arg(const char* what) {
  return fail(NV_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

nv_variant to_variant(ntruvfk::SetVariant v) {
  switch (v) {
    case ntruvfk::SetVariant::kHps:
      return NV_VARIANT_HPS;
    case ntruvfk::SetVariant::kPrime:
      return NV_VARIANT_PRIME;
    case ntruvfk::SetVariant::kLattice:
      break;
  }
  return NV_VARIANT_LATTICE;
}

void fill_info(const ntruvfk::ParamSet& s, nv_param_info* out) {
  out->name = s.name.c_str();
  out->variant = to_variant(s.variant);
  out->n = s.n;
  out->q = s.q;
  out->w = s.w;
  out->k = s.k;
  out->P = s.P;
}

void copy_digest(const ntruvfk::Digest& d, std::uint8_t* out) {
  std::memcpy(out, d.data(), d.size());
}

}  // namespace

extern "C" {

const char* nv_last_error(void) { return g_last_error.c_str(); }

const char* nv_status_string(nv_status status) {
  switch (status) {
    case NV_OK:
      return "ok";
    case NV_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case NV_ERR_CONTEXT_MISMATCH:
      return "context mismatch";
    case NV_ERR_NOT_INVERTIBLE:
      return "not invertible";
    case NV_ERR_NOT_OBTUSE:
      return "superbasis not obtuse";
    case NV_ERR_UNKNOWN_SET:
      return "unknown parameter set";
    case NV_ERR_NUMERICAL:
      return "numerical failure";
    case NV_ERR_VERIFICATION:
      return "verification failure";
    case NV_ERR_IO:
      return "i/o error";
    case NV_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case NV_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* nv_version(void) { return "0.1.0"; }

nv_status nv_registry_builtin(nv_registry** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new nv_registry{ntruvfk::ParamRegistry::builtin()};
    return NV_OK;
  });
}

nv_status nv_registry_load(const char* path, nv_registry** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new nv_registry{ntruvfk::ParamRegistry::load(path)};
    return NV_OK;
  });
}

void nv_registry_free(nv_registry* reg) { delete reg; }

size_t nv_registry_count(const nv_registry* reg) {
  return reg ? reg->reg.entries().size() : 0;
}

nv_status nv_registry_at(const nv_registry* reg, size_t index,
                         nv_param_info* out) {
  if (!reg) return null_arg("registry");
  if (!out) return null_arg("out");
  if (index >= reg->reg.entries().size()) {
    return fail(NV_ERR_INVALID_ARGUMENT, "registry index out of range");
  }
  fill_info(reg->reg.entries()[index], out);
  return NV_OK;
}

nv_status nv_registry_get(const nv_registry* reg, const char* name,
                          nv_param_info* out) {
  if (!reg) return null_arg("registry");
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  return guarded([&] {
    fill_info(reg->reg.get(name), out);
    return NV_OK;
  });
}

nv_status nv_choose_p(int64_t k, int64_t q, int64_t* P) {
  if (!P) return null_arg("P");
  return guarded([&] {
    *P = ntruvfk::choose_p(k, q);
    return NV_OK;
  });
}

nv_status nv_max_k(int64_t q, int64_t* k, int64_t* P) {
  if (!k || !P) return null_arg("output");
  return guarded([&] {
    const ntruvfk::KAndP kp = ntruvfk::max_k(q);
    *k = kp.k;
    *P = kp.P;
    return NV_OK;
  });
}

nv_status nv_obtuse_values(int64_t k, int64_t q, int64_t P, int64_t out[3]) {
  if (!out) return null_arg("out");
  const ntruvfk::ObtuseValues v = ntruvfk::obtuse_values(k, q, P);
  out[0] = v.pair;
  out[1] = v.first;
  out[2] = v.second;
  return NV_OK;
}

nv_status nv_lattice_create(int32_t n, int64_t q, int64_t k, int64_t P,
                            nv_lattice** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new nv_lattice{ntruvfk::VfkLattice::build(n, q, k, P)};
    return NV_OK;
  });
}

void nv_lattice_free(nv_lattice* lat) { delete lat; }

int32_t nv_lattice_dimension(const nv_lattice* lat) {
  return lat ? lat->lat.dimension() : 0;
}

nv_status nv_lattice_lambda1(const nv_lattice* lat, int64_t* length_sq,
                             double* length) {
  if (!lat) return null_arg("lattice");
  return guarded([&] {
    const std::int64_t sq = ntruvfk::lambda1_squared(lat->lat);
    if (length_sq) *length_sq = sq;
    if (length) *length = std::sqrt(static_cast<double>(sq));
    return NV_OK;
  });
}

double nv_lattice_lambda1_closed_form(const nv_lattice* lat) {
  return lat ? ntruvfk::lambda1_closed_form(lat->lat) : 0.0;
}

nv_status nv_lattice_cvp(const nv_lattice* lat, const int64_t* y, size_t len,
                         int64_t* point, int64_t* distance_sq,
                         int32_t* iterations) {
  if (!lat) return null_arg("lattice");
  if (!y) return null_arg("y");
  return guarded([&] {
    const ntruvfk::CvpResult res = ntruvfk::cvp_vfk(lat->lat, {y, len});
    if (point) std::copy(res.point.begin(), res.point.end(), point);
    if (distance_sq) *distance_sq = res.distance_sq;
    if (iterations) *iterations = res.iterations;
    return NV_OK;
  });
}

nv_status nv_lattice_coordinates(const nv_lattice* lat, const int64_t* y,
                                 size_t len, int64_t* numer, int64_t* denom) {
  if (!lat) return null_arg("lattice");
  if (!y) return null_arg("y");
  if (!numer || !denom) return null_arg("output");
  return guarded([&] {
    const ntruvfk::ScaledVector z =
        ntruvfk::solve_coordinates(lat->lat, {y, len});
    std::copy(z.numer.begin(), z.numer.end(), numer);
    *denom = z.denom;
    return NV_OK;
  });
}

nv_status nv_babai_create(const nv_lattice* lat, nv_babai** out) {
  if (!lat) return null_arg("lattice");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new nv_babai{ntruvfk::BabaiSolver(lat->lat.basis())};
    return NV_OK;
  });
}

void nv_babai_free(nv_babai* solver) { delete solver; }

nv_status nv_babai_solve(const nv_babai* solver, const int64_t* y, size_t len,
                         int64_t* point, int64_t* distance_sq) {
  if (!solver) return null_arg("solver");
  if (!y) return null_arg("y");
  return guarded([&] {
    const std::vector<std::int64_t> x = solver->solver.solve({y, len});
    if (point) std::copy(x.begin(), x.end(), point);
    if (distance_sq) *distance_sq = ntruvfk::squared_distance({y, len}, x);
    return NV_OK;
  });
}

nv_status nv_kem_keygen(const nv_registry* reg, const char* set,
                        uint64_t seed, nv_kem** out) {
  if (!reg) return null_arg("registry");
  if (!set) return null_arg("set");
  if (!out) return null_arg("out");
  return guarded([&] {
    const ntruvfk::ParamSet& s = reg->reg.get(set);
    std::mt19937_64 rng(seed);
    if (s.variant == ntruvfk::SetVariant::kHps) {
      *out = new nv_kem{s, ntruvfk::hps::keygen(s.hps(), rng)};
    } else if (s.variant == ntruvfk::SetVariant::kPrime) {
      *out = new nv_kem{s, ntruvfk::prime::keygen(s.prime(), rng)};
    } else {
      return fail(NV_ERR_INVALID_ARGUMENT,
                  s.name + " is a bare lattice set without a KEM");
    }
    return NV_OK;
  });
}

void nv_kem_free(nv_kem* kem) { delete kem; }

int32_t nv_kem_degree(const nv_kem* kem) { return kem ? kem->set.n : 0; }

nv_status nv_kem_public_key(const nv_kem* kem, int64_t* out, size_t cap) {
  if (!kem) return null_arg("kem");
  if (!out) return null_arg("out");
  if (cap < static_cast<size_t>(kem->set.n)) {
    return fail(NV_ERR_BUFFER_TOO_SMALL, "public key buffer too small");
  }
  const ntruvfk::Poly& h =
      std::visit([](const auto& kp) -> const ntruvfk::Poly& { return kp.h; },
                 kem->keys);
  std::copy(h.coeffs().begin(), h.coeffs().end(), out);
  return NV_OK;
}

nv_status nv_kem_encap(const nv_kem* kem, uint64_t seed, int64_t* ciphertext,
                       size_t cap, uint8_t shared_secret[32]) {
  if (!kem) return null_arg("kem");
  if (!ciphertext || !shared_secret) return null_arg("output");
  if (cap < static_cast<size_t>(kem->set.n)) {
    return fail(NV_ERR_BUFFER_TOO_SMALL, "ciphertext buffer too small");
  }
  return guarded([&] {
    std::mt19937_64 rng(seed);
    if (const auto* kp = std::get_if<ntruvfk::hps::HpsKeyPair>(&kem->keys)) {
      const auto enc = ntruvfk::hps::encap(kem->set.hps(), kp->h, rng);
      std::copy(enc.c.coeffs().begin(), enc.c.coeffs().end(), ciphertext);
      copy_digest(enc.shared_secret, shared_secret);
    } else {
      const auto& pk = std::get<ntruvfk::prime::PrimeKeyPair>(kem->keys);
      const auto enc = ntruvfk::prime::encap(kem->set.prime(), pk.h, rng);
      std::copy(enc.ct.coeffs().begin(), enc.ct.coeffs().end(), ciphertext);
      copy_digest(enc.shared_secret, shared_secret);
    }
    return NV_OK;
  });
}

nv_status nv_kem_decap(const nv_kem* kem, const int64_t* ciphertext,
                       size_t len, uint8_t shared_secret[32]) {
  if (!kem) return null_arg("kem");
  if (!ciphertext || !shared_secret) return null_arg("argument");
  if (len != static_cast<size_t>(kem->set.n)) {
    return fail(NV_ERR_INVALID_ARGUMENT, "ciphertext has wrong length");
  }
  return guarded([&] {
    std::vector<std::int64_t> c(ciphertext, ciphertext + len);
    if (const auto* kp = std::get_if<ntruvfk::hps::HpsKeyPair>(&kem->keys)) {
      const auto params = kem->set.hps();
      const ntruvfk::Poly cp(params.ring_q(), std::move(c));
      copy_digest(ntruvfk::hps::decap(params, *kp, cp), shared_secret);
      return NV_OK;
    }
    const auto& sk = std::get<ntruvfk::prime::PrimeKeyPair>(kem->keys);
    const auto params = kem->set.prime();
    const ntruvfk::Poly cp(params.ring_z(), std::move(c));
    const auto key = ntruvfk::prime::decap(params, sk, cp);
    if (!key) return fail(NV_ERR_VERIFICATION, "re-encryption check failed");
    copy_digest(*key, shared_secret);
    return NV_OK;
  });
}

nv_status nv_attack_create(const nv_registry* reg, const char* set,
                           uint64_t seed, nv_attack** out) {
  if (!reg) return null_arg("registry");
  if (!set) return null_arg("set");
  if (!out) return null_arg("out");
  return guarded([&] {
    const ntruvfk::ParamSet& s = reg->reg.get(set);
    namespace at = ntruvfk::attack;
    std::optional<at::AttackInstance> inst;
    if (s.variant == ntruvfk::SetVariant::kHps) {
      inst = at::AttackInstance::create_hps(s.hps(), seed);
    } else if (s.variant == ntruvfk::SetVariant::kPrime) {
      inst = at::AttackInstance::create_prime(s.prime(), seed);
    } else {
      return fail(NV_ERR_INVALID_ARGUMENT,
                  s.name + " is a bare lattice set without a KEM");
    }
    inst->check_membership_identity(s.k);
    ntruvfk::VfkLattice lat = s.lattice();
    const std::int64_t l1 = ntruvfk::lambda1_squared(lat);
    *out = new nv_attack{s, std::move(lat), std::move(*inst), l1};
    return NV_OK;
  });
}

void nv_attack_free(nv_attack* attack) { delete attack; }

nv_status nv_attack_info_get(const nv_attack* attack, nv_attack_info* out) {
  if (!attack) return null_arg("attack");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto& s = attack->set;
    out->variant = to_variant(s.variant);
    out->n = s.n;
    out->q = s.q;
    out->k = s.k;
    out->P = s.P;
    out->message_norm_sq = attack->inst.message_norm_sq();
    out->lambda1_sq = attack->lambda1_sq;
    const auto g = ntruvfk::attack::guaranteed_range(
        s.n, out->message_norm_sq, attack->lambda1_sq);
    out->guaranteed_range = g ? *g : -1;
    return NV_OK;
  });
}

nv_status nv_attack_run(const nv_attack* attack, int32_t R, int32_t calls,
                        uint64_t master_seed, int32_t threads,
                        nv_attack_record* records) {
  if (!attack) return null_arg("attack");
  if (!records) return null_arg("records");
  return guarded([&] {
    const auto recs = ntruvfk::attack::run_attack(
        attack->inst, attack->lat, R, calls, master_seed, threads);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& r = recs[i];
      records[i] = nv_attack_record{r.R,
                                    r.call_index,
                                    r.seed,
                                    r.success ? 1 : 0,
                                    r.cvp_distance,
                                    r.cvp_iterations,
                                    r.wall_ms};
    }
    return NV_OK;
  });
}

nv_status nv_theoretical_r_bound(int32_t n, int64_t q, int64_t lambda1_sq,
                                 double* bound) {
  if (!bound) return null_arg("bound");
  return guarded([&] {
    const auto b = ntruvfk::attack::theoretical_r_bound(
        ntruvfk::hps::HpsParams{n, q}, lambda1_sq);
    *bound = b ? *b : -1.0;
    return NV_OK;
  });
}

}  // extern "C"
