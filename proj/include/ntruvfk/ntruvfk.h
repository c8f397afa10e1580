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

#ifndef NTRUVFK_NTRUVFK_H_
#define NTRUVFK_NTRUVFK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NTRUVFK_BUILDING)
#define NV_API __declspec(dllexport)
#else
#define NV_API __declspec(dllimport)
#endif
#else
#define NV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nv_status {
  NV_OK = 0,
  NV_ERR_INVALID_ARGUMENT = 1,
  NV_ERR_CONTEXT_MISMATCH = 2,
  NV_ERR_NOT_INVERTIBLE = 3,
  NV_ERR_NOT_OBTUSE = 4,
  NV_ERR_UNKNOWN_SET = 5,
  NV_ERR_NUMERICAL = 6,
  NV_ERR_VERIFICATION = 7,
  NV_ERR_IO = 8,
  NV_ERR_BUFFER_TOO_SMALL = 9,
  NV_ERR_INTERNAL = 10,
} nv_status;

typedef enum nv_variant {
  NV_VARIANT_HPS = 0,
  NV_VARIANT_PRIME = 1,
  NV_VARIANT_LATTICE = 2,
} nv_variant;

// Message of the last failing call on the calling thread. Valid until the
// next failing call on that thread.
NV_API const char* nv_last_error(void);
NV_API const char* nv_status_string(nv_status status);
NV_API const char* nv_version(void);

/* Parameter registry */

typedef struct nv_registry nv_registry;

typedef struct nv_param_info {
  const char* name;  // owned by the registry
  nv_variant variant;
  int32_t n;  // N or p
  int64_t q;
  int32_t w;  // NTRU Prime weight, 0 otherwise
  int64_t k;
  int64_t P;
} nv_param_info;

NV_API nv_status nv_registry_builtin(nv_registry** out);
NV_API nv_status nv_registry_load(const char* path, nv_registry** out);
NV_API void nv_registry_free(nv_registry* reg);
NV_API size_t nv_registry_count(const nv_registry* reg);
NV_API nv_status nv_registry_at(const nv_registry* reg, size_t index,
                                nv_param_info* out);
// NV_ERR_UNKNOWN_SET lists the known names in nv_last_error().
NV_API nv_status nv_registry_get(const nv_registry* reg, const char* name,
                                 nv_param_info* out);

/* Obtuse superbasis parameters */

NV_API nv_status nv_choose_p(int64_t k, int64_t q, int64_t* P);
NV_API nv_status nv_max_k(int64_t q, int64_t* k, int64_t* P);
// out[0] = v_i.v_{N+i}, out[1] = v_0.v_i, out[2] = v_0.v_{N+i}; all <= 0
// iff the superbasis is obtuse.
NV_API nv_status nv_obtuse_values(int64_t k, int64_t q, int64_t P,
                                  int64_t out[3]);

/* VFK lattice L_k */

typedef struct nv_lattice nv_lattice;

NV_API nv_status nv_lattice_create(int32_t n, int64_t q, int64_t k, int64_t P,
                                   nv_lattice** out);
NV_API void nv_lattice_free(nv_lattice* lat);
NV_API int32_t nv_lattice_dimension(const nv_lattice* lat);  // 2N

NV_API nv_status nv_lattice_lambda1(const nv_lattice* lat, int64_t* length_sq,
                                    double* length);
NV_API double nv_lattice_lambda1_closed_form(const nv_lattice* lat);

// Closest lattice point to y (length 2N). point has room for 2N values.
NV_API nv_status nv_lattice_cvp(const nv_lattice* lat, const int64_t* y,
                                size_t len, int64_t* point,
                                int64_t* distance_sq, int32_t* iterations);

// Superbasis coordinates of y: numer has room for 2N+1 values, each to be
// divided by *denom.
NV_API nv_status nv_lattice_coordinates(const nv_lattice* lat,
                                        const int64_t* y, size_t len,
                                        int64_t* numer, int64_t* denom);

/* Babai nearest plane against the basis rows v_1..v_2N */

typedef struct nv_babai nv_babai;

NV_API nv_status nv_babai_create(const nv_lattice* lat, nv_babai** out);
NV_API void nv_babai_free(nv_babai* solver);
NV_API nv_status nv_babai_solve(const nv_babai* solver, const int64_t* y,
                                size_t len, int64_t* point,
                                int64_t* distance_sq);

/* KEM */

typedef struct nv_kem nv_kem;

// Key pair for an hps or prime registry entry, derived from seed.
NV_API nv_status nv_kem_keygen(const nv_registry* reg, const char* set,
                               uint64_t seed, nv_kem** out);
NV_API void nv_kem_free(nv_kem* kem);
NV_API int32_t nv_kem_degree(const nv_kem* kem);  // ciphertext length
// Public key coefficients in [0, q); buffer of nv_kem_degree() values.
NV_API nv_status nv_kem_public_key(const nv_kem* kem, int64_t* out,
                                   size_t cap);
NV_API nv_status nv_kem_encap(const nv_kem* kem, uint64_t seed,
                              int64_t* ciphertext, size_t cap,
                              uint8_t shared_secret[32]);
// NTRU Prime reports a failed re-encryption check as NV_ERR_VERIFICATION;
// HPS always yields a key (implicit rejection).
NV_API nv_status nv_kem_decap(const nv_kem* kem, const int64_t* ciphertext,
                              size_t len, uint8_t shared_secret[32]);

/* Message-recovery attack */

typedef struct nv_attack nv_attack;

typedef struct nv_attack_info {
  nv_variant variant;
  int32_t n;
  int64_t q;
  int64_t k;
  int64_t P;
  int64_t message_norm_sq;
  int64_t lambda1_sq;
  // Largest R with N R^2 + ||m||^2 < lambda1^2/4, or -1 if none.
  int32_t guaranteed_range;
} nv_attack_info;

typedef struct nv_attack_record {
  int32_t R;
  int32_t call_index;
  uint64_t seed;
  int32_t success;
  double cvp_distance;
  int32_t cvp_iterations;
  double wall_ms;
} nv_attack_record;

// Fresh key pair and ciphertext for an hps or prime entry.
NV_API nv_status nv_attack_create(const nv_registry* reg, const char* set,
                                  uint64_t seed, nv_attack** out);
NV_API void nv_attack_free(nv_attack* attack);
NV_API nv_status nv_attack_info_get(const nv_attack* attack,
                                    nv_attack_info* out);
// Fills records[0..calls). threads = 0 picks the hardware concurrency.
NV_API nv_status nv_attack_run(const nv_attack* attack, int32_t R,
                               int32_t calls, uint64_t master_seed,
                               int32_t threads, nv_attack_record* records);

// sqrt((lambda1_sq/4 - (q/8 - 2)) / N) for HPS parameters; *bound = -1
// when the right side is not positive.
NV_API nv_status nv_theoretical_r_bound(int32_t n, int64_t q,
                                        int64_t lambda1_sq, double* bound);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // NTRUVFK_NTRUVFK_H_
