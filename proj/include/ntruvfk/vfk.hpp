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
#include <span>
#include <vector>

#include "ntruvfk/error.hpp"

namespace ntruvfk {

// Row-major dense integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  std::int64_t at(int r, int c) const {
    return data[std::size_t(r) * cols + c];
  }
  std::span<const std::int64_t> row(int r) const {
    return {data.data() + std::size_t(r) * cols, std::size_t(cols)};
  }
};

// The three distinct off-diagonal Selling values. The lattice is VFK iff
// all are <= 0.
struct ObtuseValues {
  std::int64_t pair;    // v_i . v_{N+i} = (kP - q)k + P
  std::int64_t first;   // v_0 . v_i = -(kP + k - q)k - P - 1
  std::int64_t second;  // v_0 . v_{N+i} = (kP + k - q)(q - kP) - (P + 1)P

  bool obtuse() const { return pair <= 0 && first <= 0 && second <= 0; }
};

ObtuseValues obtuse_values(std::int64_t k, std::int64_t q, std::int64_t P);

// floor(kq / (k^2 + 1)).
std::int64_t choose_p(std::int64_t k, std::int64_t q);

struct KAndP {
  std::int64_t k;
  std::int64_t P;
};

// Largest k such that every k' in [1, k] yields an obtuse superbasis with
// P = choose_p(k', q). Throws when k = 1 already fails.
KAndP max_k(std::int64_t q);

// Compressed Selling matrix of the superbasis.
struct SellingData {
  std::int64_t q00;          // N((1+P)^2 + (k(P+1) - q)^2)
  std::int64_t r;            // q_{0,i},   1 <= i <= N
  std::int64_t s;            // q_{0,N+i}, 1 <= i <= N
  std::int64_t diag_first;   // 1 + k^2
  std::int64_t pair;         // (kP - q)k + P
  std::int64_t diag_second;  // P^2 + (q - Pk)^2
};

// The lattice L_k generated by the rows of [[I, -kI], [0, qI]], carried by
// the obtuse superbasis
//   v_i     = (e_i, -k e_i)            1 <= i <= N
//   v_{N+i} = (P e_i, (q - Pk) e_i)    1 <= i <= N
//   v_0     = -(v_1 + ... + v_2N)
// Superbasis index i only touches coordinates i and N+i (1-based), so
// nothing is stored densely.
class VfkLattice {
 public:
  // Throws Error(kNotObtuse) unless (k, q, P) give an obtuse superbasis.
  static VfkLattice build(int n, std::int64_t q, std::int64_t k,
                          std::int64_t P);

  int n() const { return n_; }
  int dimension() const { return 2 * n_; }
  int superbasis_size() const { return 2 * n_ + 1; }
  std::int64_t q() const { return q_; }
  std::int64_t k() const { return k_; }
  std::int64_t P() const { return P_; }
  const SellingData& selling() const { return selling_; }

  // q_ij = v_i . v_j from the compressed data.
  std::int64_t selling_entry(int i, int j) const;

  // Materialized v_i, length 2N.
  std::vector<std::int64_t> superbasis_row(int i) const;
  // (2N+1) x 2N, rows v_0..v_2N.
  IntMatrix superbasis() const;
  // 2N x 2N, rows v_1..v_2N, i.e. U_P M_k.
  IntMatrix basis() const;

  // sum_i u_i v_i for coefficients over the superbasis (length 2N+1).
  std::vector<std::int64_t> combine(std::span<const std::int64_t> u) const;

 private:
  VfkLattice(int n, std::int64_t q, std::int64_t k, std::int64_t P);

  int n_;
  std::int64_t q_, k_, P_;
  SellingData selling_;
};

// Squared length of a shortest nonzero vector, as the minimum of
// ||sum_{i in I} v_i||^2 over nonempty proper subsets I: a global minimum
// cut of the graph with weights -q_ij, found by forcing superbasis index 0
// and each other index onto opposite sides.
std::int64_t lambda1_squared(const VfkLattice& lat);
double lambda1(const VfkLattice& lat);

// ||v_1|| = sqrt(1 + k^2).
double lambda1_closed_form(const VfkLattice& lat);

}  // namespace ntruvfk
