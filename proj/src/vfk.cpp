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

#include "ntruvfk/vfk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ntruvfk/maxflow.hpp"

namespace ntruvfk {

ObtuseValues obtuse_values(std::int64_t k, std::int64_t q, std::int64_t P) {
  const std::int64_t t = k * P + k - q;
  return ObtuseValues{
      (k * P - q) * k + P,
      -t * k - P - 1,
      t * (q - k * P) - (P + 1) * P,
  };
}

std::int64_t choose_p(std::int64_t k, std::int64_t q) {
  if (k < 1 || q < 2) {
    throw Error(ErrorCode::kInvalidArgument, "choose_p needs k >= 1, q >= 2");
  }
  return k * q / (k * k + 1);
}

KAndP max_k(std::int64_t q) {
  if (q < 4) throw Error(ErrorCode::kInvalidArgument, "max_k needs q >= 4");
  std::int64_t k = 0;
  while (k < 2 * q && obtuse_values(k + 1, q, choose_p(k + 1, q)).obtuse()) {
    ++k;
  }
  if (k == 0) {
    throw Error(ErrorCode::kNotObtuse,
                "no obtuse k exists for q=" + std::to_string(q));
  }
  return {k, choose_p(k, q)};
}

VfkLattice::VfkLattice(int n, std::int64_t q, std::int64_t k, std::int64_t P)
    : n_(n), q_(q), k_(k), P_(P) {
  const std::int64_t t = k * (P + 1) - q;
  const ObtuseValues ov = obtuse_values(k, q, P);
  selling_ = SellingData{
      n * ((1 + P) * (1 + P) + t * t),
      ov.first,
      ov.second,
      1 + k * k,
      ov.pair,
      P * P + (q - P * k) * (q - P * k),
  };
}

VfkLattice VfkLattice::build(int n, std::int64_t q, std::int64_t k,
                             std::int64_t P) {
  if (n < 1 || q < 2 || k < 1 || P < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "lattice needs N >= 1, q >= 2, k >= 1, P >= 0");
  }
  if (!obtuse_values(k, q, P).obtuse()) {
    throw Error(ErrorCode::kNotObtuse,
                "(q=" + std::to_string(q) + ", k=" + std::to_string(k) +
                    ", P=" + std::to_string(P) +
                    ") does not give an obtuse superbasis");
  }
  return VfkLattice(n, q, k, P);
}

std::int64_t VfkLattice::selling_entry(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto& s = selling_;
  if (i == 0) {
    if (j == 0) return s.q00;
    return j <= n_ ? s.r : s.s;
  }
  if (i == j) return i <= n_ ? s.diag_first : s.diag_second;
  return (i <= n_ && j == i + n_) ? s.pair : 0;
}

std::vector<std::int64_t> VfkLattice::superbasis_row(int i) const {
  std::vector<std::int64_t> v(2 * n_, 0);
  if (i == 0) {
    for (int c = 0; c < n_; ++c) {
      v[c] = -1 - P_;
      v[n_ + c] = k_ * P_ + k_ - q_;
    }
  } else if (i <= n_) {
    v[i - 1] = 1;
    v[n_ + i - 1] = -k_;
  } else {
    v[i - n_ - 1] = P_;
    v[i - 1] = q_ - P_ * k_;
  }
  return v;
}

IntMatrix VfkLattice::superbasis() const {
  IntMatrix m(2 * n_ + 1, 2 * n_);
  for (int i = 0; i <= 2 * n_; ++i) {
    const auto row = superbasis_row(i);
    for (int c = 0; c < 2 * n_; ++c) m.at(i, c) = row[c];
  }
  return m;
}

IntMatrix VfkLattice::basis() const {
  IntMatrix m(2 * n_, 2 * n_);
  for (int i = 1; i <= 2 * n_; ++i) {
    const auto row = superbasis_row(i);
    for (int c = 0; c < 2 * n_; ++c) m.at(i - 1, c) = row[c];
  }
  return m;
}

std::vector<std::int64_t> VfkLattice::combine(
    std::span<const std::int64_t> u) const {
  if (static_cast<int>(u.size()) != 2 * n_ + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "superbasis coefficients must have length 2N+1");
  }
  std::vector<std::int64_t> x(2 * n_);
  const std::int64_t v0_first = -1 - P_;
  const std::int64_t v0_second = k_ * P_ + k_ - q_;
  for (int c = 0; c < n_; ++c) {
    const std::int64_t a = u[1 + c], b = u[1 + n_ + c];
    x[c] = a + P_ * b + v0_first * u[0];
    x[n_ + c] = -k_ * a + (q_ - P_ * k_) * b + v0_second * u[0];
  }
  return x;
}

std::int64_t lambda1_squared(const VfkLattice& lat) {
  const int n = lat.n();
  const auto& s = lat.selling();
  MaxFlowGraph g(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    g.add_edge(0, i, -s.r);
    g.add_edge(0, n + i, -s.s);
    g.add_edge(i, n + i, -s.pair);
  }
  // Row sums of the Selling matrix vanish, so the quadratic form of a 0/1
  // vector equals the weight of the cut it defines.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int j = 1; j <= 2 * n; ++j) best = std::min(best, g.max_flow(0, j));
  return best;
}

double lambda1(const VfkLattice& lat) {
  return std::sqrt(static_cast<double>(lambda1_squared(lat)));
}

double lambda1_closed_form(const VfkLattice& lat) {
  return std::sqrt(static_cast<double>(1 + lat.k() * lat.k()));
}

}  // namespace ntruvfk
