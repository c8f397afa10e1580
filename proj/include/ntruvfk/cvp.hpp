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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ntruvfk/vfk.hpp"

namespace ntruvfk {

// Vector of rationals numer[i] / denom.
struct ScaledVector {
  std::vector<std::int64_t> numer;
  std::int64_t denom = 1;
};

// z with y = z B over the superbasis rows, fixing z_0 = 0:
//   z_{N+i} = (k y_i + y_{N+i}) / q,   z_i = y_i - P z_{N+i}.
// Returned with denominator q.
ScaledVector solve_coordinates(const VfkLattice& lat,
                               std::span<const std::int64_t> y);

struct FlowEdge {
  int u;
  int v;
  std::int64_t capacity;
};

// Vertex 0 is the source, vertex 2N+2 the sink, and vertex i+1 stands for
// superbasis index i. All capacities are multiplied by `scale`.
struct FlowNetwork {
  int vertex_count = 0;
  std::vector<FlowEdge> edges;
  std::int64_t scale = 1;
  // s_i * scale, kept for inspection and tests.
  std::vector<std::int64_t> linear_terms;

  int source() const { return 0; }
  int sink() const { return vertex_count - 1; }
  int internal_count() const { return vertex_count - 2; }
};

// Network whose minimum cut minimizes
//   Q(t) = sum_i s_i t_i + sum_ij q_ij t_i t_j,  s_i = -2 sum_j q_ij p_j,
// over t in {0,1}^{2N+1}, where p = z - u. Scaled by z.denom so that every
// capacity is an exact integer.
FlowNetwork build_flow_network(const VfkLattice& lat, const ScaledVector& z,
                               std::span<const std::int64_t> u);

// t_i = 1 iff superbasis vertex i lies on the source side of the minimal
// minimum cut.
std::vector<std::uint8_t> mincut(const FlowNetwork& net);

struct CvpStep {
  int iteration = 0;
  const FlowNetwork* network = nullptr;
  std::span<const std::uint8_t> t;
  std::int64_t distance_sq_before = 0;
  std::int64_t distance_sq_after = 0;
};

using CvpObserver = std::function<void(const CvpStep&)>;

struct CvpResult {
  std::vector<std::int64_t> point;  // u B
  std::vector<std::int64_t> u;      // coefficients over v_0..v_2N
  std::int64_t distance_sq = 0;
  double distance = 0.0;
  int iterations = 0;  // min-cut rounds executed
};

// Exact closest vector of L_k to an integer target y (length 2N): start from
// u = floor(z) and add the minimizing relevant vector until the minimizer is
// the zero vector.
CvpResult cvp_vfk(const VfkLattice& lat, std::span<const std::int64_t> y,
                  const CvpObserver& observer = {});

// Nearest-plane rounding against a fixed basis. The Gram-Schmidt data is
// computed once in floating point; the returned point is accumulated in
// integers, so it is always an exact lattice vector.
class BabaiSolver {
 public:
  explicit BabaiSolver(IntMatrix basis);

  std::vector<std::int64_t> solve(std::span<const std::int64_t> y) const;
  const IntMatrix& basis() const { return basis_; }

 private:
  IntMatrix basis_;
  std::vector<double> gso_;   // rows b*_j
  std::vector<double> norm_;  // ||b*_j||^2
};

std::vector<std::int64_t> babai(const IntMatrix& basis,
                                std::span<const std::int64_t> y);

// Exhaustive search for small lattices (at most 12 basis rows): enumerates
// every coefficient vector whose lattice point can lie within `radius` of y.
// Without a radius the distance to the rounded-coordinate point is used.
std::vector<std::int64_t> cvp_bruteforce(const IntMatrix& basis,
                                         std::span<const std::int64_t> y,
                                         std::optional<double> radius = {});

std::int64_t squared_distance(std::span<const std::int64_t> a,
                              std::span<const std::int64_t> b);

}  // namespace ntruvfk
