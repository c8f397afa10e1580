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

#include "ntruvfk/cvp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ntruvfk/maxflow.hpp"

namespace ntruvfk {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

void require_length(std::span<const std::int64_t> v, std::size_t n,
                    const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " has length " + std::to_string(v.size()) +
                    ", expected " + std::to_string(n));
  }
}

}  // namespace

std::int64_t squared_distance(std::span<const std::int64_t> a,
                              std::span<const std::int64_t> b) {
  require_length(b, a.size(), "vector");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

ScaledVector solve_coordinates(const VfkLattice& lat,
                               std::span<const std::int64_t> y) {
  const int n = lat.n();
  require_length(y, 2 * n, "target");
  ScaledVector z{std::vector<std::int64_t>(2 * n + 1, 0), lat.q()};
  for (int i = 0; i < n; ++i) {
    const std::int64_t second = lat.k() * y[i] + y[n + i];
    z.numer[1 + n + i] = second;
    z.numer[1 + i] = lat.q() * y[i] - lat.P() * second;
  }
  return z;
}

FlowNetwork build_flow_network(const VfkLattice& lat, const ScaledVector& z,
                               std::span<const std::int64_t> u) {
  const int n = lat.n();
  const int count = 2 * n + 1;
  require_length(z.numer, count, "z");
  require_length(u, count, "u");
  const auto& sd = lat.selling();
  const std::int64_t scale = z.denom;

  // p_j * scale
  std::vector<std::int64_t> p(count);
  for (int j = 0; j < count; ++j) p[j] = z.numer[j] - scale * u[j];

  std::int64_t sum_first = 0, sum_second = 0;
  for (int i = 1; i <= n; ++i) {
    sum_first += p[i];
    sum_second += p[n + i];
  }

  FlowNetwork net;
  net.vertex_count = count + 2;
  net.scale = scale;
  net.linear_terms.resize(count);
  net.linear_terms[0] =
      -2 * (sd.q00 * p[0] + sd.r * sum_first + sd.s * sum_second);
  for (int i = 1; i <= n; ++i) {
    net.linear_terms[i] =
        -2 * (sd.r * p[0] + sd.diag_first * p[i] + sd.pair * p[n + i]);
    net.linear_terms[n + i] =
        -2 * (sd.s * p[0] + sd.pair * p[i] + sd.diag_second * p[n + i]);
  }

  net.edges.reserve(3 * n + count);
  for (int i = 1; i <= n; ++i) {
    net.edges.push_back({1, 1 + i, -sd.r * scale});
    net.edges.push_back({1, 1 + n + i, -sd.s * scale});
    net.edges.push_back({1 + i, 1 + n + i, -sd.pair * scale});
  }
  for (int i = 0; i < count; ++i) {
    const std::int64_t s = net.linear_terms[i];
    if (s > 0) {
      net.edges.push_back({1 + i, net.sink(), s});
    } else if (s < 0) {
      net.edges.push_back({net.source(), 1 + i, -s});
    }
  }
  return net;
}

std::vector<std::uint8_t> mincut(const FlowNetwork& net) {
  MaxFlowGraph g(net.vertex_count);
  for (const auto& e : net.edges) g.add_edge(e.u, e.v, e.capacity);
  g.max_flow(net.source(), net.sink());
  const std::vector<bool> side = g.source_side(net.source());
  std::vector<std::uint8_t> t(net.internal_count());
  for (int i = 0; i < net.internal_count(); ++i) t[i] = side[1 + i] ? 1 : 0;
  return t;
}

CvpResult cvp_vfk(const VfkLattice& lat, std::span<const std::int64_t> y,
                  const CvpObserver& observer) {
  const ScaledVector z = solve_coordinates(lat, y);
  const int count = lat.superbasis_size();

  CvpResult res;
  res.u.resize(count);
  for (int i = 0; i < count; ++i) res.u[i] = floor_div(z.numer[i], z.denom);
  res.point = lat.combine(res.u);
  res.distance_sq = squared_distance(y, res.point);

  for (int iter = 1; iter <= count; ++iter) {
    const FlowNetwork net = build_flow_network(lat, z, res.u);
    const std::vector<std::uint8_t> t = mincut(net);
    res.iterations = iter;
    const auto ones = std::count(t.begin(), t.end(), 1);
    // Both the empty set and the full set sum to the zero vector.
    const bool trivial = ones == 0 || ones == count;

    CvpStep step{iter, &net, t, res.distance_sq, res.distance_sq};
    if (!trivial) {
      for (int i = 0; i < count; ++i) res.u[i] += t[i];
      res.point = lat.combine(res.u);
      res.distance_sq = squared_distance(y, res.point);
      step.distance_sq_after = res.distance_sq;
    }
    if (observer) observer(step);
    if (trivial) break;
  }
  res.distance = std::sqrt(static_cast<double>(res.distance_sq));
  return res;
}

BabaiSolver::BabaiSolver(IntMatrix basis) : basis_(std::move(basis)) {
  const int n = basis_.rows, m = basis_.cols;
  gso_.assign(std::size_t(n) * m, 0.0);
  norm_.assign(n, 0.0);
  double max_norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double* bi = &gso_[std::size_t(i) * m];
    for (int c = 0; c < m; ++c) bi[c] = static_cast<double>(basis_.at(i, c));
    for (int j = 0; j < i; ++j) {
      const double* bj = &gso_[std::size_t(j) * m];
      double dot = 0.0;
      for (int c = 0; c < m; ++c) dot += bi[c] * bj[c];
      if (dot == 0.0) continue;
      const double mu = dot / norm_[j];
      for (int c = 0; c < m; ++c) bi[c] -= mu * bj[c];
    }
    double nn = 0.0;
    for (int c = 0; c < m; ++c) nn += bi[c] * bi[c];
    norm_[i] = nn;
    max_norm = std::max(max_norm, nn);
    if (nn <= 1e-9 * std::max(1.0, max_norm)) {
      throw Error(ErrorCode::kNumerical,
                  "degenerate Gram-Schmidt vector at row " + std::to_string(i));
    }
  }
}

std::vector<std::int64_t> BabaiSolver::solve(
    std::span<const std::int64_t> y) const {
  const int n = basis_.rows, m = basis_.cols;
  require_length(y, m, "target");
  std::vector<std::int64_t> b(y.begin(), y.end());
  for (int j = n - 1; j >= 0; --j) {
    const double* bj = &gso_[std::size_t(j) * m];
    double dot = 0.0;
    for (int c = 0; c < m; ++c) dot += static_cast<double>(b[c]) * bj[c];
    const auto c_j = static_cast<std::int64_t>(std::floor(dot / norm_[j] + 0.5));
    if (c_j == 0) continue;
    for (int c = 0; c < m; ++c) b[c] -= c_j * basis_.at(j, c);
  }
  std::vector<std::int64_t> x(m);
  for (int c = 0; c < m; ++c) x[c] = y[c] - b[c];
  return x;
}

std::vector<std::int64_t> babai(const IntMatrix& basis,
                                std::span<const std::int64_t> y) {
  return BabaiSolver(basis).solve(y);
}

std::vector<std::int64_t> cvp_bruteforce(const IntMatrix& basis,
                                         std::span<const std::int64_t> y,
                                         std::optional<double> radius) {
  const int n = basis.rows, m = basis.cols;
  if (n > 12) {
    throw Error(ErrorCode::kInvalidArgument,
                "brute-force CVP is limited to 12 basis vectors");
  }
  require_length(y, m, "target");

  // Gram matrix and its inverse (Gauss-Jordan with partial pivoting).
  std::vector<double> g(std::size_t(n) * n), inv(std::size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    inv[i * n + i] = 1.0;
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int c = 0; c < m; ++c) {
        acc += double(basis.at(i, c)) * double(basis.at(j, c));
      }
      g[i * n + j] = acc;
    }
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(g[r * n + col]) > std::abs(g[piv * n + col])) piv = r;
    }
    if (std::abs(g[piv * n + col]) < 1e-12) {
      throw Error(ErrorCode::kNumerical, "basis rows are linearly dependent");
    }
    for (int c = 0; c < n; ++c) {
      std::swap(g[col * n + c], g[piv * n + c]);
      std::swap(inv[col * n + c], inv[piv * n + c]);
    }
    const double d = g[col * n + col];
    for (int c = 0; c < n; ++c) {
      g[col * n + c] /= d;
      inv[col * n + c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = g[r * n + col];
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        g[r * n + c] -= f * g[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }

  // Real coordinates of the projection of y.
  std::vector<double> yb(n, 0.0), center(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < m; ++c) yb[i] += double(y[c]) * double(basis.at(i, c));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) center[i] += yb[j] * inv[j * n + i];
  }

  auto point_of = [&](std::span<const std::int64_t> coef) {
    std::vector<std::int64_t> x(m, 0);
    for (int i = 0; i < n; ++i) {
      if (coef[i] == 0) continue;
      for (int c = 0; c < m; ++c) x[c] += coef[i] * basis.at(i, c);
    }
    return x;
  };

  double r = 0.0;
  if (radius) {
    r = *radius;
  } else {
    std::vector<std::int64_t> rounded(n);
    for (int i = 0; i < n; ++i) {
      rounded[i] = static_cast<std::int64_t>(std::llround(center[i]));
    }
    r = std::sqrt(double(squared_distance(y, point_of(rounded))));
  }

  std::vector<std::int64_t> lo(n), hi(n);
  double boxes = 1.0;
  for (int i = 0; i < n; ++i) {
    const double half = r * std::sqrt(std::max(0.0, inv[i * n + i]));
    lo[i] = static_cast<std::int64_t>(std::floor(center[i] - half)) - 1;
    hi[i] = static_cast<std::int64_t>(std::ceil(center[i] + half)) + 1;
    boxes *= double(hi[i] - lo[i] + 1);
  }
  if (boxes > 2e9) {
    throw Error(ErrorCode::kInvalidArgument, "brute-force box too large");
  }

  std::vector<std::int64_t> coef = lo;
  std::vector<std::int64_t> best;
  std::int64_t best_d = std::numeric_limits<std::int64_t>::max();
  for (;;) {
    auto x = point_of(coef);
    const std::int64_t d = squared_distance(y, x);
    if (d < best_d) {
      best_d = d;
      best = std::move(x);
    }
    int i = 0;
    while (i < n && coef[i] == hi[i]) {
      coef[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++coef[i];
  }
  return best;
}

}  // namespace ntruvfk
