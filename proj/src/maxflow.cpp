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

#include "ntruvfk/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ntruvfk/error.hpp"

namespace ntruvfk {

MaxFlowGraph::MaxFlowGraph(int vertex_count)
    : head_(vertex_count, -1), level_(vertex_count), cursor_(vertex_count) {}

void MaxFlowGraph::add_edge(int u, int v, std::int64_t capacity) {
  if (capacity < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative edge capacity");
  }
  if (u == v) return;
  arcs_.push_back({v, head_[u], capacity, 0});
  head_[u] = static_cast<int>(arcs_.size()) - 1;
  arcs_.push_back({u, head_[v], capacity, 0});
  head_[v] = static_cast<int>(arcs_.size()) - 1;
}

bool MaxFlowGraph::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      const Arc& arc = arcs_[a];
      if (level_[arc.to] < 0 && arc.capacity - arc.flow > 0) {
        level_[arc.to] = level_[v] + 1;
        frontier.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlowGraph::push(int v, int sink, std::int64_t limit) {
  if (v == sink) return limit;
  for (int& a = cursor_[v]; a != -1; a = arcs_[a].next) {
    Arc& arc = arcs_[a];
    const std::int64_t residual = arc.capacity - arc.flow;
    if (residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
    const std::int64_t pushed = push(arc.to, sink, std::min(limit, residual));
    if (pushed > 0) {
      arc.flow += pushed;
      arcs_[a ^ 1].flow -= pushed;  // f(v,u) = -f(u,v)
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlowGraph::max_flow(int source, int sink) {
  for (auto& arc : arcs_) arc.flow = 0;
  if (source == sink) return 0;
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::copy(head_.begin(), head_.end(), cursor_.begin());
    while (const std::int64_t f =
               push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += f;
    }
  }
  return total;
}

std::vector<bool> MaxFlowGraph::source_side(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int a = head_[v]; a != -1; a = arcs_[a].next) {
      const Arc& arc = arcs_[a];
      if (!seen[arc.to] && arc.capacity - arc.flow > 0) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace ntruvfk
