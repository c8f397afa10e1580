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
#include <vector>

namespace ntruvfk {

// Maximum flow on an undirected capacitated graph. Each undirected edge is a
// pair of opposed arcs of equal capacity sharing one flow value, so pushing
// f along u->v frees f on v->u. Augmentation follows shortest residual paths
// (breadth-first levels, blocking flow per level).
class MaxFlowGraph {
 public:
  explicit MaxFlowGraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(head_.size()); }

  // Capacities must be non-negative.
  void add_edge(int u, int v, std::int64_t capacity);

  // Discards any flow from a previous run.
  std::int64_t max_flow(int source, int sink);

  // After max_flow: vertices reachable from the source in the residual
  // network. This is the source side of the minimal minimum cut.
  std::vector<bool> source_side(int source) const;

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t capacity;
    std::int64_t flow;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int v, int sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace ntruvfk
