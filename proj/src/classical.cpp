// Copyright 2026 The buchi-games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "buchi/classical.hpp"

#include <algorithm>

#include "buchi/attractor.hpp"
#include "buchi/solver_internal.hpp"

namespace buchi {

WinningPartition solve_classical(const GameGraph& g, ClassicalStats* stats) {
  GameGraph scratch = g;
  FullView view(scratch);
  std::uint64_t work = 0;
  int iterations = 0;

  AttractorResult reach;
  while (true) {
    ++iterations;
    std::vector<VertexId> targets = scratch.buchi_vertices();
    reach = attractor(scratch, Owner::Player1, targets, view, &work);

    std::vector<VertexId> trapped;
    for (VertexId v : scratch.alive_vertices()) {
      if (!reach.contains(v)) trapped.push_back(v);
    }
    if (trapped.empty()) break;

    AttractorResult losing =
        attractor(scratch, Owner::Player2, trapped, view, &work);
    scratch.remove_vertices(losing.order);
  }

  if (stats) {
    stats->work = work;
    stats->iterations = iterations;
  }
  return internal::partition_from_survivors(g, scratch, reach);
}

namespace internal {

WinningPartition partition_from_survivors(const GameGraph& original,
                                          const GameGraph& final_graph,
                                          const AttractorResult& final_reach) {
  int n = original.vertex_count();
  WinningPartition part;
  part.in_w1.assign(n, 0);
  part.strategy1.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (!original.alive(v)) continue;
    if (final_graph.alive(v)) {
      part.in_w1[v] = 1;
      part.w1.push_back(v);
    } else {
      part.w2.push_back(v);
    }
  }
  // Witness choices: the attractor step for ranked vertices, any
  // surviving successor for Buchi vertices (the survivor set is player-2
  // closed, so one exists and stays inside w1).
  for (VertexId v : part.w1) {
    if (original.owner(v) != Owner::Player1) continue;
    if (final_reach.rank[v] > 0) {
      part.strategy1[v] = final_reach.strategy[v];
    } else {
      for (auto nb : final_graph.out(v)) {
        part.strategy1[v] = nb.v;
        break;
      }
    }
  }
  return part;
}

}  // namespace internal

}  // namespace buchi
