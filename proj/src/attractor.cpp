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

#include "buchi/attractor.hpp"

#include <string>

namespace buchi {

bool is_closed(const GameGraph& g, Owner player, std::span<const VertexId> s) {
  std::vector<std::uint8_t> in_s(g.vertex_count(), 0);
  for (VertexId v : s) in_s[v] = 1;
  for (VertexId v : s) {
    bool any_inside = false;
    bool all_inside = true;
    for (auto nb : g.out(v)) {
      if (in_s[nb.v]) {
        any_inside = true;
      } else {
        all_inside = false;
      }
    }
    if (g.owner(v) == player ? !all_inside : !any_inside) return false;
  }
  return true;
}

std::vector<int> alternating_ranks_within(const GameGraph& g,
                                          std::span<const std::uint8_t> inside,
                                          std::span<const VertexId> targets) {
  int n = g.vertex_count();
  std::vector<int> rank(n, -1);
  std::vector<int> pending(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!inside[v] || g.owner(v) != Owner::Player2) continue;
    for (auto nb : g.out(v)) {
      if (inside[nb.v]) ++pending[v];
    }
  }
  std::vector<VertexId> queue;
  for (VertexId t : targets) {
    if (inside[t] && rank[t] < 0) {
      rank[t] = 0;
      queue.push_back(t);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (auto nb : g.in(u)) {
      VertexId w = nb.v;
      if (!inside[w] || rank[w] >= 0) continue;
      if (g.owner(w) == Owner::Player1) {
        rank[w] = rank[u] + 1;
        queue.push_back(w);
      } else if (--pending[w] == 0) {
        rank[w] = rank[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return rank;
}

bool verify_buchi_strategy(const GameGraph& g, std::span<const VertexId> w1,
                           std::span<const VertexId> strategy) {
  int n = g.vertex_count();
  std::vector<std::uint8_t> in_w1(n, 0);
  for (VertexId v : w1) in_w1[v] = 1;

  for (VertexId v : w1) {
    if (g.owner(v) == Owner::Player1 && strategy[v] < 0) {
      throw GameError(ErrorKind::StrategyUndefined,
                      "no strategy choice at vertex " + std::to_string(v));
    }
  }
  // (i) w1 is player-2 closed.
  if (!is_closed(g, Owner::Player2, w1)) return false;

  std::vector<VertexId> targets;
  for (VertexId v : w1) {
    if (g.is_buchi(v)) targets.push_back(v);
  }
  std::vector<int> rank = alternating_ranks_within(g, in_w1, targets);

  for (VertexId v : w1) {
    if (rank[v] < 0) return false;
    if (g.owner(v) == Owner::Player1) {
      VertexId t = strategy[v];
      if (g.find_edge(v, t) < 0 || !in_w1[t]) return false;
      if (!g.is_buchi(v) && rank[t] >= rank[v]) return false;
    } else if (!g.is_buchi(v)) {
      bool ok = true;
      for (auto nb : g.out(v)) {
        if (rank[nb.v] < 0 || rank[nb.v] >= rank[v]) ok = false;
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace buchi
