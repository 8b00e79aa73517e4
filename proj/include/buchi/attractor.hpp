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

#ifndef BUCHI_ATTRACTOR_HPP_
#define BUCHI_ATTRACTOR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "buchi/game_graph.hpp"
#include "buchi/views.hpp"

namespace buchi {

/// Result of a backward attractor computation. `rank[v]` is the stage of
/// the inductive construction at which v joined (-1 for non-members;
/// targets have rank 0). For members owned by the attracting player with
/// rank > 0, `strategy[v]` is a view-successor of strictly smaller rank.
struct AttractorResult {
  std::vector<std::uint8_t> member;
  std::vector<int> rank;
  std::vector<VertexId> strategy;
  std::vector<VertexId> order;  // members in non-decreasing rank order

  bool contains(VertexId v) const { return member[v] != 0; }
  std::vector<VertexId> member_list() const { return order; }
};

/// Attractor of `player` towards `targets` in the given edge view, by the
/// counter-based backward algorithm. An opposing vertex joins only once
/// all of its view-successors have joined; a vertex with view-outdegree 0
/// therefore never joins (vacuous truth is deliberately not applied; the
/// level solvers route those through their Z set). Duplicate targets and
/// dead entries in `targets` are ignored.
template <GraphView V>
AttractorResult attractor(const GameGraph& g, Owner player,
                          std::span<const VertexId> targets, const V& view,
                          std::uint64_t* work = nullptr) {
  int n = g.vertex_count();
  AttractorResult res;
  res.member.assign(n, 0);
  res.rank.assign(n, -1);
  res.strategy.assign(n, -1);

  std::vector<int> pending(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.alive(v) && g.owner(v) != player) pending[v] = view.out_degree(v);
  }

  res.order.reserve(targets.size());
  for (VertexId t : targets) {
    if (!g.alive(t) || res.member[t]) continue;
    res.member[t] = 1;
    res.rank[t] = 0;
    res.order.push_back(t);
  }

  std::uint64_t touched = res.order.size();
  for (std::size_t head = 0; head < res.order.size(); ++head) {
    VertexId u = res.order[head];
    ++touched;
    view.for_each_in(u, [&](VertexId w) {
      ++touched;
      if (!g.alive(w) || res.member[w]) return;
      if (g.owner(w) == player) {
        res.member[w] = 1;
        res.rank[w] = res.rank[u] + 1;
        res.strategy[w] = u;
        res.order.push_back(w);
      } else if (--pending[w] == 0) {
        res.member[w] = 1;
        res.rank[w] = res.rank[u] + 1;
        res.order.push_back(w);
      }
    });
  }
  if (work) *work += touched;
  return res;
}

/// Whether `s` is a closed set for `player`: player-owned vertices keep
/// all surviving successors inside s, opposing vertices keep at least one.
bool is_closed(const GameGraph& g, Owner player, std::span<const VertexId> s);

/// Alternating distance to `targets` inside the subgraph induced by the
/// vertices with inside[v] != 0, as attractor ranks for Player1 (-1 where
/// unreachable). Used for strategy certificates and measure seeding.
std::vector<int> alternating_ranks_within(const GameGraph& g,
                                          std::span<const std::uint8_t> inside,
                                          std::span<const VertexId> targets);

/// Checks a memoryless witness strategy for player 1 on `w1`: w1 must be
/// player-2 closed, every w1 vertex must have a finite alternating
/// distance to the Buchi vertices of w1, non-Buchi player-1 vertices must
/// step to a strictly smaller rank via `strategy`, non-Buchi player-2
/// vertices must have all successors at strictly smaller rank, and
/// Buchi/player-1 choices must stay inside w1. Throws StrategyUndefined
/// if strategy[v] < 0 for some v in w1 owned by player 1.
bool verify_buchi_strategy(const GameGraph& g, std::span<const VertexId> w1,
                           std::span<const VertexId> strategy);

}  // namespace buchi

#endif  // BUCHI_ATTRACTOR_HPP_
