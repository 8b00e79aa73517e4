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

#ifndef BUCHI_CLASSICAL_HPP_
#define BUCHI_CLASSICAL_HPP_

#include <cstdint>
#include <vector>

#include "buchi/game_graph.hpp"

namespace buchi {

/// Winning sets of a Buchi game, with a memoryless witness for player 1.
/// `strategy1[v]` is the chosen successor for v in w1 owned by player 1,
/// -1 elsewhere. w1 and w2 partition the alive vertices.
struct WinningPartition {
  std::vector<std::uint8_t> in_w1;
  std::vector<VertexId> w1;  // sorted
  std::vector<VertexId> w2;  // sorted
  std::vector<VertexId> strategy1;

  bool player1_wins(VertexId v) const { return in_w1[v] != 0; }
};

struct ClassicalStats {
  std::uint64_t work = 0;  // attractor edge touches
  int iterations = 0;      // avoid-set rounds, including the empty last one
};

/// The iterative O(n * m) solver: repeatedly removes the player-2
/// attractor of the vertices that cannot alternating-reach the surviving
/// Buchi set, until nothing is removed. The input graph is not mutated.
WinningPartition solve_classical(const GameGraph& g,
                                 ClassicalStats* stats = nullptr);

}  // namespace buchi

#endif  // BUCHI_CLASSICAL_HPP_
