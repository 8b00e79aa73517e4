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

#ifndef BUCHI_TESTS_FIXTURES_HPP_
#define BUCHI_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <random>
#include <vector>

#include "buchi/game_graph.hpp"

namespace buchi::testing {

constexpr Owner P1 = Owner::Player1;
constexpr Owner P2 = Owner::Player2;

// Single player-1 Buchi vertex on a self-loop.
inline GameGraph f1() { return GameGraph::build({{P1, true}}, {{0, 0}}); }

// 0: player-1 Buchi -> 1; 1: player-2 -> {0, 2}; 2: player-2 self-loop.
// Player 2 wins everywhere by steering 1 into the trap at 2.
inline GameGraph f2() {
  return GameGraph::build({{P1, true}, {P2, false}, {P2, false}},
                          {{0, 1}, {1, 0}, {1, 2}, {2, 2}});
}

// Forced two-cycle through a Buchi vertex; player 1 wins everywhere.
inline GameGraph f3() {
  return GameGraph::build({{P2, true}, {P1, false}}, {{0, 1}, {1, 0}});
}

// Player-1 chain into a Buchi self-loop: measures 0, 1, 2, 3.
inline GameGraph f4() {
  return GameGraph::build(
      {{P1, true}, {P1, false}, {P1, false}, {P1, false}},
      {{0, 0}, {1, 0}, {2, 1}, {3, 2}});
}

// Two player-2 vertices cycling with an exit into a player-1 self-loop;
// only the self-loop is a MEC.
inline GameGraph f5() {
  return GameGraph::build({{P2, false}, {P2, false}, {P1, false}},
                          {{0, 1}, {1, 0}, {0, 2}, {2, 2}});
}

/// Random graph with bounded out-degree, for oracle-scale testing.
/// Every vertex gets between 1 and max_outdeg distinct successors.
inline GameGraph random_game(std::mt19937_64& rng, int max_n, int max_outdeg,
                             double p2 = 0.5, double buchi = 0.4) {
  std::uniform_int_distribution<int> nd(1, max_n);
  int n = nd(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<VertexSpec> specs(n);
  for (auto& s : specs) {
    s.owner = coin(rng) < p2 ? P2 : P1;
    s.buchi = coin(rng) < buchi;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::uniform_int_distribution<int> dd(1, std::min(max_outdeg, n));
  for (VertexId v = 0; v < n; ++v) {
    int d = dd(rng);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int k = 0; k < d; ++k) edges.emplace_back(v, pool[k]);
  }
  return GameGraph::build(specs, edges);
}

inline std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace buchi::testing

#endif  // BUCHI_TESTS_FIXTURES_HPP_
