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

#include <doctest.h>

#include <random>

#include "buchi/attractor.hpp"
#include "buchi/classical.hpp"
#include "buchi/oracle.hpp"
#include "fixtures.hpp"

using namespace buchi;
using namespace buchi::testing;

TEST_CASE("classical: fixtures") {
  CHECK(solve_classical(f1()).w1 == std::vector<VertexId>{0});
  CHECK(solve_classical(f3()).w1 == std::vector<VertexId>{0, 1});
  auto p = solve_classical(f2());
  CHECK(p.w1.empty());
  CHECK(p.w2 == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("classical: empty Buchi set loses everywhere") {
  GameGraph g = GameGraph::build({{P1, false}, {P2, false}},
                                 {{0, 1}, {1, 0}});
  auto p = solve_classical(g);
  CHECK(p.w1.empty());
  CHECK(p.w2 == std::vector<VertexId>{0, 1});
}

TEST_CASE("classical: input graph is not mutated") {
  GameGraph g = f2();
  auto before = g.edge_list();
  solve_classical(g);
  CHECK(g.alive_count() == 3);
  CHECK(g.edge_list() == before);
}

TEST_CASE("classical matches the strategy-enumeration oracle") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    GameGraph g = random_game(rng, 7, 3);
    auto truth = oracle_buchi(g);
    auto p = solve_classical(g);
    CHECK(p.w1 == truth.w1);
    CHECK(p.w2 == truth.w2);
  }
}

TEST_CASE("classical strategies verify; partition holds; at most n rounds") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 150; ++round) {
    GameGraph g = random_game(rng, 18, 4);
    ClassicalStats stats;
    auto p = solve_classical(g, &stats);
    CHECK(static_cast<int>(p.w1.size() + p.w2.size()) == g.alive_count());
    CHECK(verify_buchi_strategy(g, p.w1, p.strategy1));
    CHECK(stats.iterations <= g.vertex_count() + 1);
  }
}
