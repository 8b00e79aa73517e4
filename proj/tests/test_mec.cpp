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

#include "buchi/mec.hpp"
#include "buchi/oracle.hpp"
#include "fixtures.hpp"

using namespace buchi;
using namespace buchi::testing;

namespace {

bool same_decomposition(const MecDecomposition& a, const MecDecomposition& b) {
  return a.mecs == b.mecs && a.non_mec == b.non_mec;
}

}  // namespace

TEST_CASE("sccs: fixtures") {
  {
    GameGraph g = f3();
    FullView view(g);
    auto sccs = strongly_connected_components(g, g.alive_vertices(), view);
    REQUIRE(sccs.size() == 1);
    CHECK(sccs[0] == std::vector<VertexId>{0, 1});
  }
  {
    GameGraph g = f2();
    FullView view(g);
    auto sccs = strongly_connected_components(g, g.alive_vertices(), view);
    CHECK(sccs.size() == 2);
  }
  {
    // a -> b -> c with a self-loop on c.
    GameGraph g = GameGraph::build({{P1, false}, {P1, false}, {P1, false}},
                                   {{0, 1}, {1, 2}, {2, 2}});
    FullView view(g);
    auto sccs = strongly_connected_components(g, g.alive_vertices(), view);
    CHECK(sccs.size() == 3);
  }
}

TEST_CASE("bottom_sccs: fixtures") {
  {
    GameGraph g = f2();
    FullView view(g);
    auto bottoms = bottom_sccs(g, g.alive_vertices(), view);
    REQUIRE(bottoms.size() == 1);
    CHECK(bottoms[0] == std::vector<VertexId>{2});
  }
  {
    GameGraph g = f3();
    FullView view(g);
    auto bottoms = bottom_sccs(g, g.alive_vertices(), view);
    REQUIRE(bottoms.size() == 1);
    CHECK(bottoms[0] == std::vector<VertexId>{0, 1});
  }
  {
    GameGraph g = GameGraph::build({{P1, false}, {P2, false}},
                                   {{0, 0}, {1, 1}});
    FullView view(g);
    auto bottoms = bottom_sccs(g, g.alive_vertices(), view);
    CHECK(bottoms.size() == 2);
  }
}

TEST_CASE("mec_level_view: no window rule, owner-blind blue") {
  GameGraph g = f2();
  LevelView lv = mec_level_view(g, 1);
  CHECK(lv.edge_count() == 4);
  for (VertexId v = 0; v < 3; ++v) CHECK(lv.color(v) == Color::White);

  std::vector<VertexSpec> specs(6, {P2, false});
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId t = 1; t <= 5; ++t) {
    edges.emplace_back(0, t);
    edges.emplace_back(t, t);
  }
  GameGraph hub = GameGraph::build(specs, edges);
  LevelView hv = mec_level_view(hub, 1);
  CHECK(hv.color(0) == Color::Blue);
  CHECK(hv.out_degree(0) == 0);  // no in-edge window in the MEC views
}

TEST_CASE("mec_decomposition: fixtures") {
  {
    auto d = mec_decomposition(f5());
    REQUIRE(d.mecs.size() == 1);
    CHECK(d.mecs[0] == std::vector<VertexId>{2});
    CHECK(d.non_mec == std::vector<VertexId>{0, 1});
  }
  {
    auto d = mec_decomposition(f3());
    REQUIRE(d.mecs.size() == 1);
    CHECK(d.mecs[0] == std::vector<VertexId>{0, 1});
    CHECK(d.non_mec.empty());
  }
  {
    auto d = mec_decomposition(f1());
    REQUIRE(d.mecs.size() == 1);
    CHECK(d.mecs[0] == std::vector<VertexId>{0});
  }
}

TEST_CASE("naive_mec: fixtures and the player-1 chain") {
  CHECK(same_decomposition(naive_mec(f5()), mec_decomposition(f5())));
  CHECK(naive_mec(f1()).mecs == std::vector<std::vector<VertexId>>{{0}});

  GameGraph chain = GameGraph::build({{P1, false}, {P1, false}, {P1, false}},
                                     {{0, 1}, {1, 2}, {2, 2}});
  auto d = naive_mec(chain);
  REQUIRE(d.mecs.size() == 1);
  CHECK(d.mecs[0] == std::vector<VertexId>{2});
  CHECK(d.non_mec == std::vector<VertexId>{0, 1});
}

TEST_CASE("naive_mec terminates when a stranded vertex survives") {
  // u <-> a is a player-2 cycle whose exit dooms it; w (player 1) points
  // only into that doomed pair and ends up with no out-edges after the
  // removal. x is a separate self-loop MEC reached by u.
  GameGraph g = GameGraph::build(
      {{P2, false}, {P2, false}, {P1, false}, {P1, false}},
      {{0, 1}, {1, 0}, {0, 3}, {2, 0}, {2, 1}, {3, 3}});
  auto d = naive_mec(g);
  REQUIRE(d.mecs.size() == 1);
  CHECK(d.mecs[0] == std::vector<VertexId>{3});
  CHECK(d.non_mec == std::vector<VertexId>{0, 1, 2});
  CHECK(same_decomposition(d, mec_decomposition(g)));
  CHECK(same_decomposition(d, oracle_mec(g)));
}

TEST_CASE("mec_decomposition == naive_mec == oracle on random graphs") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 300; ++round) {
    GameGraph g = random_game(rng, 9, 3);
    auto fast = mec_decomposition(g);
    auto slow = naive_mec(g);
    auto truth = oracle_mec(g);
    CHECK(same_decomposition(fast, slow));
    CHECK(same_decomposition(fast, truth));
  }
}

TEST_CASE("mec agreement at medium scale") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 40; ++round) {
    GameGraph g = random_game(rng, 60, 6, 0.5, 0.0);
    auto fast = mec_decomposition(g);
    auto slow = naive_mec(g);
    CHECK(same_decomposition(fast, slow));
  }
}

TEST_CASE("emitted bottom SCCs at stop level i >= 2 meet the previous blues") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 60; ++round) {
    GameGraph g = random_game(rng, 50, 10, 0.5, 0.0);
    MecStats stats;
    mec_decomposition(g, &stats);
    for (const auto& it : stats.iterations) {
      if (it.stop_level < 2) continue;
      for (const auto& scc : it.sccs) {
        CHECK(scc.meets_prev_blue);
        CHECK(scc.size >= (1 << (it.stop_level - 1)));
      }
    }
  }
}

TEST_CASE("decomposition partitions the vertex set") {
  std::mt19937_64 rng(54);
  for (int round = 0; round < 100; ++round) {
    GameGraph g = random_game(rng, 20, 4);
    auto d = mec_decomposition(g);
    std::vector<std::uint8_t> seen(g.vertex_count(), 0);
    for (const auto& mec : d.mecs) {
      for (VertexId v : mec) {
        CHECK(!seen[v]);
        seen[v] = 1;
      }
    }
    for (VertexId v : d.non_mec) {
      CHECK(!seen[v]);
      seen[v] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(seen[v]);
  }
}
