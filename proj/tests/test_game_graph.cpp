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

#include <algorithm>
#include <functional>
#include <random>

#include "buchi/attractor.hpp"
#include "buchi/game_graph.hpp"
#include "fixtures.hpp"

using namespace buchi;
using namespace buchi::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GameError& e) {
    return e.kind();
  }
  FAIL("expected a GameError");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("build: single self-loop") {
  GameGraph g = f1();
  CHECK(g.out_degree(0) == 1);
  CHECK(g.in_list(0) == std::vector<VertexId>{0});
  CHECK(g.owner(0) == P1);
  CHECK(g.is_buchi(0));
}

TEST_CASE("build: two-cycle in-lists") {
  GameGraph g = f3();
  CHECK(g.in_list(0) == std::vector<VertexId>{1});
  CHECK(g.in_list(1) == std::vector<VertexId>{0});
}

TEST_CASE("build: priority-1 player-2 in-edges come first") {
  GameGraph g = f2();
  CHECK(g.in_list(0) == std::vector<VertexId>{1});
  CHECK(g.in_list(2) == std::vector<VertexId>{1, 2});
  // A player-1 source sorts after player-2 non-Buchi sources regardless
  // of input order.
  GameGraph h = GameGraph::build(
      {{P1, false}, {P2, false}, {P1, true}},
      {{0, 2}, {1, 2}, {2, 0}, {2, 2}});
  CHECK(h.in_list(2) == std::vector<VertexId>{1, 0, 2});
}

TEST_CASE("build errors") {
  CHECK(kind_of([] {
          GameGraph::build({{P1, false}, {P1, false}}, {{0, 1}, {1, 0}, {1, 1}});
        }) == ErrorKind::ZeroOutdegree);
  CHECK(kind_of([] {
          GameGraph::build({{P1, true}}, {{0, 0}, {0, 0}});
        }) == ErrorKind::DuplicateEdge);
}

TEST_CASE("build reproduces the input edge list") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    GameGraph g = random_game(rng, 12, 4);
    std::vector<std::pair<VertexId, VertexId>> flat;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (VertexId t : g.out_list(v)) flat.emplace_back(v, t);
    }
    auto relisted = g.edge_list();
    CHECK(flat == relisted);
    auto a = flat;
    std::sort(a.begin(), a.end());
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  }
}

TEST_CASE("remove_vertices splices both directions") {
  GameGraph g = f2();
  std::vector<VertexId> dead{2};
  g.remove_vertices(dead);
  CHECK(g.in_list(0) == std::vector<VertexId>{1});
  CHECK(g.out_list(1) == std::vector<VertexId>{0});
  CHECK(g.out_degree(1) == 1);
  CHECK_FALSE(g.alive(2));
  CHECK(g.alive_count() == 2);

  CHECK(kind_of([&] { g.remove_vertices(dead); }) == ErrorKind::AlreadyDead);
}

TEST_CASE("remove_vertices can strand a vertex at out-degree 0") {
  GameGraph g = f2();
  std::vector<VertexId> dead{1};
  g.remove_vertices(dead);
  CHECK(g.out_degree(0) == 0);
  CHECK(g.alive(0));
}

TEST_CASE("remove everything") {
  GameGraph g = f3();
  std::vector<VertexId> all{0, 1};
  g.remove_vertices(all);
  CHECK(g.alive_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("delete_edge checks") {
  GameGraph g1 = f1();
  CHECK(kind_of([&] { g1.delete_edge(0, 0); }) == ErrorKind::LastOutedge);

  GameGraph g2 = f2();
  CHECK(kind_of([&] { g2.delete_edge(1, 2); }) == ErrorKind::NotPlayer1Edge);

  GameGraph g = GameGraph::build({{P1, true}, {P1, false}, {P1, false}},
                                 {{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  CHECK(kind_of([&] { g.delete_edge(0, 0); }) == ErrorKind::NoSuchEdge);
  g.delete_edge(0, 1);
  CHECK(g.out_list(0) == std::vector<VertexId>{2});
  CHECK(g.in_list(1).empty());
}

TEST_CASE("insert_edge appends in both directions") {
  GameGraph g = f2();
  g.insert_edge(0, 2);
  CHECK(g.out_list(0) == std::vector<VertexId>{1, 2});
  CHECK(g.in_list(2) == std::vector<VertexId>{1, 2, 0});

  CHECK(kind_of([&] { g.insert_edge(1, 0); }) == ErrorKind::NotPlayer1Edge);
  CHECK(kind_of([&] { g.insert_edge(0, 1); }) == ErrorKind::EdgeExists);

  GameGraph h = f3();
  h.insert_edge(1, 1);
  CHECK(h.out_list(1) == std::vector<VertexId>{0, 1});
  CHECK(h.in_list(1) == std::vector<VertexId>{0, 1});
}

TEST_CASE("surviving in-lists are subsequences of the original") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 40; ++round) {
    GameGraph g = random_game(rng, 14, 5);
    std::vector<std::vector<VertexId>> before(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) before[v] = g.in_list(v);

    std::uniform_int_distribution<int> vd(0, g.vertex_count() - 1);
    for (int step = 0; step < 6; ++step) {
      VertexId v = vd(rng);
      if (step % 2 == 0 && g.alive(v)) {
        std::vector<VertexId> one{v};
        g.remove_vertices(one);
      } else if (g.alive(v) && g.owner(v) == P1 && g.out_degree(v) >= 2) {
        g.delete_edge(v, g.out_list(v).front());
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.alive(v)) continue;
      auto now = g.in_list(v);
      std::size_t matched = 0;
      for (VertexId x : before[v]) {
        if (matched < now.size() && now[matched] == x) ++matched;
      }
      CHECK(matched == now.size());
    }
  }
}

TEST_CASE("attractor removals keep survivors above out-degree 0") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 60; ++round) {
    GameGraph g = random_game(rng, 16, 4);
    FullView view(g);
    for (int peel = 0; peel < 3 && g.alive_count() > 0; ++peel) {
      auto alive = g.alive_vertices();
      std::uniform_int_distribution<int> pick(0, static_cast<int>(alive.size()) - 1);
      std::vector<VertexId> targets{alive[pick(rng)]};
      Owner player = peel % 2 ? P1 : P2;
      auto grab = attractor(g, player, targets, view);
      g.remove_vertices(grab.order);
      for (VertexId v : g.alive_vertices()) CHECK(g.out_degree(v) >= 1);
    }
  }
}
