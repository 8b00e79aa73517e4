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
#include "fixtures.hpp"

using namespace buchi;
using namespace buchi::testing;

namespace {

// Naive round-based fixpoint of the inductive attractor definition, as an
// independent oracle for the counter-based implementation.
std::vector<std::uint8_t> attractor_by_rounds(const GameGraph& g, Owner player,
                                              const std::vector<VertexId>& targets) {
  std::vector<std::uint8_t> in(g.vertex_count(), 0);
  for (VertexId t : targets) in[t] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : g.alive_vertices()) {
      if (in[v]) continue;
      bool any = false, all = g.out_degree(v) > 0;
      for (auto nb : g.out(v)) {
        if (in[nb.v]) {
          any = true;
        } else {
          all = false;
        }
      }
      bool joins = g.owner(v) == player ? any : all;
      if (joins) {
        in[v] = 1;
        changed = true;
      }
    }
  }
  return in;
}

}  // namespace

TEST_CASE("attractor: player-1 chain ranks") {
  GameGraph g = GameGraph::build({{P1, false}, {P1, false}, {P1, false}},
                                 {{0, 0}, {1, 0}, {2, 1}});
  FullView view(g);
  std::vector<VertexId> targets{0};
  auto res = attractor(g, P1, targets, view);
  CHECK(res.rank == std::vector<int>{0, 1, 2});
  CHECK(res.strategy[1] == 0);
  CHECK(res.strategy[2] == 1);
}

TEST_CASE("attractor: opposing vertex needs all successors") {
  // u in V2 with successors {t, s}; only t is a target.
  GameGraph g = GameGraph::build({{P2, false}, {P1, true}, {P1, false}},
                                 {{0, 1}, {0, 2}, {1, 1}, {2, 2}});
  FullView view(g);
  std::vector<VertexId> targets{1};
  auto res = attractor(g, P1, targets, view);
  CHECK_FALSE(res.contains(0));
  CHECK(res.contains(1));
}

TEST_CASE("attractor: F2 towards the trap") {
  GameGraph g = f2();
  FullView view(g);
  std::vector<VertexId> targets{2};
  auto res = attractor(g, P2, targets, view);
  CHECK(res.contains(0));
  CHECK(res.contains(1));
  CHECK(res.contains(2));
  CHECK(res.rank[1] == 1);
  CHECK(res.rank[0] == 2);
  CHECK(res.strategy[1] == 2);
}

TEST_CASE("attractor matches the round-based oracle on random graphs") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 300; ++round) {
    GameGraph g = random_game(rng, 7, 3);
    FullView view(g);
    auto alive = g.alive_vertices();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(alive.size()) - 1);
    std::vector<VertexId> targets{alive[pick(rng)], alive[pick(rng)]};
    for (Owner player : {P1, P2}) {
      auto fast = attractor(g, player, targets, view);
      auto slow = attractor_by_rounds(g, player, targets);
      CHECK(fast.member == slow);
    }
  }
}

TEST_CASE("attractor properties: superset, complement closed, idempotent") {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 100; ++round) {
    GameGraph g = random_game(rng, 10, 3);
    FullView view(g);
    auto alive = g.alive_vertices();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(alive.size()) - 1);
    std::vector<VertexId> targets{alive[pick(rng)]};
    Owner player = round % 2 ? P1 : P2;
    auto res = attractor(g, player, targets, view);

    for (VertexId t : targets) CHECK(res.contains(t));

    std::vector<VertexId> complement;
    for (VertexId v : alive) {
      if (!res.contains(v)) complement.push_back(v);
    }
    CHECK(is_closed(g, player, complement));

    auto again = attractor(g, player, res.order, view);
    CHECK(again.member == res.member);
  }
}

TEST_CASE("is_closed examples") {
  GameGraph g = f2();
  CHECK(is_closed(g, P1, std::vector<VertexId>{2}));
  CHECK_FALSE(is_closed(g, P1, std::vector<VertexId>{0}));
  CHECK(is_closed(g, P1, std::vector<VertexId>{0, 1, 2}));
  CHECK(is_closed(g, P2, std::vector<VertexId>{0, 1, 2}));
}

TEST_CASE("verify_buchi_strategy accepts the obvious certificates") {
  {
    GameGraph g = f1();
    std::vector<VertexId> w1{0};
    std::vector<VertexId> strat(1, -1);
    strat[0] = 0;
    CHECK(verify_buchi_strategy(g, w1, strat));
  }
  {
    GameGraph g = f3();
    std::vector<VertexId> w1{0, 1};
    std::vector<VertexId> strat(2, -1);
    strat[1] = 0;
    CHECK(verify_buchi_strategy(g, w1, strat));
  }
}

TEST_CASE("verify_buchi_strategy rejects F2 for any claimed w1") {
  GameGraph g = f2();
  std::vector<VertexId> w1{0, 1, 2};
  std::vector<VertexId> strat(3, -1);
  strat[0] = 1;
  CHECK_FALSE(verify_buchi_strategy(g, w1, strat));
}

TEST_CASE("verify_buchi_strategy: undefined choice throws") {
  GameGraph g = f1();
  std::vector<VertexId> w1{0};
  std::vector<VertexId> strat(1, -1);
  CHECK_THROWS_AS(verify_buchi_strategy(g, w1, strat), GameError);
}
