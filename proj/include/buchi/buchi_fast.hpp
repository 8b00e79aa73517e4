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

#ifndef BUCHI_BUCHI_FAST_HPP_
#define BUCHI_BUCHI_FAST_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "buchi/classical.hpp"
#include "buchi/game_graph.hpp"
#include "buchi/views.hpp"

namespace buchi {

struct CandidateSet {
  std::vector<VertexId> s;  // sorted; empty when no cut exists
  int stop_level = 0;
};

/// Climbs the level hierarchy of the current surviving graph looking for
/// a non-empty player-1-avoiding candidate set. At each level i the set
/// Z collects blue vertices and orange vertices with no view out-edge;
/// s is the complement of Attr_1(B u Z) in the level view. Stops at the
/// first level with non-empty s, or at the top level (whose body still
/// runs). The returned s, when non-empty, is the unique maximal
/// separating cut at the stop level.
CandidateSet find_candidate_set(const GameGraph& g,
                                std::uint64_t* work = nullptr);

/// Separating-cut conditions for `s` against a level view: (a) only
/// player-2 vertices of s have view-edges leaving s, (b) every player-2
/// vertex of s has a view-edge into s, (c) every player-1 vertex of s is
/// white, (d) s has no Buchi vertex.
bool is_separating_cut(const GameGraph& g, const LevelView& view,
                       std::span<const VertexId> s);

struct FastIterationStat {
  int stop_level = 0;
  int candidate_size = 0;  // |S_j| at the stop level
  int removed = 0;         // |Attr_2(S_j)| actually deleted
};

struct FastStats {
  std::uint64_t work = 0;  // attractor + level-build edge touches
  std::vector<FastIterationStat> iterations;  // one per candidate search
};

/// The hierarchical-decomposition Buchi solver. First removes the
/// player-2 attractor of the vertices outside Attr_1(B), then repeatedly
/// removes Attr_2 of the candidate set found by find_candidate_set until
/// the candidate is empty. Output and witness strategy agree exactly
/// with solve_classical. The input graph is not mutated.
WinningPartition solve_fast(const GameGraph& g, FastStats* stats = nullptr);

}  // namespace buchi

#endif  // BUCHI_BUCHI_FAST_HPP_
