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

#include "buchi/buchi_fast.hpp"

#include "buchi/attractor.hpp"
#include "buchi/solver_internal.hpp"

namespace buchi {

CandidateSet find_candidate_set(const GameGraph& g, std::uint64_t* work) {
  int top = top_level(g);
  for (int i = 1;; ++i) {
    LevelView lv = build_level_view(g, i, work);

    std::vector<VertexId> targets = g.buchi_vertices();
    for (VertexId v : g.alive_vertices()) {
      if (lv.color(v) == Color::Blue ||
          (lv.color(v) == Color::Orange && lv.out_degree(v) == 0)) {
        targets.push_back(v);
      }
    }
    AttractorResult reach = attractor(g, Owner::Player1, targets, lv, work);

    CandidateSet result;
    result.stop_level = i;
    for (VertexId v : g.alive_vertices()) {
      if (!reach.contains(v)) result.s.push_back(v);
    }
    if (!result.s.empty() || i == top) return result;
  }
}

bool is_separating_cut(const GameGraph& g, const LevelView& view,
                       std::span<const VertexId> s) {
  std::vector<std::uint8_t> in_s(g.vertex_count(), 0);
  for (VertexId v : s) in_s[v] = 1;
  for (VertexId v : s) {
    if (g.is_buchi(v)) return false;
    bool leaves = false;
    bool stays = false;
    view.for_each_out(v, [&](VertexId t) { (in_s[t] ? stays : leaves) = true; });
    if (g.owner(v) == Owner::Player1) {
      if (view.color(v) != Color::White) return false;
      if (leaves) return false;
    } else if (!stays) {
      return false;
    }
  }
  return true;
}

WinningPartition solve_fast(const GameGraph& g, FastStats* stats) {
  GameGraph scratch = g;
  FullView view(scratch);
  std::uint64_t work = 0;

  {
    AttractorResult reach = attractor(scratch, Owner::Player1,
                                      scratch.buchi_vertices(), view, &work);
    std::vector<VertexId> outside;
    for (VertexId v : scratch.alive_vertices()) {
      if (!reach.contains(v)) outside.push_back(v);
    }
    if (!outside.empty()) {
      AttractorResult doomed =
          attractor(scratch, Owner::Player2, outside, view, &work);
      scratch.remove_vertices(doomed.order);
    }
  }

  while (true) {
    CandidateSet cand = find_candidate_set(scratch, &work);
    if (cand.s.empty()) {
      if (stats) {
        stats->iterations.push_back(
            {cand.stop_level, 0, 0});
      }
      break;
    }
    AttractorResult doomed =
        attractor(scratch, Owner::Player2, cand.s, view, &work);
    if (stats) {
      stats->iterations.push_back({cand.stop_level,
                                   static_cast<int>(cand.s.size()),
                                   static_cast<int>(doomed.order.size())});
    }
    scratch.remove_vertices(doomed.order);
  }

  AttractorResult final_reach = attractor(
      scratch, Owner::Player1, scratch.buchi_vertices(), view, &work);
  if (stats) stats->work = work;
  return internal::partition_from_survivors(g, scratch, final_reach);
}

}  // namespace buchi
