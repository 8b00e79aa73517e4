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

#include "buchi/mec.hpp"

#include <algorithm>

#include "buchi/attractor.hpp"

namespace buchi {

namespace {

struct MecBuilder {
  explicit MecBuilder(const GameGraph& g)
      : original(&g), emitted(g.vertex_count(), 0) {}

  void emit(const std::vector<VertexId>& mec) {
    for (VertexId v : mec) emitted[v] = 1;
    mecs.push_back(mec);
  }

  MecDecomposition finish() {
    MecDecomposition d;
    std::sort(mecs.begin(), mecs.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    d.mecs = std::move(mecs);
    d.mec_index.assign(original->vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(d.mecs.size()); ++i) {
      for (VertexId v : d.mecs[i]) d.mec_index[v] = i;
    }
    for (VertexId v = 0; v < original->vertex_count(); ++v) {
      if (original->alive(v) && !emitted[v]) d.non_mec.push_back(v);
    }
    return d;
  }

  const GameGraph* original;
  std::vector<std::uint8_t> emitted;
  std::vector<std::vector<VertexId>> mecs;
};

// Removes Attr_2 of the emitted vertices from the scratch graph.
void remove_attractor_of(GameGraph& scratch, const std::vector<VertexId>& x,
                         std::uint64_t* work) {
  FullView view(scratch);
  AttractorResult grab = attractor(scratch, Owner::Player2, x, view, work);
  scratch.remove_vertices(grab.order);
}

}  // namespace

MecDecomposition mec_decomposition(const GameGraph& g, MecStats* stats) {
  GameGraph scratch = g;
  MecBuilder builder(g);
  std::uint64_t work = 0;

  {
    FullView view(scratch);
    auto bottoms = bottom_sccs(scratch, scratch.alive_vertices(), view, &work);
    std::vector<VertexId> x;
    for (auto& c : bottoms) {
      builder.emit(c);
      x.insert(x.end(), c.begin(), c.end());
    }
    remove_attractor_of(scratch, x, &work);
  }

  while (scratch.alive_count() > 0) {
    int top = top_level(scratch);
    std::vector<VertexId> candidate;
    int stop_level = 0;
    LevelView lv;
    for (int i = 1;; ++i) {
      lv = mec_level_view(scratch, i, &work);
      std::vector<VertexId> blues;
      std::vector<VertexId> alive = scratch.alive_vertices();
      for (VertexId v : alive) {
        if (lv.color(v) == Color::Blue) blues.push_back(v);
      }
      auto reach = can_reach(scratch, alive, blues, lv, &work);
      candidate.clear();
      for (VertexId v : alive) {
        if (!reach[v]) candidate.push_back(v);
      }
      if (!candidate.empty()) {
        stop_level = i;
        break;
      }
      // At the top level there are no blue vertices, so the candidate is
      // the whole surviving vertex set and the loop always stops.
      if (i >= top && candidate.empty()) {
        stop_level = i;
        candidate = alive;
        break;
      }
    }

    // The candidate's vertices are white and keep all their out-edges
    // inside the candidate, so these bottom SCCs are bottom SCCs of the
    // full surviving graph.
    auto bottoms = bottom_sccs(scratch, candidate, lv, &work);
    MecIterationStat stat;
    stat.stop_level = stop_level;
    std::vector<VertexId> x;
    for (auto& c : bottoms) {
      MecSccStat s;
      s.size = static_cast<int>(c.size());
      int prev_w = 1 << (stop_level - 1);
      for (VertexId v : c) {
        if (scratch.out_degree(v) > prev_w) s.meets_prev_blue = true;
      }
      stat.sccs.push_back(s);
      builder.emit(c);
      x.insert(x.end(), c.begin(), c.end());
    }
    if (stats) stats->iterations.push_back(std::move(stat));
    remove_attractor_of(scratch, x, &work);
  }

  if (stats) stats->work = work;
  return builder.finish();
}

MecDecomposition naive_mec(const GameGraph& g) {
  GameGraph scratch = g;
  MecBuilder builder(g);
  FullView view(scratch);

  bool changed = true;
  while (changed && scratch.alive_count() > 0) {
    changed = false;
    auto sccs =
        strongly_connected_components(scratch, scratch.alive_vertices(), view);
    for (auto& comp : sccs) {
      // Components touched by a removal earlier in this round are stale;
      // the next round recomputes them.
      bool intact = true;
      for (VertexId v : comp) {
        if (!scratch.alive(v)) intact = false;
      }
      if (!intact) continue;

      std::vector<std::uint8_t> in_comp(scratch.vertex_count(), 0);
      for (VertexId v : comp) in_comp[v] = 1;
      std::vector<VertexId> exiting;
      for (VertexId v : comp) {
        if (scratch.owner(v) != Owner::Player2) continue;
        for (auto nb : scratch.out(v)) {
          if (!in_comp[nb.v]) {
            exiting.push_back(v);
            break;
          }
        }
      }

      if (!exiting.empty()) {
        AttractorResult grab =
            attractor(scratch, Owner::Player2, exiting, view);
        std::vector<VertexId> doomed;
        for (VertexId v : comp) {
          if (grab.contains(v)) doomed.push_back(v);
        }
        scratch.remove_vertices(doomed);
        changed = true;
      } else if (comp.size() >= 2 ||
                 scratch.find_edge(comp[0], comp[0]) >= 0) {
        builder.emit(comp);
        remove_attractor_of(scratch, comp, nullptr);
        changed = true;
      }
      // A trivial singleton with no exiting player-2 vertex stays; once a
      // round leaves every component in that state the survivors form a
      // cycle-free graph and belong to no MEC.
    }
  }
  return builder.finish();
}

}  // namespace buchi
