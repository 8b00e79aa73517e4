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

#ifndef BUCHI_MEC_HPP_
#define BUCHI_MEC_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "buchi/game_graph.hpp"
#include "buchi/views.hpp"

namespace buchi {

/// Strongly connected components of the subgraph induced by `vertices`
/// in the view (iterative Tarjan; components in reverse topological
/// order, each sorted ascending).
template <GraphView V>
std::vector<std::vector<VertexId>> strongly_connected_components(
    const GameGraph& g, std::span<const VertexId> vertices, const V& view,
    std::uint64_t* work = nullptr);

/// The components returned by strongly_connected_components that have no
/// view-edge from a member to any non-member (edges to vertices outside
/// `vertices` also count as leaving).
template <GraphView V>
std::vector<std::vector<VertexId>> bottom_sccs(const GameGraph& g,
                                               std::span<const VertexId> vertices,
                                               const V& view,
                                               std::uint64_t* work = nullptr);

/// Vertices of `from` that can reach some vertex of `targets` along view
/// edges within `from` (plain graph reachability; targets included).
template <GraphView V>
std::vector<std::uint8_t> can_reach(const GameGraph& g,
                                    std::span<const VertexId> from,
                                    std::span<const VertexId> targets,
                                    const V& view,
                                    std::uint64_t* work = nullptr);

/// Disjoint maximal end-components plus the vertices in no MEC.
/// Every mec is sorted; mecs are ordered by their smallest vertex.
struct MecDecomposition {
  std::vector<std::vector<VertexId>> mecs;
  std::vector<VertexId> non_mec;  // sorted
  std::vector<int> mec_index;     // per-vertex mec position or -1
};

struct MecSccStat {
  int size = 0;
  bool meets_prev_blue = false;  // intersects Bl_{i-1} of the stop level
};

struct MecIterationStat {
  int stop_level = 0;
  std::vector<MecSccStat> sccs;
};

struct MecStats {
  std::uint64_t work = 0;
  std::vector<MecIterationStat> iterations;
};

/// Hierarchical-decomposition MEC algorithm: peel bottom SCCs of the full
/// graph, then repeatedly find, at the smallest level where it exists,
/// the set of vertices that cannot reach a blue vertex, emit the bottom
/// SCCs of that set and remove their player-2 attractor. The input graph
/// is not mutated.
MecDecomposition mec_decomposition(const GameGraph& g, MecStats* stats = nullptr);

/// Baseline decomposition by repeated SCC refinement: an SCC whose
/// player-2 vertices cannot leave it is a MEC; otherwise the player-2
/// attractor of its exiting player-2 vertices (restricted to the SCC)
/// belongs to no MEC and is removed. Independent of the level machinery.
MecDecomposition naive_mec(const GameGraph& g);

// --- template implementations ---

template <GraphView V>
std::vector<std::vector<VertexId>> strongly_connected_components(
    const GameGraph& g, std::span<const VertexId> vertices, const V& view,
    std::uint64_t* work) {
  int n = g.vertex_count();
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<std::uint8_t> on_stack(n, 0), in_set(n, 0);
  for (VertexId v : vertices) in_set[v] = 1;

  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> sccs;
  std::uint64_t touched = 0;

  // Explicit DFS. Each frame owns a slice of succ_buf holding the frame
  // vertex's in-set successors; succ_off[k] is the slice start of frame k
  // and succ_off[frames.size()] the end of the top slice.
  struct Frame {
    VertexId v;
    int cursor;
  };
  std::vector<Frame> frames;
  std::vector<VertexId> succ_buf;
  std::vector<int> succ_off{0};

  auto open = [&](VertexId v, int& next_index) {
    index[v] = lowlink[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    view.for_each_out(v, [&](VertexId t) {
      ++touched;
      if (in_set[t]) succ_buf.push_back(t);
    });
    frames.push_back({v, 0});
    succ_off.push_back(static_cast<int>(succ_buf.size()));
  };

  int next_index = 0;
  for (VertexId root : vertices) {
    if (index[root] >= 0) continue;
    open(root, next_index);
    while (!frames.empty()) {
      Frame& f = frames.back();
      int base = succ_off[frames.size() - 1];
      int limit = succ_off[frames.size()];
      if (base + f.cursor < limit) {
        VertexId t = succ_buf[base + f.cursor++];
        if (index[t] < 0) {
          open(t, next_index);
        } else if (on_stack[t] && index[t] < lowlink[f.v]) {
          lowlink[f.v] = index[t];
        }
      } else {
        VertexId v = f.v;
        if (lowlink[v] == index[v]) {
          std::vector<VertexId> comp;
          while (true) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          sccs.push_back(std::move(comp));
        }
        frames.pop_back();
        succ_off.pop_back();
        succ_buf.resize(succ_off.back());
        if (!frames.empty() && lowlink[v] < lowlink[frames.back().v]) {
          lowlink[frames.back().v] = lowlink[v];
        }
      }
    }
  }
  if (work) *work += touched;
  return sccs;
}

template <GraphView V>
std::vector<std::vector<VertexId>> bottom_sccs(const GameGraph& g,
                                               std::span<const VertexId> vertices,
                                               const V& view,
                                               std::uint64_t* work) {
  auto sccs = strongly_connected_components(g, vertices, view, work);
  std::vector<int> comp(g.vertex_count(), -1);
  for (int c = 0; c < static_cast<int>(sccs.size()); ++c) {
    for (VertexId v : sccs[c]) comp[v] = c;
  }
  std::vector<std::vector<VertexId>> bottoms;
  for (int c = 0; c < static_cast<int>(sccs.size()); ++c) {
    bool leaves = false;
    for (VertexId v : sccs[c]) {
      view.for_each_out(v, [&](VertexId t) {
        if (comp[t] != c) leaves = true;
      });
      if (leaves) break;
    }
    if (!leaves) bottoms.push_back(sccs[c]);
  }
  return bottoms;
}

template <GraphView V>
std::vector<std::uint8_t> can_reach(const GameGraph& g,
                                    std::span<const VertexId> from,
                                    std::span<const VertexId> targets,
                                    const V& view, std::uint64_t* work) {
  std::vector<std::uint8_t> in_set(g.vertex_count(), 0), reach(g.vertex_count(), 0);
  for (VertexId v : from) in_set[v] = 1;
  std::vector<VertexId> queue;
  std::uint64_t touched = 0;
  for (VertexId t : targets) {
    if (in_set[t] && !reach[t]) {
      reach[t] = 1;
      queue.push_back(t);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    view.for_each_in(u, [&](VertexId w) {
      ++touched;
      if (in_set[w] && !reach[w]) {
        reach[w] = 1;
        queue.push_back(w);
      }
    });
  }
  if (work) *work += touched;
  return reach;
}

}  // namespace buchi

#endif  // BUCHI_MEC_HPP_
