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

#include "buchi/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "strategy_space.hpp"

namespace buchi {

namespace {

// For a fixed successor map, whether the lasso from each vertex cycles
// through a Buchi vertex. Linear: every vertex is walked once.
void lasso_hits_buchi(const GameGraph& g, const std::vector<VertexId>& succ,
                      std::vector<std::int8_t>& result) {
  int n = g.vertex_count();
  result.assign(n, -1);
  std::vector<int> position(n, -1);
  std::vector<VertexId> path;
  for (VertexId v = 0; v < n; ++v) {
    if (!g.alive(v) || result[v] >= 0) continue;
    path.clear();
    VertexId cur = v;
    while (result[cur] < 0 && position[cur] < 0) {
      position[cur] = static_cast<int>(path.size());
      path.push_back(cur);
      cur = succ[cur];
    }
    std::int8_t verdict = 0;
    if (result[cur] >= 0) {
      verdict = result[cur];
    } else {
      // New cycle: path[position[cur]..] loops forever.
      for (int i = position[cur]; i < static_cast<int>(path.size()); ++i) {
        if (g.is_buchi(path[i])) verdict = 1;
      }
    }
    for (VertexId w : path) {
      result[w] = verdict;
      position[w] = -1;
    }
  }
}

}  // namespace

WinningPartition oracle_buchi(const GameGraph& g) {
  internal::StrategySpace p1(g, Owner::Player1);
  internal::StrategySpace p2(g, Owner::Player2);
  if (p1.count() * p2.count() > 1e6) {
    throw GameError(ErrorKind::TooLarge, "strategy space exceeds the guard");
  }

  int n = g.vertex_count();
  std::vector<VertexId> succ(n, -1);
  std::vector<std::int8_t> verdict;
  std::vector<std::uint8_t> w1(n, 0), w2(n, 0);

  // v in w1 iff exists sigma, for all pi, the play cycle meets B.
  p1.reset(succ);
  do {
    std::vector<std::uint8_t> wins(n, 1);
    p2.reset(succ);
    do {
      lasso_hits_buchi(g, succ, verdict);
      for (VertexId v = 0; v < n; ++v) {
        if (g.alive(v) && verdict[v] != 1) wins[v] = 0;
      }
    } while (p2.next(succ));
    for (VertexId v = 0; v < n; ++v) {
      if (wins[v] && g.alive(v)) w1[v] = 1;
    }
  } while (p1.next(succ));

  // Dual run: v in w2 iff exists pi, for all sigma, the cycle avoids B.
  p2.reset(succ);
  do {
    std::vector<std::uint8_t> wins(n, 1);
    p1.reset(succ);
    do {
      lasso_hits_buchi(g, succ, verdict);
      for (VertexId v = 0; v < n; ++v) {
        if (g.alive(v) && verdict[v] != 0) wins[v] = 0;
      }
    } while (p1.next(succ));
    for (VertexId v = 0; v < n; ++v) {
      if (wins[v] && g.alive(v)) w2[v] = 1;
    }
  } while (p2.next(succ));

  for (VertexId v = 0; v < n; ++v) {
    if (g.alive(v) && w1[v] == w2[v]) {
      throw GameError(ErrorKind::InvalidArgument,
                      "memoryless enumeration failed to partition vertex " +
                          std::to_string(v));
    }
  }

  WinningPartition part;
  part.in_w1 = w1;
  part.strategy1.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    (w1[v] ? part.w1 : part.w2).push_back(v);
  }
  return part;
}

MecDecomposition oracle_mec(const GameGraph& g) {
  if (g.vertex_count() > 15) {
    throw GameError(ErrorKind::TooLarge, "subset enumeration needs n <= 15");
  }
  int n = g.vertex_count();
  std::uint32_t alive_mask = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (g.alive(v)) alive_mask |= 1u << v;
  }

  auto is_end_component = [&](std::uint32_t mask) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (mask & (1u << v)) members.push_back(v);
    }
    if (members.size() == 1) {
      if (g.find_edge(members[0], members[0]) < 0) return false;
    }
    for (VertexId v : members) {
      if (g.owner(v) != Owner::Player2) continue;
      for (auto nb : g.out(v)) {
        if (!(mask & (1u << nb.v))) return false;
      }
    }
    FullView view(g);
    auto sccs = strongly_connected_components(g, members, view);
    return sccs.size() == 1;
  };

  std::vector<std::uint32_t> components;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if ((mask & alive_mask) != mask) continue;
    if (is_end_component(mask)) components.push_back(mask);
  }

  MecDecomposition d;
  d.mec_index.assign(n, -1);
  std::vector<std::uint32_t> maxima;
  for (std::uint32_t m : components) {
    bool dominated = false;
    for (std::uint32_t o : components) {
      if (o != m && (m & o) == m) dominated = true;
    }
    if (!dominated) maxima.push_back(m);
  }
  std::sort(maxima.begin(), maxima.end(),
            [](std::uint32_t a, std::uint32_t b) {
              return std::countr_zero(a) < std::countr_zero(b);
            });
  std::uint32_t covered = 0;
  for (std::uint32_t m : maxima) {
    if (covered & m) {
      throw GameError(ErrorKind::InvalidArgument,
                      "maximal end-components overlap");
    }
    covered |= m;
    std::vector<VertexId> mec;
    for (VertexId v = 0; v < n; ++v) {
      if (m & (1u << v)) {
        d.mec_index[v] = static_cast<int>(d.mecs.size());
        mec.push_back(v);
      }
    }
    d.mecs.push_back(std::move(mec));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (g.alive(v) && !(covered & (1u << v))) d.non_mec.push_back(v);
  }
  return d;
}

}  // namespace buchi
