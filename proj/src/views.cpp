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

#include "buchi/views.hpp"

#include <algorithm>
#include <cassert>

namespace buchi {

bool LevelView::has_edge(VertexId u, VertexId v) const {
  for (int k = out_off_[u]; k < out_off_[u + 1]; ++k) {
    if (out_dst_[k] == v) return true;
  }
  return false;
}

int top_level(const GameGraph& g) {
  int need = std::max(2, g.alive_count());
  int level = 1;
  while ((1 << level) < need) ++level;
  return level;
}

struct LevelViewBuilder {
  template <typename EdgeEnum>
  static void fill_csr(LevelView& lv, int n, EdgeEnum&& enumerate,
                       std::uint64_t* work) {
    lv.out_off_.assign(n + 1, 0);
    lv.in_off_.assign(n + 1, 0);
    std::int64_t count = 0;
    enumerate([&](VertexId u, VertexId v) {
      ++lv.out_off_[u + 1];
      ++lv.in_off_[v + 1];
      ++count;
    });
    for (int v = 0; v < n; ++v) {
      lv.out_off_[v + 1] += lv.out_off_[v];
      lv.in_off_[v + 1] += lv.in_off_[v];
    }
    lv.out_dst_.resize(count);
    lv.in_src_.resize(count);
    std::vector<int> opos(lv.out_off_.begin(), lv.out_off_.end() - 1);
    std::vector<int> ipos(lv.in_off_.begin(), lv.in_off_.end() - 1);
    enumerate([&](VertexId u, VertexId v) {
      lv.out_dst_[opos[u]++] = v;
      lv.in_src_[ipos[v]++] = u;
    });
    if (work) *work += static_cast<std::uint64_t>(count) + n;
  }

  static void set_level(LevelView& lv, int level) { lv.level_ = level; }
  static std::vector<Color>& colors(LevelView& lv) { return lv.color_; }
};

namespace {

// Enumerates the level-i edge set exactly once per edge. The two rules
// are disjoint: rule (a) takes edges from sources with out_degree <= w,
// the in-edge window contributes only edges whose source exceeds w.
template <typename F>
void for_each_buchi_level_edge(const GameGraph& g, int w, F&& f) {
  int n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    if (!g.alive(u) || g.out_degree(u) > w) continue;
    for (auto nb : g.out(u)) f(u, nb.v);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    int taken = 0;
    for (auto nb : g.in(v)) {
      if (taken == w) break;
      ++taken;
      if (g.out_degree(nb.v) > w) f(nb.v, v);
    }
  }
}

template <typename F>
void for_each_mec_level_edge(const GameGraph& g, int w, F&& f) {
  int n = g.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    if (!g.alive(u) || g.out_degree(u) > w) continue;
    for (auto nb : g.out(u)) f(u, nb.v);
  }
}

}  // namespace

LevelView build_level_view(const GameGraph& g, int level, std::uint64_t* work) {
  assert(level >= 1 && level <= 30);
  int n = g.vertex_count();
  int w = 1 << level;
  LevelView lv;
  LevelViewBuilder::set_level(lv, level);
  auto& colors = LevelViewBuilder::colors(lv);
  colors.assign(n, Color::White);
  for (VertexId v = 0; v < n; ++v) {
    if (!g.alive(v) || g.out_degree(v) <= w) continue;
    colors[v] = g.owner(v) == Owner::Player1 ? Color::Blue : Color::Orange;
  }
  LevelViewBuilder::fill_csr(
      lv, n, [&](auto&& f) { for_each_buchi_level_edge(g, w, f); }, work);
  return lv;
}

LevelView mec_level_view(const GameGraph& g, int level, std::uint64_t* work) {
  assert(level >= 1 && level <= 30);
  int n = g.vertex_count();
  int w = 1 << level;
  LevelView lv;
  LevelViewBuilder::set_level(lv, level);
  auto& colors = LevelViewBuilder::colors(lv);
  colors.assign(n, Color::White);
  for (VertexId v = 0; v < n; ++v) {
    if (g.alive(v) && g.out_degree(v) > w) colors[v] = Color::Blue;
  }
  LevelViewBuilder::fill_csr(
      lv, n, [&](auto&& f) { for_each_mec_level_edge(g, w, f); }, work);
  return lv;
}

}  // namespace buchi
