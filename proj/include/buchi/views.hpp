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

#ifndef BUCHI_VIEWS_HPP_
#define BUCHI_VIEWS_HPP_

#include <concepts>
#include <cstdint>
#include <vector>

#include "buchi/game_graph.hpp"

namespace buchi {

/// Read-only edge set over the vertices of a GameGraph. Algorithms that
/// accept any view (full surviving edge set or a level view) are
/// templated on this concept.
template <typename V>
concept GraphView = requires(const V& view, VertexId v) {
  { view.out_degree(v) } -> std::convertible_to<int>;
  { view.in_degree(v) } -> std::convertible_to<int>;
  view.for_each_out(v, [](VertexId) {});
  view.for_each_in(v, [](VertexId) {});
};

/// The full surviving edge set of a graph.
class FullView {
 public:
  explicit FullView(const GameGraph& g) : g_(&g) {}
  int out_degree(VertexId v) const { return g_->out_degree(v); }
  int in_degree(VertexId v) const { return g_->in_degree(v); }
  template <typename F>
  void for_each_out(VertexId v, F&& f) const {
    for (auto nb : g_->out(v)) f(nb.v);
  }
  template <typename F>
  void for_each_in(VertexId v, F&& f) const {
    for (auto nb : g_->in(v)) f(nb.v);
  }
  const GameGraph& graph() const { return *g_; }

 private:
  const GameGraph* g_;
};

enum class Color : std::uint8_t { White, Blue, Orange };

/// Level graph G_i: an edge subset of the current surviving graph in CSR
/// form, plus the per-vertex coloring for level i. Snapshot semantics:
/// a LevelView is not updated when the graph changes; rebuild it.
class LevelView {
 public:
  int level() const { return level_; }
  /// 2^level, the degree threshold and in-edge window width.
  int window() const { return 1 << level_; }
  Color color(VertexId v) const { return color_[v]; }

  int out_degree(VertexId v) const { return out_off_[v + 1] - out_off_[v]; }
  int in_degree(VertexId v) const { return in_off_[v + 1] - in_off_[v]; }
  template <typename F>
  void for_each_out(VertexId v, F&& f) const {
    for (int k = out_off_[v]; k < out_off_[v + 1]; ++k) f(out_dst_[k]);
  }
  template <typename F>
  void for_each_in(VertexId v, F&& f) const {
    for (int k = in_off_[v]; k < in_off_[v + 1]; ++k) f(in_src_[k]);
  }

  std::int64_t edge_count() const { return static_cast<std::int64_t>(out_dst_.size()); }
  bool has_edge(VertexId u, VertexId v) const;

 private:
  friend struct LevelViewBuilder;

  int level_ = 0;
  std::vector<Color> color_;
  std::vector<int> out_off_, in_off_;
  std::vector<VertexId> out_dst_, in_src_;
};

/// Number of levels for the current surviving graph: the smallest L >= 1
/// with 2^L >= alive_count, so the level-L view is the full graph.
int top_level(const GameGraph& g);

/// Level view for the Buchi solver. E_i holds every edge (u, v) with
/// out_degree(u) <= 2^i plus the first 2^i surviving in-edges of each v
/// in the fixed order. Player-1 vertices with out_degree > 2^i are Blue,
/// player-2 ones Orange, the rest White. Degrees are current degrees.
/// Cost O(2^i * n). `work` accumulates edge touches when non-null.
LevelView build_level_view(const GameGraph& g, int level,
                           std::uint64_t* work = nullptr);

/// Level view for the MEC decomposition. E_i holds every edge (u, v)
/// with out_degree(u) <= 2^i (no in-edge window); any vertex with
/// out_degree > 2^i is Blue regardless of owner.
LevelView mec_level_view(const GameGraph& g, int level,
                         std::uint64_t* work = nullptr);

}  // namespace buchi

#endif  // BUCHI_VIEWS_HPP_
