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

#ifndef BUCHI_GAME_GRAPH_HPP_
#define BUCHI_GAME_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace buchi {

using VertexId = std::int32_t;

enum class Owner : std::uint8_t { Player1 = 1, Player2 = 2 };

inline Owner opponent(Owner o) {
  return o == Owner::Player1 ? Owner::Player2 : Owner::Player1;
}

enum class ErrorKind {
  ZeroOutdegree,
  DuplicateEdge,
  AlreadyDead,
  NotPlayer1Edge,
  LastOutedge,
  NoSuchEdge,
  EdgeExists,
  StrategyUndefined,
  TooLarge,
  SyntaxError,
  InfeasibleDensity,
  MixedTrace,
  InvalidArgument,
};

class GameError : public std::runtime_error {
 public:
  GameError(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct VertexSpec {
  Owner owner = Owner::Player1;
  bool buchi = false;
};

/// Mutable two-player game graph over dense vertex ids [0, n).
///
/// Adjacency is kept as intrusive doubly-linked lists over a shared edge
/// pool, so deleting an edge or a vertex splices it out of both directions
/// in constant time and iteration only ever visits surviving edges.
///
/// In-edge lists carry a fixed order: all edges whose source is a
/// player-2 non-Buchi vertex come first, then all remaining edges; inside
/// each group the order is the build-time input order. Deletions preserve
/// the relative order (splice only), insertions of player-1 edges append
/// at the tail, which is inside the second group.
///
/// Single-writer: a GameGraph may move between threads, and read-only
/// sharing between mutations is fine, but concurrent mutation is not
/// synchronized.
class GameGraph {
 public:
  struct Neighbor {
    VertexId v;
    int edge;
  };

  /// Builds a graph from vertex specs and an ordered edge list.
  /// Throws ZeroOutdegree if a vertex has no out-edge and DuplicateEdge
  /// on repeated (u, v) pairs. Self-loops are allowed.
  static GameGraph build(const std::vector<VertexSpec>& vertices,
                         const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_count() const { return n_; }
  int alive_count() const { return alive_count_; }
  int edge_count() const { return m_alive_; }

  bool alive(VertexId v) const { return alive_[v] != 0; }
  Owner owner(VertexId v) const { return owner_[v]; }
  bool is_buchi(VertexId v) const { return buchi_[v] != 0; }
  int out_degree(VertexId v) const { return outdeg_[v]; }
  int in_degree(VertexId v) const { return indeg_[v]; }

  /// True when the source of an edge is a player-2 non-Buchi vertex, the
  /// class whose in-edges sort first in the fixed order.
  bool priority1_player2(VertexId v) const {
    return owner_[v] == Owner::Player2 && buchi_[v] == 0;
  }

  std::vector<VertexId> alive_vertices() const;
  std::vector<VertexId> buchi_vertices() const;  // alive Buchi vertices

  /// Marks every vertex of `s` dead and splices all incident edges.
  /// Throws AlreadyDead before any mutation if some vertex is not alive.
  void remove_vertices(std::span<const VertexId> s);

  /// Deletes the player-1 edge (u, v). Throws NotPlayer1Edge, NoSuchEdge,
  /// or LastOutedge (deleting the last out-edge is never legal).
  void delete_edge(VertexId u, VertexId v);

  /// Inserts a player-1 edge (u, v) and returns its edge id. Throws
  /// NotPlayer1Edge or EdgeExists.
  int insert_edge(VertexId u, VertexId v);

  /// Edge id of (u, v), or -1. Linear in out_degree(u).
  int find_edge(VertexId u, VertexId v) const;

  VertexId edge_from(int e) const { return edges_[e].from; }
  VertexId edge_to(int e) const { return edges_[e].to; }
  bool edge_alive(int e) const { return edges_[e].alive; }
  /// Upper bound (exclusive) on edge ids handed out so far.
  int edge_id_limit() const { return static_cast<int>(edges_.size()); }

  // Intrusive-list iteration. Ranges stay valid across unrelated edits;
  // do not delete the edge currently under the iterator.
  class OutRange;
  class InRange;
  OutRange out(VertexId v) const;
  InRange in(VertexId v) const;

  std::vector<VertexId> out_list(VertexId v) const;
  std::vector<VertexId> in_list(VertexId v) const;
  /// All surviving edges, grouped by source in out-list order.
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

 private:
  struct Edge {
    VertexId from = -1;
    VertexId to = -1;
    int next_out = -1, prev_out = -1;
    int next_in = -1, prev_in = -1;
    bool alive = false;
  };

  GameGraph() = default;

  void link_out(int e);
  void link_in(int e);
  void unlink_edge(int e);

  int n_ = 0;
  int alive_count_ = 0;
  int m_alive_ = 0;
  std::vector<Owner> owner_;
  std::vector<std::uint8_t> buchi_;
  std::vector<std::uint8_t> alive_;
  std::vector<int> out_head_, out_tail_, in_head_, in_tail_;
  std::vector<int> outdeg_, indeg_;
  std::vector<Edge> edges_;

  friend class EdgeCursor;
};

class GameGraph::OutRange {
 public:
  class iterator {
   public:
    iterator(const GameGraph* g, int e) : g_(g), e_(e) {}
    Neighbor operator*() const { return {g_->edges_[e_].to, e_}; }
    iterator& operator++() {
      e_ = g_->edges_[e_].next_out;
      return *this;
    }
    bool operator!=(const iterator& o) const { return e_ != o.e_; }

   private:
    const GameGraph* g_;
    int e_;
  };
  OutRange(const GameGraph* g, VertexId v) : g_(g), v_(v) {}
  iterator begin() const { return {g_, g_->out_head_[v_]}; }
  iterator end() const { return {g_, -1}; }

 private:
  const GameGraph* g_;
  VertexId v_;
};

class GameGraph::InRange {
 public:
  class iterator {
   public:
    iterator(const GameGraph* g, int e) : g_(g), e_(e) {}
    Neighbor operator*() const { return {g_->edges_[e_].from, e_}; }
    iterator& operator++() {
      e_ = g_->edges_[e_].next_in;
      return *this;
    }
    bool operator!=(const iterator& o) const { return e_ != o.e_; }

   private:
    const GameGraph* g_;
    int e_;
  };
  InRange(const GameGraph* g, VertexId v) : g_(g), v_(v) {}
  iterator begin() const { return {g_, g_->in_head_[v_]}; }
  iterator end() const { return {g_, -1}; }

 private:
  const GameGraph* g_;
  VertexId v_;
};

inline GameGraph::OutRange GameGraph::out(VertexId v) const { return {this, v}; }
inline GameGraph::InRange GameGraph::in(VertexId v) const { return {this, v}; }

}  // namespace buchi

#endif  // BUCHI_GAME_GRAPH_HPP_
