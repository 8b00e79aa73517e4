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

#include "buchi/game_graph.hpp"

#include <algorithm>
#include <string>

namespace buchi {

namespace {

std::string edge_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

GameGraph GameGraph::build(const std::vector<VertexSpec>& vertices,
                           const std::vector<std::pair<VertexId, VertexId>>& edges) {
  GameGraph g;
  g.n_ = static_cast<int>(vertices.size());
  g.alive_count_ = g.n_;
  g.owner_.resize(g.n_);
  g.buchi_.resize(g.n_);
  g.alive_.assign(g.n_, 1);
  g.out_head_.assign(g.n_, -1);
  g.out_tail_.assign(g.n_, -1);
  g.in_head_.assign(g.n_, -1);
  g.in_tail_.assign(g.n_, -1);
  g.outdeg_.assign(g.n_, 0);
  g.indeg_.assign(g.n_, 0);
  for (int v = 0; v < g.n_; ++v) {
    g.owner_[v] = vertices[v].owner;
    g.buchi_[v] = vertices[v].buchi ? 1 : 0;
  }

  for (auto [u, v] : edges) {
    if (u < 0 || u >= g.n_ || v < 0 || v >= g.n_) {
      throw GameError(ErrorKind::InvalidArgument,
                      "edge endpoint out of range: " + edge_str(u, v));
    }
  }
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw GameError(ErrorKind::DuplicateEdge,
                      "duplicate edge " + edge_str(dup->first, dup->second));
    }
  }

  g.edges_.resize(edges.size());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    g.edges_[e].from = edges[e].first;
    g.edges_[e].to = edges[e].second;
    g.edges_[e].alive = true;
    g.link_out(e);
  }
  // In-lists in the fixed order: priority-1 player-2 sources first, then
  // everything else; input order inside each group.
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (g.priority1_player2(g.edges_[e].from)) g.link_in(e);
  }
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (!g.priority1_player2(g.edges_[e].from)) g.link_in(e);
  }
  g.m_alive_ = static_cast<int>(edges.size());

  for (VertexId v = 0; v < g.n_; ++v) {
    if (g.outdeg_[v] == 0) {
      throw GameError(ErrorKind::ZeroOutdegree,
                      "vertex " + std::to_string(v) + " has no out-edge");
    }
  }
  return g;
}

void GameGraph::link_out(int e) {
  VertexId u = edges_[e].from;
  edges_[e].next_out = -1;
  edges_[e].prev_out = out_tail_[u];
  if (out_tail_[u] >= 0) {
    edges_[out_tail_[u]].next_out = e;
  } else {
    out_head_[u] = e;
  }
  out_tail_[u] = e;
  ++outdeg_[u];
}

void GameGraph::link_in(int e) {
  VertexId v = edges_[e].to;
  edges_[e].next_in = -1;
  edges_[e].prev_in = in_tail_[v];
  if (in_tail_[v] >= 0) {
    edges_[in_tail_[v]].next_in = e;
  } else {
    in_head_[v] = e;
  }
  in_tail_[v] = e;
  ++indeg_[v];
}

void GameGraph::unlink_edge(int e) {
  Edge& ed = edges_[e];
  if (ed.prev_out >= 0) {
    edges_[ed.prev_out].next_out = ed.next_out;
  } else {
    out_head_[ed.from] = ed.next_out;
  }
  if (ed.next_out >= 0) {
    edges_[ed.next_out].prev_out = ed.prev_out;
  } else {
    out_tail_[ed.from] = ed.prev_out;
  }
  if (ed.prev_in >= 0) {
    edges_[ed.prev_in].next_in = ed.next_in;
  } else {
    in_head_[ed.to] = ed.next_in;
  }
  if (ed.next_in >= 0) {
    edges_[ed.next_in].prev_in = ed.prev_in;
  } else {
    in_tail_[ed.to] = ed.prev_in;
  }
  --outdeg_[ed.from];
  --indeg_[ed.to];
  --m_alive_;
  ed.alive = false;
}

std::vector<VertexId> GameGraph::alive_vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_count_);
  for (VertexId v = 0; v < n_; ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> GameGraph::buchi_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v) {
    if (alive_[v] && buchi_[v]) out.push_back(v);
  }
  return out;
}

void GameGraph::remove_vertices(std::span<const VertexId> s) {
  for (VertexId v : s) {
    if (v < 0 || v >= n_ || !alive_[v]) {
      throw GameError(ErrorKind::AlreadyDead,
                      "vertex " + std::to_string(v) + " is not alive");
    }
  }
  for (VertexId v : s) {
    int e = out_head_[v];
    while (e >= 0) {
      int next = edges_[e].next_out;
      unlink_edge(e);
      e = next;
    }
    e = in_head_[v];
    while (e >= 0) {
      int next = edges_[e].next_in;
      unlink_edge(e);
      e = next;
    }
    alive_[v] = 0;
    --alive_count_;
  }
}

void GameGraph::delete_edge(VertexId u, VertexId v) {
  if (owner_[u] != Owner::Player1) {
    throw GameError(ErrorKind::NotPlayer1Edge,
                    "source of " + edge_str(u, v) + " is not a player-1 vertex");
  }
  int e = find_edge(u, v);
  if (e < 0) {
    throw GameError(ErrorKind::NoSuchEdge, "no edge " + edge_str(u, v));
  }
  if (outdeg_[u] <= 1) {
    throw GameError(ErrorKind::LastOutedge,
                    "deleting " + edge_str(u, v) + " would leave " +
                        std::to_string(u) + " without out-edges");
  }
  unlink_edge(e);
}

int GameGraph::insert_edge(VertexId u, VertexId v) {
  if (owner_[u] != Owner::Player1) {
    throw GameError(ErrorKind::NotPlayer1Edge,
                    "source of " + edge_str(u, v) + " is not a player-1 vertex");
  }
  if (!alive_[u] || !alive_[v]) {
    throw GameError(ErrorKind::AlreadyDead,
                    "endpoint of " + edge_str(u, v) + " is not alive");
  }
  if (find_edge(u, v) >= 0) {
    throw GameError(ErrorKind::EdgeExists, "edge " + edge_str(u, v) + " exists");
  }
  int e = static_cast<int>(edges_.size());
  edges_.push_back(Edge{u, v, -1, -1, -1, -1, true});
  link_out(e);
  // u is player 1, so the new in-edge belongs to the second group, whose
  // tail is the overall tail.
  link_in(e);
  ++m_alive_;
  return e;
}

int GameGraph::find_edge(VertexId u, VertexId v) const {
  for (int e = out_head_[u]; e >= 0; e = edges_[e].next_out) {
    if (edges_[e].to == v) return e;
  }
  return -1;
}

std::vector<VertexId> GameGraph::out_list(VertexId v) const {
  std::vector<VertexId> r;
  for (auto nb : out(v)) r.push_back(nb.v);
  return r;
}

std::vector<VertexId> GameGraph::in_list(VertexId v) const {
  std::vector<VertexId> r;
  for (auto nb : in(v)) r.push_back(nb.v);
  return r;
}

std::vector<std::pair<VertexId, VertexId>> GameGraph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> r;
  r.reserve(m_alive_);
  for (VertexId v = 0; v < n_; ++v) {
    if (!alive_[v]) continue;
    for (auto nb : out(v)) r.emplace_back(v, nb.v);
  }
  return r;
}

}  // namespace buchi
