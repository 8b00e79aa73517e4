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

#include "buchi/progress_measure.hpp"

#include <algorithm>
#include <cassert>

#include "buchi/attractor.hpp"
#include "buchi/classical.hpp"
#include "strategy_space.hpp"

namespace buchi {

PmValue lift_at(const GameGraph& g, const ProgressMeasure& pm, VertexId v) {
  int n = g.vertex_count();
  if (g.is_buchi(v)) {
    if (g.owner(v) == Owner::Player1) {
      for (auto nb : g.out(v)) {
        if (!pm[nb.v].is_top()) return PmValue::finite(0);
      }
      return PmValue::top();
    }
    for (auto nb : g.out(v)) {
      if (pm[nb.v].is_top()) return PmValue::top();
    }
    return PmValue::finite(0);
  }
  bool first = true;
  PmValue best;
  for (auto nb : g.out(v)) {
    PmValue w = pm[nb.v];
    if (first) {
      best = w;
      first = false;
    } else if (g.owner(v) == Owner::Player1 ? w < best : w > best) {
      best = w;
    }
  }
  return best.inc(n);
}

PmValue colift_at(const GameGraph& g, const ProgressMeasure& pm, VertexId v) {
  int n = g.vertex_count();
  bool first = true;
  PmValue best;
  for (auto nb : g.out(v)) {
    PmValue w = pm[nb.v];
    if (first) {
      best = w;
      first = false;
    } else if (g.owner(v) == Owner::Player2 ? w < best : w > best) {
      best = w;
    }
  }
  return g.is_buchi(v) ? best.inc(n) : best;
}

ProgressMeasure least_fixpoint(const GameGraph& g, PmOperator op) {
  int n = g.vertex_count();
  ProgressMeasure cur(n, PmValue::finite(0));
  ProgressMeasure next(n, PmValue::finite(0));
  std::vector<VertexId> alive = g.alive_vertices();
  // Synchronous iteration from the bottom measure; at least one value
  // grows per round, so this ends after at most n*(n+2)+1 rounds.
  while (true) {
    bool changed = false;
    for (VertexId v : alive) {
      next[v] = op == PmOperator::Lift ? lift_at(g, cur, v) : colift_at(g, cur, v);
      assert(next[v] >= cur[v]);
      if (next[v] != cur[v]) changed = true;
    }
    cur = next;
    if (!changed) return cur;
  }
}

// ---------------------------------------------------------------------------
// Decremental solver (Lift side, player-1 edge deletions).

DecrementalSolver::DecrementalSolver(GameGraph& g)
    : g_(&g), n_(g.vertex_count()) {
  pm_.assign(n_, PmValue::finite(0));
  list_head_.assign(n_, -1);
  list_next_.assign(g.edge_id_limit(), -1);
  list_prev_.assign(g.edge_id_limit(), -1);
  in_list_.assign(g.edge_id_limit(), 0);
  in_queue_.assign(n_, 0);

  // Seed from a static solve: top on W2, alternating distance to the
  // Buchi vertices of W1 inside W1 everywhere else.
  WinningPartition part = solve_classical(g);
  std::vector<VertexId> targets;
  for (VertexId v : part.w1) {
    if (g.is_buchi(v)) targets.push_back(v);
  }
  std::vector<int> rank = alternating_ranks_within(g, part.in_w1, targets);
  for (VertexId v = 0; v < n_; ++v) {
    if (!g.alive(v)) continue;
    if (part.in_w1[v]) {
      assert(rank[v] >= 0);
      pm_[v] = PmValue::finite(static_cast<std::uint32_t>(rank[v]));
    } else {
      pm_[v] = PmValue::top();
    }
  }

  for (VertexId x = 0; x < n_; ++x) {
    if (!g.alive(x) || g.owner(x) != Owner::Player1 || pm_[x].is_top()) continue;
    for (auto nb : g.out(x)) {
      bool witness = g.is_buchi(x) ? !pm_[nb.v].is_top()
                                   : pm_[nb.v].inc(n_) == pm_[x];
      if (witness) push_witness(x, nb.edge);
    }
  }
}

void DecrementalSolver::push_witness(VertexId x, int e) {
  list_next_[e] = list_head_[x];
  list_prev_[e] = -1;
  if (list_head_[x] >= 0) list_prev_[list_head_[x]] = e;
  list_head_[x] = e;
  in_list_[e] = 1;
}

void DecrementalSolver::unlink(VertexId x, int e) {
  if (list_prev_[e] >= 0) {
    list_next_[list_prev_[e]] = list_next_[e];
  } else {
    list_head_[x] = list_next_[e];
  }
  if (list_next_[e] >= 0) list_prev_[list_next_[e]] = list_prev_[e];
  in_list_[e] = 0;
}

void DecrementalSolver::enqueue(VertexId v) {
  if (!in_queue_[v]) {
    in_queue_[v] = 1;
    queue_.push_back(v);
  }
}

std::vector<VertexId> DecrementalSolver::delete_edge(VertexId u, VertexId v) {
  int e = -1;
  if (g_->owner(u) != Owner::Player1) {
    throw GameError(ErrorKind::NotPlayer1Edge, "source is not player 1");
  }
  e = g_->find_edge(u, v);
  if (e < 0) throw GameError(ErrorKind::NoSuchEdge, "no such edge");
  g_->delete_edge(u, v);  // throws LastOutedge when out_degree(u) == 1

  if (in_list_[e]) unlink(u, e);
  if (!pm_[u].is_top()) {
    enqueue(u);
    drain();
  }
  return winning1();
}

void DecrementalSolver::rescan_player1(VertexId x) {
  PmValue old = pm_[x];
  if (g_->is_buchi(x)) {
    // An empty witness list means every successor is top.
    pm_[x] = PmValue::top();
  } else {
    PmValue best = PmValue::top();
    for (auto nb : g_->out(x)) best = std::min(best, pm_[nb.v]);
    pm_[x] = best.inc(n_);
    if (!pm_[x].is_top()) {
      for (auto nb : g_->out(x)) {
        if (pm_[nb.v].inc(n_) == pm_[x]) push_witness(x, nb.edge);
      }
    }
  }
  assert(pm_[x] > old);
  (void)old;
}

void DecrementalSolver::propagate_from(VertexId x) {
  PmValue px = pm_[x];
  for (auto nb : g_->in(x)) {
    VertexId w = nb.v;
    if (pm_[w].is_top()) continue;
    if (g_->owner(w) == Owner::Player1) {
      if (!g_->is_buchi(w)) {
        if (in_list_[nb.edge]) unlink(w, nb.edge);
        enqueue(w);
      } else if (px.is_top()) {
        if (in_list_[nb.edge]) unlink(w, nb.edge);
        if (list_head_[w] < 0) {
          pm_[w] = PmValue::top();
          enqueue(w);
        }
      }
    } else {
      if (!g_->is_buchi(w)) {
        PmValue cand = px.inc(n_);
        if (cand > pm_[w]) {
          pm_[w] = cand;
          enqueue(w);
        }
      } else if (px.is_top()) {
        pm_[w] = PmValue::top();
        enqueue(w);
      }
    }
  }
}

void DecrementalSolver::drain() {
  while (queue_head_ < queue_.size()) {
    VertexId x = queue_[queue_head_++];
    in_queue_[x] = 0;
    if (g_->owner(x) == Owner::Player1) {
      if (pm_[x].is_top()) {
        // Set to top at a propagation site; spread it from here.
        propagate_from(x);
        continue;
      }
      if (list_head_[x] >= 0) continue;  // still has a witness
      rescan_player1(x);
      propagate_from(x);
    } else {
      // Player-2 values are updated at the site that enqueues them.
      propagate_from(x);
    }
  }
  queue_.clear();
  queue_head_ = 0;
}

std::vector<VertexId> DecrementalSolver::winning1() const {
  std::vector<VertexId> w1;
  for (VertexId v = 0; v < n_; ++v) {
    if (g_->alive(v) && !pm_[v].is_top()) w1.push_back(v);
  }
  return w1;
}

// ---------------------------------------------------------------------------
// Incremental solver (coLift side, player-1 edge insertions).

IncrementalSolver::IncrementalSolver(GameGraph& g)
    : g_(&g), n_(g.vertex_count()) {
  pm_.assign(n_, PmValue::finite(0));
  list_head_.assign(n_, -1);
  list_next_.assign(g.edge_id_limit(), -1);
  list_prev_.assign(g.edge_id_limit(), -1);
  in_list_.assign(g.edge_id_limit(), 0);
  in_queue_.assign(n_, 0);

  // From the all-zero measure every Buchi vertex lifts to 1; set those,
  // build the witness lists against the seeded measure, then push the
  // seed increases through the normal machinery.
  std::vector<VertexId> seeds = g.buchi_vertices();
  for (VertexId b : seeds) pm_[b] = PmValue::finite(0).inc(n_);
  for (VertexId x = 0; x < n_; ++x) {
    if (!g.alive(x) || g.owner(x) != Owner::Player2) continue;
    for (auto nb : g.out(x)) {
      PmValue target = g.is_buchi(x) ? pm_[nb.v].inc(n_) : pm_[nb.v];
      if (target == pm_[x]) push_witness(x, nb.edge);
    }
  }
  for (VertexId b : seeds) propagate_from(b);
  drain();
}

void IncrementalSolver::push_witness(VertexId x, int e) {
  list_next_[e] = list_head_[x];
  list_prev_[e] = -1;
  if (list_head_[x] >= 0) list_prev_[list_head_[x]] = e;
  list_head_[x] = e;
  in_list_[e] = 1;
}

void IncrementalSolver::unlink(VertexId x, int e) {
  if (list_prev_[e] >= 0) {
    list_next_[list_prev_[e]] = list_next_[e];
  } else {
    list_head_[x] = list_next_[e];
  }
  if (list_next_[e] >= 0) list_prev_[list_next_[e]] = list_prev_[e];
  in_list_[e] = 0;
}

void IncrementalSolver::enqueue(VertexId v) {
  if (!in_queue_[v]) {
    in_queue_[v] = 1;
    queue_.push_back(v);
  }
}

void IncrementalSolver::grow_edge_arrays() {
  std::size_t need = static_cast<std::size_t>(g_->edge_id_limit());
  if (list_next_.size() < need) {
    list_next_.resize(need, -1);
    list_prev_.resize(need, -1);
    in_list_.resize(need, 0);
  }
}

std::vector<VertexId> IncrementalSolver::insert_edge(VertexId u, VertexId v) {
  if (g_->owner(u) != Owner::Player1) {
    throw GameError(ErrorKind::NotPlayer1Edge, "source is not player 1");
  }
  g_->insert_edge(u, v);  // throws EdgeExists on a duplicate
  grow_edge_arrays();

  if (!pm_[u].is_top()) {
    PmValue cand = g_->is_buchi(u) ? pm_[v].inc(n_) : pm_[v];
    if (cand > pm_[u]) {
      pm_[u] = cand;
      enqueue(u);
      drain();
    }
  }
  return winning1();
}

void IncrementalSolver::rescan_player2(VertexId x) {
  PmValue old = pm_[x];
  PmValue best = PmValue::top();
  for (auto nb : g_->out(x)) best = std::min(best, pm_[nb.v]);
  pm_[x] = g_->is_buchi(x) ? best.inc(n_) : best;
  if (!pm_[x].is_top()) {
    for (auto nb : g_->out(x)) {
      PmValue target = g_->is_buchi(x) ? pm_[nb.v].inc(n_) : pm_[nb.v];
      if (target == pm_[x]) push_witness(x, nb.edge);
    }
  }
  assert(pm_[x] > old);
  (void)old;
}

void IncrementalSolver::propagate_from(VertexId x) {
  PmValue px = pm_[x];
  for (auto nb : g_->in(x)) {
    VertexId w = nb.v;
    if (pm_[w].is_top()) continue;
    if (g_->owner(w) == Owner::Player2) {
      if (in_list_[nb.edge]) unlink(w, nb.edge);
      enqueue(w);
    } else {
      PmValue cand = g_->is_buchi(w) ? px.inc(n_) : px;
      if (cand > pm_[w]) {
        pm_[w] = cand;
        enqueue(w);
      }
    }
  }
}

void IncrementalSolver::drain() {
  while (queue_head_ < queue_.size()) {
    VertexId x = queue_[queue_head_++];
    in_queue_[x] = 0;
    if (g_->owner(x) == Owner::Player2) {
      if (pm_[x].is_top()) {
        propagate_from(x);
        continue;
      }
      if (list_head_[x] >= 0) continue;
      rescan_player2(x);
      propagate_from(x);
    } else {
      propagate_from(x);
    }
  }
  queue_.clear();
  queue_head_ = 0;
}

std::vector<VertexId> IncrementalSolver::winning1() const {
  std::vector<VertexId> w1;
  for (VertexId v = 0; v < n_; ++v) {
    if (g_->alive(v) && pm_[v].is_top()) w1.push_back(v);
  }
  return w1;
}

std::vector<VertexId> IncrementalSolver::winning2() const {
  std::vector<VertexId> w2;
  for (VertexId v = 0; v < n_; ++v) {
    if (g_->alive(v) && !pm_[v].is_top()) w2.push_back(v);
  }
  return w2;
}

// ---------------------------------------------------------------------------

PmValue maxvisit_oracle(const GameGraph& g, VertexId v) {
  internal::StrategySpace p2(g, Owner::Player2);
  internal::StrategySpace p1(g, Owner::Player1);
  if (p1.count() * p2.count() > 1e6) {
    throw GameError(ErrorKind::TooLarge, "strategy space exceeds the guard");
  }

  int n = g.vertex_count();
  std::vector<VertexId> succ(n, -1);
  std::vector<int> position(n);
  std::vector<VertexId> path;
  constexpr int kInfinite = -1;

  // Buchi visits along the lasso from v under the fixed successor map;
  // kInfinite when the cycle contains a Buchi vertex.
  auto play_count = [&]() {
    std::fill(position.begin(), position.end(), -1);
    path.clear();
    VertexId cur = v;
    while (position[cur] < 0) {
      position[cur] = static_cast<int>(path.size());
      path.push_back(cur);
      cur = succ[cur];
    }
    int cycle_start = position[cur];
    int count = 0;
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      if (!g.is_buchi(path[i])) continue;
      if (i >= cycle_start) return kInfinite;
      ++count;
    }
    return count;
  };

  bool best_set = false;
  int best = 0;
  p2.reset(succ);
  do {
    bool infinite = false;
    int worst = 0;
    p1.reset(succ);
    do {
      int c = play_count();
      if (c == kInfinite) {
        infinite = true;
        break;
      }
      worst = std::max(worst, c);
    } while (p1.next(succ));
    if (!infinite && (!best_set || worst < best)) {
      best_set = true;
      best = worst;
    }
  } while (p2.next(succ));

  if (!best_set) return PmValue::top();
  return PmValue::finite(static_cast<std::uint32_t>(best));
}

}  // namespace buchi
