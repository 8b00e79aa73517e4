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

#ifndef BUCHI_PROGRESS_MEASURE_HPP_
#define BUCHI_PROGRESS_MEASURE_HPP_

#include <cstdint>
#include <limits>
#include <vector>

#include "buchi/game_graph.hpp"

namespace buchi {

/// Measure value: an integer in [0, n] or the top element. Top compares
/// greater than every integer, and the successor saturates: inc(k) = k+1
/// for k < n, inc(n) = top, inc(top) = top.
struct PmValue {
  std::uint32_t raw = 0;

  static constexpr std::uint32_t kTopRaw =
      std::numeric_limits<std::uint32_t>::max();

  static PmValue top() { return {kTopRaw}; }
  static PmValue finite(std::uint32_t k) { return {k}; }

  bool is_top() const { return raw == kTopRaw; }
  std::uint32_t value() const { return raw; }

  PmValue inc(int n) const {
    if (is_top() || raw >= static_cast<std::uint32_t>(n)) return top();
    return {raw + 1};
  }

  friend bool operator==(PmValue a, PmValue b) = default;
  friend auto operator<=>(PmValue a, PmValue b) { return a.raw <=> b.raw; }
};

using ProgressMeasure = std::vector<PmValue>;

/// One application of the Lift operator at v: Buchi player-1 vertices are
/// top iff all successors are top (else 0), Buchi player-2 vertices top
/// iff some successor is top (else 0), non-Buchi vertices take
/// min (player 1) / max (player 2) over successors plus one.
PmValue lift_at(const GameGraph& g, const ProgressMeasure& pm, VertexId v);

/// One application of the dual coLift operator at v: player-2 vertices
/// take the min over successors, player-1 vertices the max, and Buchi
/// vertices add one on top.
PmValue colift_at(const GameGraph& g, const ProgressMeasure& pm, VertexId v);

enum class PmOperator { Lift, CoLift };

/// Least fixpoint by synchronous iteration from the all-zero measure.
/// Every value is non-decreasing across rounds. The non-top support is
/// W1 for Lift and W2 for coLift.
ProgressMeasure least_fixpoint(const GameGraph& g, PmOperator op);

/// Maintains the Lift least fixpoint of a graph under player-1 edge
/// deletions. Holds a reference to the graph and mutates it; W1 is the
/// non-top support of the measure. Witness lists are intrusive over edge
/// ids: for a Buchi player-1 vertex the successors with non-top measure,
/// for a non-Buchi player-1 vertex the successors w with
/// pm(x) = pm(w) + 1. Vertices at top are frozen and never reprocessed.
class DecrementalSolver {
 public:
  explicit DecrementalSolver(GameGraph& g);

  /// Deletes the player-1 edge (u, v), restores the least fixpoint and
  /// returns the new W1 (sorted). Throws NotPlayer1Edge, NoSuchEdge or
  /// LastOutedge before any mutation.
  std::vector<VertexId> delete_edge(VertexId u, VertexId v);

  const ProgressMeasure& measure() const { return pm_; }
  std::vector<VertexId> winning1() const;
  const GameGraph& graph() const { return *g_; }

 private:
  void rescan_player1(VertexId x);
  void propagate_from(VertexId x);
  void enqueue(VertexId v);
  void drain();
  void unlink(VertexId owner_vertex, int edge);
  void push_witness(VertexId owner_vertex, int edge);
  void clear_list(VertexId v);

  GameGraph* g_;
  int n_;
  ProgressMeasure pm_;
  std::vector<int> list_head_;
  std::vector<int> list_next_, list_prev_;
  std::vector<std::uint8_t> in_list_;
  std::vector<VertexId> queue_;
  std::size_t queue_head_ = 0;
  std::vector<std::uint8_t> in_queue_;
};

/// Maintains the coLift least fixpoint under player-1 edge insertions.
/// W2 is the non-top support; winning1() is its complement. Witness
/// lists live on player-2 vertices: for a non-Buchi one the successors
/// with equal measure, for a Buchi one the successors w with
/// pm(x) = pm(w) + 1.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(GameGraph& g);

  /// Inserts the player-1 edge (u, v), restores the least fixpoint and
  /// returns the new W1 (sorted). Throws NotPlayer1Edge or EdgeExists.
  std::vector<VertexId> insert_edge(VertexId u, VertexId v);

  const ProgressMeasure& measure() const { return pm_; }
  std::vector<VertexId> winning1() const;  // complement of the support
  std::vector<VertexId> winning2() const;
  const GameGraph& graph() const { return *g_; }

 private:
  void rescan_player2(VertexId x);
  void propagate_from(VertexId x);
  void enqueue(VertexId v);
  void drain();
  void unlink(VertexId owner_vertex, int edge);
  void push_witness(VertexId owner_vertex, int edge);
  void clear_list(VertexId v);
  void grow_edge_arrays();

  GameGraph* g_;
  int n_;
  ProgressMeasure pm_;
  std::vector<int> list_head_;
  std::vector<int> list_next_, list_prev_;
  std::vector<std::uint8_t> in_list_;
  std::vector<VertexId> queue_;
  std::size_t queue_head_ = 0;
  std::vector<std::uint8_t> in_queue_;
};

/// Worst-case number of Buchi visits player 2 concedes from v: the min
/// over player-2 memoryless strategies of the max over player-1
/// memoryless strategies of the Buchi visits along the resulting play,
/// where a Buchi vertex on the play's cycle counts as infinitely many.
/// Returns top when the count is infinite for every player-2 strategy
/// (v winning for player 1). Exhaustive; throws TooLarge when the
/// strategy space exceeds the enumeration guard.
PmValue maxvisit_oracle(const GameGraph& g, VertexId v);

}  // namespace buchi

#endif  // BUCHI_PROGRESS_MEASURE_HPP_
