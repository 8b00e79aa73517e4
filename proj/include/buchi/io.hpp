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

#ifndef BUCHI_IO_HPP_
#define BUCHI_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "buchi/game_graph.hpp"

namespace buchi {

// Game file format (line oriented, whitespace separated, '#' comments):
//
//   buchi-game v1
//   vertices <n>
//   <id> <owner: 1|2> <buchi: 0|1>      n lines, ids 0..n-1 in order
//   edges <m>
//   <u> <v>                             m lines; order fixes in-edge ties
//
// Trace files hold lines `delete <u> <v>`, `insert <u> <v>`, `query`.

/// Parses the game format. Throws SyntaxError with a line number for
/// format problems; build errors (ZeroOutdegree, DuplicateEdge)
/// propagate unchanged.
GameGraph parse_game(const std::string& text);
GameGraph load_game(const std::string& path);

/// Canonical text for a fully alive graph; parse_game(render_game(g))
/// reproduces g including edge order.
std::string render_game(const GameGraph& g);

struct TraceEvent {
  enum class Kind { Delete, Insert, Query };
  Kind kind = Kind::Query;
  VertexId u = -1;
  VertexId v = -1;
};

std::vector<TraceEvent> parse_trace(const std::string& text);
std::vector<TraceEvent> load_trace(const std::string& path);

enum class TraceMode { Decremental, Incremental };

/// Raised when a trace event fails; remembers which one.
class ReplayError : public GameError {
 public:
  ReplayError(ErrorKind kind, std::string msg, int event_index)
      : GameError(kind, std::move(msg)), event_index_(event_index) {}
  int event_index() const { return event_index_; }

 private:
  int event_index_;
};

/// Runs a homogeneous trace through the matching dynamic solver; each
/// Query event appends the current W1. The graph is mutated in place.
/// Throws MixedTrace if the trace does not match the mode, ReplayError
/// for a failing event.
std::vector<std::vector<VertexId>> replay_trace(GameGraph& g,
                                                const std::vector<TraceEvent>& trace,
                                                TraceMode mode);

/// Seeded random game: every vertex gets one mandatory out-edge, the
/// remaining target_m - n edges are drawn uniformly without replacement;
/// round(n * p2_fraction) vertices belong to player 2 and
/// round(n * buchi_fraction) are Buchi, at uniformly random positions.
/// The generator is std::mt19937_64 seeded with `seed`; equal arguments
/// give identical graphs. Throws InfeasibleDensity when target_m > n^2.
GameGraph gen_random(int n, std::int64_t target_m, double p2_fraction,
                     double buchi_fraction, std::uint64_t seed);

/// Adversarial family: a chain of small player-2 traps that the
/// iterative solver peels one per round, next to a dense player-1 blob
/// that keeps every round expensive, padded with random blob edges up to
/// target_m. Forces Theta(n) rounds for solve_classical.
GameGraph gen_trap_chain(int n, std::int64_t target_m, std::uint64_t seed);

struct BenchRow {
  int n = 0;
  std::int64_t m = 0;
  std::string algo;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  std::uint64_t work = 0;
};

/// Runs solve_classical and solve_fast over the named suite ("dense":
/// random m = n^2/4 plus trap chains; "sparse": random m = 2n) and
/// returns one row per (instance, algorithm).
std::vector<BenchRow> run_bench_suite(const std::string& suite);

/// CSV with header n,m,algo,seed,wall_ms,work_counter.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace buchi

#endif  // BUCHI_IO_HPP_
