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

#include "buchi/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "buchi/buchi_fast.hpp"
#include "buchi/classical.hpp"
#include "buchi/progress_measure.hpp"

namespace buchi {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw GameError(ErrorKind::SyntaxError,
                  "line " + std::to_string(line) + ": " + what);
}

// Splits into whitespace-separated tokens, dropping comment and blank
// lines; keeps 1-based line numbers for messages.
struct TokenLine {
  int number;
  std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
  std::vector<TokenLine> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.front() == '#') continue;
    std::istringstream ls(raw);
    TokenLine tl{number, {}};
    std::string tok;
    while (ls >> tok) tl.tokens.push_back(tok);
    if (!tl.tokens.empty()) lines.push_back(std::move(tl));
  }
  return lines;
}

long long parse_int(const TokenLine& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    syntax_error(line.number, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

GameGraph parse_game(const std::string& text) {
  auto lines = tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const TokenLine& {
    if (at >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back().number;
      syntax_error(last, std::string("unexpected end of file, expected ") + what);
    }
    return lines[at++];
  };

  {
    const TokenLine& header = need("header");
    if (header.tokens != std::vector<std::string>{"buchi-game", "v1"}) {
      syntax_error(header.number, "expected header 'buchi-game v1'");
    }
  }
  const TokenLine& vline = need("vertex count");
  if (vline.tokens.size() != 2 || vline.tokens[0] != "vertices") {
    syntax_error(vline.number, "expected 'vertices <n>'");
  }
  long long n = parse_int(vline, vline.tokens[1]);
  if (n < 0 || n > (1 << 26)) syntax_error(vline.number, "bad vertex count");

  std::vector<VertexSpec> vertices(n);
  for (long long i = 0; i < n; ++i) {
    const TokenLine& line = need("vertex record");
    if (line.tokens.size() != 3) {
      syntax_error(line.number, "expected '<id> <owner> <buchi>'");
    }
    long long id = parse_int(line, line.tokens[0]);
    long long owner = parse_int(line, line.tokens[1]);
    long long buchi = parse_int(line, line.tokens[2]);
    if (id != i) syntax_error(line.number, "vertex ids must be 0..n-1 in order");
    if (owner != 1 && owner != 2) syntax_error(line.number, "owner must be 1 or 2");
    if (buchi != 0 && buchi != 1) syntax_error(line.number, "buchi must be 0 or 1");
    vertices[i] = {owner == 1 ? Owner::Player1 : Owner::Player2, buchi == 1};
  }

  const TokenLine& eline = need("edge count");
  if (eline.tokens.size() != 2 || eline.tokens[0] != "edges") {
    syntax_error(eline.number, "expected 'edges <m>'");
  }
  long long m = parse_int(eline, eline.tokens[1]);
  if (m < 0) syntax_error(eline.number, "bad edge count");

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    const TokenLine& line = need("edge record");
    if (line.tokens.size() != 2) syntax_error(line.number, "expected '<u> <v>'");
    long long u = parse_int(line, line.tokens[0]);
    long long v = parse_int(line, line.tokens[1]);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      syntax_error(line.number, "edge endpoint out of range");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (at != lines.size()) {
    syntax_error(lines[at].number, "trailing content after edge list");
  }
  return GameGraph::build(vertices, edges);
}

GameGraph load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw GameError(ErrorKind::InvalidArgument, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string render_game(const GameGraph& g) {
  std::ostringstream out;
  out << "buchi-game v1\n";
  out << "vertices " << g.vertex_count() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << v << ' ' << (g.owner(v) == Owner::Player1 ? 1 : 2) << ' '
        << (g.is_buchi(v) ? 1 : 0) << "\n";
  }
  auto edges = g.edge_list();
  out << "edges " << edges.size() << "\n";
  for (auto [u, v] : edges) out << u << ' ' << v << "\n";
  return out.str();
}

std::vector<TraceEvent> parse_trace(const std::string& text) {
  std::vector<TraceEvent> trace;
  for (const TokenLine& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "query") {
      if (t.size() != 1) syntax_error(line.number, "'query' takes no arguments");
      trace.push_back({TraceEvent::Kind::Query, -1, -1});
    } else if (t[0] == "delete" || t[0] == "insert") {
      if (t.size() != 3) syntax_error(line.number, "expected '<op> <u> <v>'");
      TraceEvent ev;
      ev.kind = t[0] == "delete" ? TraceEvent::Kind::Delete
                                 : TraceEvent::Kind::Insert;
      ev.u = static_cast<VertexId>(parse_int(line, t[1]));
      ev.v = static_cast<VertexId>(parse_int(line, t[2]));
      trace.push_back(ev);
    } else {
      syntax_error(line.number, "unknown trace event '" + t[0] + "'");
    }
  }
  return trace;
}

std::vector<TraceEvent> load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw GameError(ErrorKind::InvalidArgument, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_trace(buf.str());
}

std::vector<std::vector<VertexId>> replay_trace(GameGraph& g,
                                                const std::vector<TraceEvent>& trace,
                                                TraceMode mode) {
  TraceEvent::Kind banned = mode == TraceMode::Decremental
                                ? TraceEvent::Kind::Insert
                                : TraceEvent::Kind::Delete;
  for (const TraceEvent& ev : trace) {
    if (ev.kind == banned) {
      throw GameError(ErrorKind::MixedTrace,
                      "trace event does not match the replay mode");
    }
  }

  std::vector<std::vector<VertexId>> answers;
  auto run = [&](auto& solver) {
    for (int i = 0; i < static_cast<int>(trace.size()); ++i) {
      const TraceEvent& ev = trace[i];
      try {
        if (ev.kind == TraceEvent::Kind::Query) {
          answers.push_back(solver.winning1());
        } else if (ev.kind == TraceEvent::Kind::Delete) {
          if constexpr (requires { solver.delete_edge(ev.u, ev.v); }) {
            solver.delete_edge(ev.u, ev.v);
          }
        } else {
          if constexpr (requires { solver.insert_edge(ev.u, ev.v); }) {
            solver.insert_edge(ev.u, ev.v);
          }
        }
      } catch (const GameError& e) {
        throw ReplayError(e.kind(),
                          "trace event " + std::to_string(i) + ": " + e.what(),
                          i);
      }
    }
  };

  if (mode == TraceMode::Decremental) {
    DecrementalSolver solver(g);
    run(solver);
  } else {
    IncrementalSolver solver(g);
    run(solver);
  }
  return answers;
}

namespace {

// Membership structure for sampled edges: a flat bitset when n^2 bits
// are affordable, a sorted probe into std::unordered_set otherwise.
class EdgeSet {
 public:
  explicit EdgeSet(int n) : n_(n) {
    std::uint64_t cells = (static_cast<std::uint64_t>(n) * n + 63) / 64;
    if (cells <= (1u << 22)) bits_.assign(cells, 0);  // up to 32 MiB
  }
  bool insert(VertexId u, VertexId v) {
    std::uint64_t key = static_cast<std::uint64_t>(u) * n_ + v;
    if (!bits_.empty()) {
      std::uint64_t mask = 1ull << (key & 63);
      if (bits_[key >> 6] & mask) return false;
      bits_[key >> 6] |= mask;
      return true;
    }
    return set_.insert(key).second;
  }

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> set_;
};

std::vector<VertexSpec> sample_vertex_specs(int n, double p2_fraction,
                                            double buchi_fraction,
                                            std::mt19937_64& rng) {
  std::vector<VertexSpec> specs(n);
  auto assign = [&](auto set, double fraction) {
    int count = static_cast<int>(std::llround(fraction * n));
    count = std::max(0, std::min(n, count));
    std::vector<VertexId> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    for (int i = 0; i < count; ++i) set(specs[ids[i]]);
  };
  assign([](VertexSpec& s) { s.owner = Owner::Player2; }, p2_fraction);
  assign([](VertexSpec& s) { s.buchi = true; }, buchi_fraction);
  return specs;
}

}  // namespace

GameGraph gen_random(int n, std::int64_t target_m, double p2_fraction,
                     double buchi_fraction, std::uint64_t seed) {
  if (n <= 0) throw GameError(ErrorKind::InvalidArgument, "n must be positive");
  if (target_m < n) {
    throw GameError(ErrorKind::InvalidArgument, "target_m must be at least n");
  }
  std::int64_t possible = static_cast<std::int64_t>(n) * n;
  if (target_m > possible) {
    throw GameError(ErrorKind::InfeasibleDensity,
                    "target_m exceeds n^2 = " + std::to_string(possible));
  }

  std::mt19937_64 rng(seed);
  std::vector<VertexSpec> specs =
      sample_vertex_specs(n, p2_fraction, buchi_fraction, rng);

  std::uniform_int_distribution<VertexId> pick(0, n - 1);
  EdgeSet seen(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(target_m);
  for (VertexId v = 0; v < n; ++v) {
    VertexId t = pick(rng);
    seen.insert(v, t);
    edges.emplace_back(v, t);
  }
  if (target_m > 2 * (possible / 3)) {
    // Too dense for rejection sampling: shuffle the missing pairs.
    std::vector<std::pair<VertexId, VertexId>> rest;
    rest.reserve(possible - n);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (seen.insert(u, v)) rest.emplace_back(u, v);
      }
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    edges.insert(edges.end(), rest.begin(),
                 rest.begin() + (target_m - static_cast<std::int64_t>(n)));
  } else {
    while (static_cast<std::int64_t>(edges.size()) < target_m) {
      VertexId u = pick(rng);
      VertexId v = pick(rng);
      if (seen.insert(u, v)) edges.emplace_back(u, v);
    }
  }
  return GameGraph::build(specs, edges);
}

GameGraph gen_trap_chain(int n, std::int64_t target_m, std::uint64_t seed) {
  if (n < 12) {
    throw GameError(ErrorKind::InvalidArgument, "trap chain needs n >= 12");
  }
  std::int64_t possible_floor = 2 * static_cast<std::int64_t>(n);
  if (target_m < possible_floor) {
    throw GameError(ErrorKind::InvalidArgument,
                    "trap chain needs target_m >= 2n");
  }

  // Layout: t | shells (u_j, w_j player 1; d_j player 2 Buchi) | blob.
  // Shell j survives exactly j rounds of trap peeling: u_j holds an edge
  // into the previous shell's Buchi vertex and a 2-cycle with w_j, and
  // d_j dives into u_j. The blob is a dense player-1 region around a
  // Buchi hub, winning for player 1 and never removed.
  int shells = n / 6;
  int blob_start = 1 + 3 * shells;
  int blob_size = n - blob_start;
  VertexId hub = static_cast<VertexId>(blob_start);

  std::vector<VertexSpec> specs(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  specs[0] = {Owner::Player2, false};  // t
  edges.emplace_back(0, 0);
  auto u_of = [&](int j) { return static_cast<VertexId>(1 + 3 * j); };
  auto w_of = [&](int j) { return static_cast<VertexId>(2 + 3 * j); };
  auto d_of = [&](int j) { return static_cast<VertexId>(3 + 3 * j); };
  for (int j = 0; j < shells; ++j) {
    specs[u_of(j)] = {Owner::Player1, false};
    specs[w_of(j)] = {Owner::Player1, false};
    specs[d_of(j)] = {Owner::Player2, true};
    edges.emplace_back(u_of(j), w_of(j));
    edges.emplace_back(u_of(j), j == 0 ? 0 : d_of(j - 1));
    edges.emplace_back(w_of(j), u_of(j));
    edges.emplace_back(d_of(j), u_of(j));
  }
  specs[hub] = {Owner::Player1, true};
  for (int k = 1; k < blob_size; ++k) {
    specs[hub + k] = {Owner::Player1, false};
    edges.emplace_back(hub + k, hub);
  }
  edges.emplace_back(hub, blob_size > 1 ? hub + 1 : hub);

  std::mt19937_64 rng(seed);
  EdgeSet seen(n);
  for (auto [u, v] : edges) seen.insert(u, v);
  std::int64_t blob_pairs =
      static_cast<std::int64_t>(blob_size) * blob_size;
  std::int64_t want = std::min(target_m, blob_pairs / 2);
  std::uniform_int_distribution<VertexId> pick(hub, n - 1);
  while (static_cast<std::int64_t>(edges.size()) < want) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (seen.insert(u, v)) edges.emplace_back(u, v);
  }
  return GameGraph::build(specs, edges);
}

std::vector<BenchRow> run_bench_suite(const std::string& suite) {
  struct Instance {
    GameGraph graph;
    std::uint64_t seed;
  };
  std::vector<Instance> instances;
  if (suite == "dense") {
    for (int n : {500, 1000, 2000}) {
      std::int64_t m = static_cast<std::int64_t>(n) * n / 4;
      instances.push_back({gen_random(n, m, 0.5, 0.25, 7000 + n), 7000u + n});
      instances.push_back({gen_trap_chain(n, m, 9000 + n), 9000u + n});
    }
  } else if (suite == "sparse") {
    for (int n : {1000, 5000, 10000}) {
      std::int64_t m = 2 * static_cast<std::int64_t>(n);
      instances.push_back({gen_random(n, m, 0.5, 0.25, 7000 + n), 7000u + n});
      instances.push_back({gen_trap_chain(n, m, 9000 + n), 9000u + n});
    }
  } else {
    throw GameError(ErrorKind::InvalidArgument, "unknown suite " + suite);
  }

  std::vector<BenchRow> rows;
  for (const Instance& inst : instances) {
    const GameGraph& g = inst.graph;
    auto timed = [&](const std::string& algo, auto&& solve) {
      auto start = std::chrono::steady_clock::now();
      std::uint64_t work = solve();
      auto stop = std::chrono::steady_clock::now();
      BenchRow row;
      row.n = g.vertex_count();
      row.m = g.edge_count();
      row.algo = algo;
      row.seed = inst.seed;
      row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.work = work;
      rows.push_back(row);
    };
    timed("classical", [&] {
      ClassicalStats stats;
      solve_classical(g, &stats);
      return stats.work;
    });
    timed("fast", [&] {
      FastStats stats;
      solve_fast(g, &stats);
      return stats.work;
    });
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,m,algo,seed,wall_ms,work_counter\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.m << ',' << r.algo << ',' << r.seed << ','
        << r.wall_ms << ',' << r.work << "\n";
  }
}

}  // namespace buchi
