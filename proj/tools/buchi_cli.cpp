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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "buchi/attractor.hpp"
#include "buchi/buchi_fast.hpp"
#include "buchi/classical.hpp"
#include "buchi/io.hpp"
#include "buchi/mec.hpp"
#include "buchi/progress_measure.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInvariantError = 2;

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_ids(std::ostream& out, const std::vector<buchi::VertexId>& ids,
               char sep) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out << sep;
    out << ids[i];
  }
  out << '\n';
}

int cmd_solve(const std::string& algo, const std::string& file,
              bool with_strategy, bool check) {
  buchi::GameGraph g = buchi::load_game(file);

  buchi::WinningPartition part;
  if (algo == "classical") {
    part = buchi::solve_classical(g);
  } else if (algo == "fast") {
    part = buchi::solve_fast(g);
  } else {
    if (with_strategy || check) {
      throw buchi::GameError(buchi::ErrorKind::InvalidArgument,
                             "--strategy/--check need classical or fast");
    }
    buchi::ProgressMeasure pm =
        buchi::least_fixpoint(g, buchi::PmOperator::Lift);
    for (buchi::VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!pm[v].is_top()) std::cout << v << '\n';
    }
    return kOk;
  }

  for (buchi::VertexId v : part.w1) std::cout << v << '\n';
  if (with_strategy) {
    for (buchi::VertexId v : part.w1) {
      if (part.strategy1[v] >= 0) {
        std::cout << v << " -> " << part.strategy1[v] << '\n';
      }
    }
  }
  if (check) {
    if (!buchi::verify_buchi_strategy(g, part.w1, part.strategy1)) {
      throw InvariantViolation("strategy certificate rejected");
    }
    std::cout << "# strategy certificate ok\n";
  }
  return kOk;
}

int cmd_mec(const std::string& algo, const std::string& file) {
  buchi::GameGraph g = buchi::load_game(file);
  buchi::MecDecomposition d =
      algo == "naive" ? buchi::naive_mec(g) : buchi::mec_decomposition(g);
  for (const auto& mec : d.mecs) print_ids(std::cout, mec, ' ');
  std::cout << "non-mec:";
  for (buchi::VertexId v : d.non_mec) std::cout << ' ' << v;
  std::cout << '\n';
  return kOk;
}

int cmd_dynamic(const std::string& mode, const std::string& file,
                const std::string& trace_file) {
  buchi::GameGraph g = buchi::load_game(file);
  auto trace = buchi::load_trace(trace_file);
  auto answers = buchi::replay_trace(
      g, trace,
      mode == "decremental" ? buchi::TraceMode::Decremental
                            : buchi::TraceMode::Incremental);
  for (const auto& w1 : answers) print_ids(std::cout, w1, ' ');
  return kOk;
}

int cmd_gen(const std::string& family, int n, std::int64_t m, double p2,
            double buchi_fraction, std::uint64_t seed, const std::string& out) {
  buchi::GameGraph g = family == "trapchain"
                           ? buchi::gen_trap_chain(n, m, seed)
                           : buchi::gen_random(n, m, p2, buchi_fraction, seed);
  std::string text = buchi::render_game(g);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      throw buchi::GameError(buchi::ErrorKind::InvalidArgument,
                             "cannot write " + out);
    }
    f << text;
  }
  return kOk;
}

int cmd_bench(const std::string& suite, const std::string& out) {
  auto rows = buchi::run_bench_suite(suite);
  if (out.empty() || out == "-") {
    buchi::write_bench_csv(std::cout, rows);
  } else {
    std::ofstream f(out);
    if (!f) {
      throw buchi::GameError(buchi::ErrorKind::InvalidArgument,
                             "cannot write " + out);
    }
    buchi::write_bench_csv(f, rows);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for two-player Buchi games and MEC decomposition"};
  app.require_subcommand(1);

  std::string solve_algo = "fast", mec_algo = "fast";
  std::string file, trace_file, mode = "decremental";
  std::string family = "random", out_path, suite = "dense";
  bool with_strategy = false, check = false;
  int n = 10;
  std::int64_t m = 20;
  double p2 = 0.5, buchi_fraction = 0.25;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "Compute the player-1 winning set");
  solve->add_option("--algo", solve_algo, "classical|fast|pm")
      ->check(CLI::IsMember({"classical", "fast", "pm"}));
  solve->add_option("file", file, "game file")->required();
  solve->add_flag("--strategy", with_strategy, "print witness choices");
  solve->add_flag("--check", check, "verify the witness strategy");

  auto* mec = app.add_subcommand("mec", "Maximal end-component decomposition");
  mec->add_option("--algo", mec_algo, "fast|naive")
      ->check(CLI::IsMember({"fast", "naive"}));
  mec->add_option("file", file, "game file")->required();

  auto* dynamic = app.add_subcommand("dynamic", "Replay an update trace");
  dynamic->add_option("--mode", mode, "decremental|incremental")
      ->check(CLI::IsMember({"decremental", "incremental"}));
  dynamic->add_option("file", file, "game file")->required();
  dynamic->add_option("trace", trace_file, "trace file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a game file");
  gen->add_option("--family", family, "random|trapchain")
      ->check(CLI::IsMember({"random", "trapchain"}));
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--m", m, "edge count")->required();
  gen->add_option("--p2", p2, "player-2 vertex fraction");
  gen->add_option("--buchi", buchi_fraction, "Buchi vertex fraction");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--out", out_path, "output path (default stdout)");

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  bench->add_option("--suite", suite, "dense|sparse")
      ->check(CLI::IsMember({"dense", "sparse"}));
  bench->add_option("--out", out_path, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_algo, file, with_strategy, check);
    if (mec->parsed()) return cmd_mec(mec_algo, file);
    if (dynamic->parsed()) return cmd_dynamic(mode, file, trace_file);
    if (gen->parsed()) return cmd_gen(family, n, m, p2, buchi_fraction, seed, out_path);
    if (bench->parsed()) return cmd_bench(suite, out_path);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariantError;
  } catch (const buchi::GameError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariantError;
  }
  return kInputError;
}
