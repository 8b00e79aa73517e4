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

#ifndef BUCHI_SRC_STRATEGY_SPACE_HPP_
#define BUCHI_SRC_STRATEGY_SPACE_HPP_

#include <vector>

#include "buchi/game_graph.hpp"

namespace buchi::internal {

/// Odometer over the memoryless strategies of one player: `successor[v]`
/// holds the current choice for every alive vertex of that player (and
/// is untouched elsewhere). Exhaustive-enumeration helper for the desk
/// oracles only.
class StrategySpace {
 public:
  StrategySpace(const GameGraph& g, Owner player) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.alive(v) && g.owner(v) == player) {
        vertices_.push_back(v);
        options_.push_back(g.out_list(v));
      }
    }
    cursor_.assign(vertices_.size(), 0);
  }

  double count() const {
    double c = 1.0;
    for (const auto& o : options_) c *= static_cast<double>(o.size());
    return c;
  }

  void reset(std::vector<VertexId>& successor) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      successor[vertices_[k]] = options_[k][0];
    }
  }

  /// Advances to the next strategy; false after the last one.
  bool next(std::vector<VertexId>& successor) {
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (++cursor_[k] < options_[k].size()) {
        successor[vertices_[k]] = options_[k][cursor_[k]];
        return true;
      }
      cursor_[k] = 0;
      successor[vertices_[k]] = options_[k][0];
    }
    return false;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::vector<VertexId>> options_;
  std::vector<std::size_t> cursor_;
};

}  // namespace buchi::internal

#endif  // BUCHI_SRC_STRATEGY_SPACE_HPP_
