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

#ifndef BUCHI_SOLVER_INTERNAL_HPP_
#define BUCHI_SOLVER_INTERNAL_HPP_

#include "buchi/attractor.hpp"
#include "buchi/classical.hpp"
#include "buchi/game_graph.hpp"

namespace buchi::internal {

/// Assembles a WinningPartition from the final scratch graph of a Buchi
/// solver run: w1 = survivors, w2 = removed, strategy from the final
/// player-1 attractor towards the surviving Buchi set.
WinningPartition partition_from_survivors(const GameGraph& original,
                                          const GameGraph& final_graph,
                                          const AttractorResult& final_reach);

}  // namespace buchi::internal

#endif  // BUCHI_SOLVER_INTERNAL_HPP_
