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

#ifndef BUCHI_ORACLE_HPP_
#define BUCHI_ORACLE_HPP_

#include "buchi/classical.hpp"
#include "buchi/game_graph.hpp"
#include "buchi/mec.hpp"

namespace buchi {

/// Ground-truth winning sets by double enumeration of memoryless
/// strategies: v is in w1 iff some player-1 strategy beats every player-2
/// strategy, judged on the cycle of the resulting lasso play. Also
/// recomputes w2 by the dual quantification and verifies that the two
/// sets partition the vertices. Throws TooLarge beyond the guard.
WinningPartition oracle_buchi(const GameGraph& g);

/// Ground-truth MEC decomposition by enumerating every vertex subset and
/// keeping the inclusion-maximal end-components. Requires at most 15
/// vertices; throws TooLarge otherwise.
MecDecomposition oracle_mec(const GameGraph& g);

}  // namespace buchi

#endif  // BUCHI_ORACLE_HPP_
