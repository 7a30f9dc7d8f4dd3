// Copyright 2026 The Portfolio Abstraction Authors.
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

#ifndef PORTFOLIO_EQUILIBRIUM_H_
#define PORTFOLIO_EQUILIBRIUM_H_

#include <span>

#include "portfolio/matrix_game.h"

namespace portfolio::equilibrium {

struct EquilibriumResult {
  // Game value u* for the row player.
  double value = 0.0;
  MixedStrategy row_strategy;
  MixedStrategy column_strategy;
};

// Solves the row player's maximin LP
//   max v  s.t.  x^T U e_j >= v for every column j,  x in the simplex.
// The column player's equilibrium strategy is read from the multipliers of
// the column constraints. Deterministic for identical input.
EquilibriumResult GameValue(const MatrixGame& game);

struct BestResponseResult {
  int action = 0;
  // Expected utility of the row player when `action` is played.
  double value = 0.0;
};

// Pure best response of `player` against the opponent's mixed strategy: the
// utility-maximizing row for the row player, the utility-minimizing column
// for the column player. Ties go to the lowest index.
BestResponseResult BestResponse(const MatrixGame& game,
                                const MixedStrategy& opponent, Player player);

// u* minus the worst-case utility of `row_strategy`; zero exactly for
// maximin strategies.
double ExploitabilityOf(const MatrixGame& game, const MixedStrategy& row_strategy);
double ExploitabilityOf(const MatrixGame& game, const MixedStrategy& row_strategy,
                        double game_value);

}  // namespace portfolio::equilibrium

#endif  // PORTFOLIO_EQUILIBRIUM_H_
