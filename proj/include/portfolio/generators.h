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

#ifndef PORTFOLIO_GENERATORS_H_
#define PORTFOLIO_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "portfolio/matrix_game.h"
#include "portfolio/random.h"

namespace portfolio::games {

// Payoffs drawn i.i.d. from the integers [-1e7, 1e7], then normalized.
MatrixGame RandomGame(int rows, int cols, std::uint64_t seed);
MatrixGame RandomGame(int rows, int cols, Rng& rng);

// Colonel Blotto. Actions are the compositions of `coins` into `fields`
// ordered buckets, in ascending lexicographic order ((0,..,0,C) first).
// U[i][j] = sign(#fields where i has more coins - #fields where j has more),
// then normalized.
MatrixGame Blotto(int fields, int coins);
std::vector<std::vector<int>> BlottoAllocations(int fields, int coins);

// Goofspiel with three cards and point cards revealed in the order 3, 2, 1.
// Full normal form with 24 pure strategies per player. Strategy index
//   8 * (first_card - 1) + 4 * w + 2 * l + d
// where w, l, d select the second card after a win, loss or draw of round
// one (0 = lower remaining card, 1 = higher). The third card is forced.
// Payoff +1 / 0 / -1 by total points won.
MatrixGame Goofspiel3();

// Kuhn poker with ante 1 and bet size `bet`, expectation over the six deals.
// Row strategies: per card J, Q, K (J most significant, base 3) one of
// {0: check then fold, 1: check then call, 2: bet}. Column strategies: per
// card (base 4) 2 * respond_to_bet + respond_to_check with
// respond_to_bet in {0: fold, 1: call} and respond_to_check in
// {0: check, 1: bet}. The raw matrix is divided by its largest absolute entry.
MatrixGame KuhnPoker(double bet);
// Same game before scaling.
MatrixGame KuhnPokerRaw(double bet);

}  // namespace portfolio::games

#endif  // PORTFOLIO_GENERATORS_H_
