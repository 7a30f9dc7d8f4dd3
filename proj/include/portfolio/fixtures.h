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

#ifndef PORTFOLIO_FIXTURES_H_
#define PORTFOLIO_FIXTURES_H_

#include <string>
#include <vector>

#include "portfolio/matrix_game.h"

namespace portfolio::games {

// Small hand-built games used as counterexamples and sanity anchors. All are
// returned in raw (unnormalized) units.

// [[1,0,1/2],[0,1,1/2],[0,0,1/2]]: column player's equilibrium (0,0,1) is a
// bad pessimistic portfolio.
MatrixGame Theorem2Game();
// [[1,d,1/2],[d,1,1/2],[0,0,1/2]] for d in (0, 1/2).
MatrixGame Theorem3Game(double delta);
// 2x4 game where growing the best size-2 pure portfolio hurts.
MatrixGame IncrementalGame();
// -I_n.
MatrixGame NegIdentityGame(int n);
// [[-I_n, 0], [0, 1]]: full rank, yet one column is a perfect portfolio.
MatrixGame RankGame(int n);
MatrixGame RockPaperScissors();
MatrixGame MatchingPennies();

struct FixtureParams {
  double delta = 0.1;
  int n = 3;
};

// Lookup by name: theorem_2, theorem_3, incremental, neg_identity, rank_game,
// rps, matching_pennies. Throws LookupError for unknown names and
// ParameterError for invalid parameters.
MatrixGame Fixture(const std::string& name, const FixtureParams& params = {});
std::vector<std::string> FixtureNames();

}  // namespace portfolio::games

#endif  // PORTFOLIO_FIXTURES_H_
