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

#ifndef PORTFOLIO_DOMINANCE_H_
#define PORTFOLIO_DOMINANCE_H_

#include <span>
#include <vector>

#include "portfolio/matrix_game.h"

namespace portfolio::equilibrium {

// Dominance is always from the column player's side: a mixture l of columns
// eps-dominates column j when (U l)_i <= U_ij + eps for every row i. All
// inequalities are weak and eps is constrained to be nonnegative.

struct DominanceResult {
  double epsilon = 0.0;
  // Dominating mixture over all columns (zero outside the allowed set).
  MixedStrategy mixture;
};

// Smallest eps for which a mixture over `allowed` eps-dominates column `j`.
// Requires j not in `allowed` and `allowed` nonempty.
DominanceResult IndividualEpsilon(const MatrixGame& game, int j,
                                  std::span<const int> allowed);

// Smallest shared eps for which every column in `removed` is dominated by its
// own mixture over the remaining columns. Zero for an empty set.
double JointEpsilon(const MatrixGame& game, std::span<const int> removed);

// Smallest eps for which a single mixture over `allowed` eps-dominates every
// column in `targets` simultaneously. `allowed` may contain the targets.
DominanceResult CoverEpsilon(const MatrixGame& game, std::span<const int> targets,
                             std::span<const int> allowed);

}  // namespace portfolio::equilibrium

#endif  // PORTFOLIO_DOMINANCE_H_
