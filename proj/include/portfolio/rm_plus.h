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

#ifndef PORTFOLIO_RM_PLUS_H_
#define PORTFOLIO_RM_PLUS_H_

#include <vector>

#include "portfolio/matrix_game.h"

namespace portfolio::equilibrium {

inline constexpr int kDefaultRmPlusIterations = 10000;

struct RmPlusState {
  // Clipped cumulative regrets.
  std::vector<double> row_regrets;
  std::vector<double> column_regrets;
  // Uniform average of the played strategies.
  MixedStrategy row_average;
  MixedStrategy column_average;
  int iterations = 0;
};

// Regret Matching+ with simultaneous updates: both players play the
// normalized positive part of their cumulative regrets (uniform when all are
// zero), regrets are clipped at zero after every update, and the reported
// profile is the uniform average over all iterations. Deterministic.
RmPlusState RmPlus(const MatrixGame& game, int iterations);

}  // namespace portfolio::equilibrium

#endif  // PORTFOLIO_RM_PLUS_H_
