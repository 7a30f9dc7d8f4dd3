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

#ifndef PORTFOLIO_EVALUATION_H_
#define PORTFOLIO_EVALUATION_H_

#include <optional>
#include <string>

#include "portfolio/matrix_game.h"
#include "portfolio/portfolio.h"
#include "portfolio/rm_plus.h"
#include "portfolio/solver.h"

namespace portfolio {

// Big-M constant of the evaluation and dominance programs. Valid for games
// with every entry in [-1, 1].
inline constexpr double kBigM = 10.0;

enum class SelectionKind { kPessimistic, kOptimistic, kRmPlus };

// How the row player picks its equilibrium of the restricted game.
struct SelectionFunction {
  SelectionKind kind = SelectionKind::kPessimistic;
  int iterations = equilibrium::kDefaultRmPlusIterations;

  static SelectionFunction Pessimistic() { return {SelectionKind::kPessimistic}; }
  static SelectionFunction Optimistic() { return {SelectionKind::kOptimistic}; }
  static SelectionFunction RmPlus(int iterations = equilibrium::kDefaultRmPlusIterations) {
    return {SelectionKind::kRmPlus, iterations};
  }

  // "pessimistic", "optimistic", "rm_plus" or "rm_plus:<iterations>".
  std::string ToString() const;
  static SelectionFunction Parse(const std::string& text);
  void Validate() const;

  bool operator==(const SelectionFunction& other) const = default;
};

struct PortfolioEvaluation {
  // Row player's full-game utility u_f.
  double utility = 0.0;
  // u* - u_f.
  double exploitability = 0.0;
  double game_value = 0.0;
  double restricted_value = 0.0;
  // Row strategy chosen in the restricted game, in full-game row space.
  MixedStrategy p1_strategy;
  // Column player's best response to p1_strategy.
  int responder_action = 0;
};

// Minimum full-game utility over all restricted-game equilibria of the row
// player, found with the evaluation MILP. The game must have every entry in
// [-1, 1]. `game_value` may be passed to skip recomputing u*.
PortfolioEvaluation PessimisticUtility(const MatrixGame& game,
                                       const Portfolio& portfolio,
                                       std::optional<double> game_value = {});

// Maximum of the same quantity, one LP.
PortfolioEvaluation OptimisticUtility(const MatrixGame& game,
                                      const Portfolio& portfolio,
                                      std::optional<double> game_value = {});

// Full-game utility of the averaged RM+ row strategy of the restricted game.
PortfolioEvaluation RmUtility(const MatrixGame& game, const Portfolio& portfolio,
                              int iterations = equilibrium::kDefaultRmPlusIterations,
                              std::optional<double> game_value = {});

PortfolioEvaluation Evaluate(const MatrixGame& game, const Portfolio& portfolio,
                             const SelectionFunction& selection,
                             std::optional<double> game_value = {});

double Exploitability(const MatrixGame& game, const Portfolio& portfolio,
                      const SelectionFunction& selection,
                      std::optional<double> game_value = {});

// Converts a utility difference measured on `game` back to the units the
// game was generated in.
double ToRawUnits(const MatrixGame& game, double difference);

// The evaluation MILP itself. Variables: x_0..x_{m-1}, v_o, b_0..b_{n-1}.
solver::MixedIntegerProgram EvaluationMilp(const MatrixGame& game,
                                           const Portfolio& portfolio,
                                           double restricted_value);

}  // namespace portfolio

#endif  // PORTFOLIO_EVALUATION_H_
