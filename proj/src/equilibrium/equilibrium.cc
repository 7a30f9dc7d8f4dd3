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

#include "portfolio/equilibrium.h"

#include <algorithm>
#include <string>
#include <vector>

#include "portfolio/errors.h"
#include "portfolio/solver.h"

namespace portfolio::equilibrium {
namespace {

using solver::Bounds;
using solver::Relation;

// max v s.t. sum_i x_i U_ij >= v for all j, x in the simplex. Variables are
// x_0..x_{m-1} followed by v.
solver::LinearProgram MaximinProgram(const MatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  solver::LinearProgram lp;
  lp.sense = solver::Sense::kMaximize;
  for (int i = 0; i < m; ++i) lp.AddVariable(Bounds{}, 0.0);
  const int v = lp.AddVariable(Bounds{-solver::kInfinity, solver::kInfinity}, 1.0);
  for (int j = 0; j < n; ++j) {
    std::vector<double> row(m + 1, 0.0);
    for (int i = 0; i < m; ++i) row[i] = game(i, j);
    row[v] = -1.0;
    lp.AddDenseConstraint(std::move(row), Relation::kGreaterEqual, 0.0);
  }
  std::vector<double> ones(m + 1, 1.0);
  ones[v] = 0.0;
  lp.AddDenseConstraint(std::move(ones), Relation::kEqual, 1.0);
  return lp;
}

std::vector<double> CleanDistribution(std::vector<double> p) {
  double total = 0.0;
  for (double& x : p) {
    if (x < 0.0) x = 0.0;
    total += x;
  }
  if (total <= 0.0) throw SolverFailure("degenerate equilibrium strategy");
  for (double& x : p) x /= total;
  return p;
}

double MaxRowPayoff(const MatrixGame& game, std::span<const double> q) {
  std::vector<double> r = RowPayoffs(game, q);
  return *std::max_element(r.begin(), r.end());
}

}  // namespace

EquilibriumResult GameValue(const MatrixGame& game) {
  if (game.rows() == 0 || game.cols() == 0) {
    throw DimensionError("game has no actions");
  }
  const int m = game.rows();
  const int n = game.cols();
  solver::LinearProgram lp = MaximinProgram(game);
  solver::SolveResult res = solver::SolveLp(lp);
  if (res.status != solver::SolveStatus::kOptimal) {
    throw SolverFailure(std::string("maximin LP not optimal: ") +
                        solver::ToString(res.status));
  }
  EquilibriumResult out;
  out.value = res.objective_value;
  out.row_strategy.owner = Player::kRow;
  out.row_strategy.probabilities = CleanDistribution(
      std::vector<double>(res.primal.begin(), res.primal.begin() + m));

  std::vector<double> q(n, 0.0);
  for (int j = 0; j < n; ++j) q[j] = -(*res.dual)[j];
  out.column_strategy.owner = Player::kColumn;
  out.column_strategy.probabilities = CleanDistribution(std::move(q));

  // Multipliers can lose accuracy on degenerate programs; fall back to the
  // column player's own LP.
  if (MaxRowPayoff(game, out.column_strategy.probabilities) > out.value + 1e-7) {
    MatrixGame flipped = game.TransposeNegate();
    solver::SolveResult dual_res = solver::SolveLp(MaximinProgram(flipped));
    if (dual_res.status != solver::SolveStatus::kOptimal) {
      throw SolverFailure("column player's LP not optimal");
    }
    out.column_strategy.probabilities = CleanDistribution(
        std::vector<double>(dual_res.primal.begin(), dual_res.primal.begin() + n));
  }
  return out;
}

BestResponseResult BestResponse(const MatrixGame& game,
                                const MixedStrategy& opponent, Player player) {
  const bool row = player == Player::kRow;
  const int expected = row ? game.cols() : game.rows();
  if (opponent.size() != expected) {
    throw DimensionError("opponent strategy has " +
                         std::to_string(opponent.size()) + " entries, expected " +
                         std::to_string(expected));
  }
  std::vector<double> u = row ? RowPayoffs(game, opponent.probabilities)
                              : ColumnPayoffs(game, opponent.probabilities);
  BestResponseResult best{0, u[0]};
  for (int a = 1; a < static_cast<int>(u.size()); ++a) {
    bool better = row ? u[a] > best.value + 1e-12 : u[a] < best.value - 1e-12;
    if (better) best = {a, u[a]};
  }
  return best;
}

double ExploitabilityOf(const MatrixGame& game, const MixedStrategy& row_strategy,
                        double game_value) {
  BestResponseResult br = BestResponse(game, row_strategy, Player::kColumn);
  return std::max(0.0, game_value - br.value);
}

double ExploitabilityOf(const MatrixGame& game, const MixedStrategy& row_strategy) {
  return ExploitabilityOf(game, row_strategy, GameValue(game).value);
}

}  // namespace portfolio::equilibrium
