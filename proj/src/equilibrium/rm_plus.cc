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

#include "portfolio/rm_plus.h"

#include <algorithm>
#include <vector>

#include "portfolio/errors.h"

namespace portfolio::equilibrium {
namespace {

// Writes the regret-matching strategy for `regrets` into `out`.
void Match(const std::vector<double>& regrets, std::vector<double>& out) {
  double total = 0.0;
  for (double r : regrets) total += r;
  const int n = static_cast<int>(regrets.size());
  if (total > 0.0) {
    for (int a = 0; a < n; ++a) out[a] = regrets[a] / total;
  } else {
    std::fill(out.begin(), out.end(), 1.0 / n);
  }
}

}  // namespace

RmPlusState RmPlus(const MatrixGame& game, int iterations) {
  if (iterations < 1) throw ParameterError("RM+ needs at least one iteration");
  const int m = game.rows();
  const int n = game.cols();
  if (m == 0 || n == 0) throw DimensionError("game has no actions");
  std::span<const double> u = game.payoffs();

  RmPlusState state;
  state.row_regrets.assign(m, 0.0);
  state.column_regrets.assign(n, 0.0);
  std::vector<double> x(m), y(n), row_sum(m, 0.0), col_sum(n, 0.0);
  std::vector<double> row_util(m), col_util(n);

  for (int t = 0; t < iterations; ++t) {
    Match(state.row_regrets, x);
    Match(state.column_regrets, y);

    // row_util = U y; col_util = -(x^T U), the column player's utility.
    std::fill(col_util.begin(), col_util.end(), 0.0);
    for (int i = 0; i < m; ++i) {
      const double* r = u.data() + static_cast<std::size_t>(i) * n;
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        s += r[j] * y[j];
        col_util[j] -= x[i] * r[j];
      }
      row_util[i] = s;
    }
    double row_value = 0.0;
    for (int i = 0; i < m; ++i) row_value += x[i] * row_util[i];
    double col_value = 0.0;
    for (int j = 0; j < n; ++j) col_value += y[j] * col_util[j];

    for (int i = 0; i < m; ++i) {
      state.row_regrets[i] =
          std::max(0.0, state.row_regrets[i] + row_util[i] - row_value);
      row_sum[i] += x[i];
    }
    for (int j = 0; j < n; ++j) {
      state.column_regrets[j] =
          std::max(0.0, state.column_regrets[j] + col_util[j] - col_value);
      col_sum[j] += y[j];
    }
  }

  state.iterations = iterations;
  state.row_average.owner = Player::kRow;
  state.column_average.owner = Player::kColumn;
  for (double& s : row_sum) s /= iterations;
  for (double& s : col_sum) s /= iterations;
  state.row_average.probabilities = std::move(row_sum);
  state.column_average.probabilities = std::move(col_sum);
  return state;
}

}  // namespace portfolio::equilibrium
