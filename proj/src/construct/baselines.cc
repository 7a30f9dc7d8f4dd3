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

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "portfolio/construction.h"
#include "portfolio/dominance.h"
#include "portfolio/equilibrium.h"
#include "portfolio/errors.h"

namespace portfolio::construct {
namespace {

using Clock = std::chrono::steady_clock;

double MillisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void CheckK(const MatrixGame& game, int k) {
  if (k < 1 || k > game.cols()) {
    throw ParameterError("portfolio size " + std::to_string(k) + " outside [1, " +
                         std::to_string(game.cols()) + "]");
  }
}

bool Contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<double> Embed(const std::vector<double>& sub, const std::vector<int>& idx,
                          int size) {
  std::vector<double> full(size, 0.0);
  for (std::size_t t = 0; t < idx.size(); ++t) full[idx[t]] = sub[t];
  return full;
}

}  // namespace

ConstructionResult GreedyK(const MatrixGame& game, int k) {
  const auto start = Clock::now();
  CheckK(game, k);
  const int n = game.cols();
  std::vector<std::pair<double, int>> scored;
  for (int j = 0; j < n; ++j) {
    std::vector<int> others;
    for (int h = 0; h < n; ++h) {
      if (h != j) others.push_back(h);
    }
    const double e =
        others.empty() ? 0.0 : equilibrium::IndividualEpsilon(game, j, others).epsilon;
    scored.emplace_back(e, j);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> removed;
  for (int t = 0; t < n - k; ++t) removed.push_back(scored[t].second);
  std::sort(removed.begin(), removed.end());
  std::vector<int> keep;
  for (int j = 0; j < n; ++j) {
    if (!Contains(removed, j)) keep.push_back(j);
  }
  ConstructionResult out;
  out.method = "greedy_k";
  out.portfolio = Portfolio::FromColumns(n, keep);
  out.epsilon_bound = equilibrium::JointEpsilon(game, removed);
  out.runtime_ms = MillisecondsSince(start);
  return out;
}

ConstructionResult DoubleOracle(const MatrixGame& game, int k) {
  const auto start = Clock::now();
  CheckK(game, k);
  const int m = game.rows();
  const int n = game.cols();
  const int target = std::min(k, n);

  std::vector<int> rows = {
      equilibrium::BestResponse(game, MixedStrategy::Uniform(n, Player::kColumn),
                                Player::kRow).action};
  std::vector<int> cols = {
      equilibrium::BestResponse(game, MixedStrategy::Uniform(m, Player::kRow),
                                Player::kColumn).action};

  while (static_cast<int>(cols.size()) < target) {
    const equilibrium::EquilibriumResult sub =
        equilibrium::GameValue(game.Submatrix(rows, cols));
    const MixedStrategy x{Embed(sub.row_strategy.probabilities, rows, m), Player::kRow};
    const MixedStrategy y{Embed(sub.column_strategy.probabilities, cols, n),
                          Player::kColumn};
    const int col_br = equilibrium::BestResponse(game, x, Player::kColumn).action;
    const int row_br = equilibrium::BestResponse(game, y, Player::kRow).action;
    bool added = false;
    if (!Contains(cols, col_br)) {
      cols.push_back(col_br);
      added = true;
    }
    if (!Contains(rows, row_br)) {
      rows.push_back(row_br);
      added = true;
    }
    if (added) continue;

    // Converged early: respond to the equilibrium mixed with more and more
    // uniform noise until a new column shows up.
    bool padded = false;
    for (double noise = 0.01; !padded; noise *= 2.0) {
      const double w = std::min(noise, 1.0);
      MixedStrategy perturbed = x;
      for (double& p : perturbed.probabilities) p = (1.0 - w) * p + w / m;
      const int br = equilibrium::BestResponse(game, perturbed, Player::kColumn).action;
      if (!Contains(cols, br)) {
        cols.push_back(br);
        padded = true;
      }
      if (w >= 1.0) break;
    }
    if (!padded) {
      for (int j = 0; j < n; ++j) {
        if (!Contains(cols, j)) {
          cols.push_back(j);
          break;
        }
      }
    }
  }

  ConstructionResult out;
  out.method = "double_oracle";
  out.portfolio = Portfolio::FromColumns(n, cols);
  out.runtime_ms = MillisecondsSince(start);
  return out;
}

ConstructionResult BruteForcePure(const MatrixGame& game, int k,
                                  const SelectionFunction& selection,
                                  const ConstructOptions& options) {
  const auto start = Clock::now();
  CheckK(game, k);
  selection.Validate();
  const int n = game.cols();
  const std::uint64_t count = Choose(n, k);
  if (count > options.enumeration_budget) {
    throw ResourceError("brute force needs C(" + std::to_string(n) + ", " +
                        std::to_string(k) + ") = " + std::to_string(count) +
                        " subsets, budget is " +
                        std::to_string(options.enumeration_budget));
  }
  const double value = equilibrium::GameValue(game).value;
  std::vector<int> s(k);
  for (int t = 0; t < k; ++t) s[t] = t;
  std::vector<int> best_set;
  double best = 0.0;
  while (true) {
    const double ex = Exploitability(game, Portfolio::FromColumns(n, s), selection, value);
    if (best_set.empty() || ex < best - 1e-12) {
      best = ex;
      best_set = s;
      if (best <= 0.0) break;
    }
    int t = k - 1;
    while (t >= 0 && s[t] == n - k + t) --t;
    if (t < 0) break;
    ++s[t];
    for (int u = t + 1; u < k; ++u) s[u] = s[u - 1] + 1;
  }
  ConstructionResult out;
  out.method = "brute_force_pure";
  out.portfolio = Portfolio::FromColumns(n, best_set);
  out.exploitability = best;
  out.runtime_ms = MillisecondsSince(start);
  return out;
}

ConstructionResult RandomMixed(const MatrixGame& game, int k, Rng& rng) {
  const auto start = Clock::now();
  if (k < 1) throw ParameterError("portfolio size must be at least 1");
  std::vector<std::vector<double>> rows;
  for (int z = 0; z < k; ++z) rows.push_back(rng.Simplex(game.cols()));
  ConstructionResult out;
  out.method = "random_mixed";
  out.portfolio = Portfolio(std::move(rows));
  out.runtime_ms = MillisecondsSince(start);
  return out;
}

ConstructionResult RandomMixed(const MatrixGame& game, int k, std::uint64_t seed) {
  Rng rng(seed);
  ConstructionResult out = RandomMixed(game, k, rng);
  out.seed = seed;
  return out;
}

}  // namespace portfolio::construct
