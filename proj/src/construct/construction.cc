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

#include "portfolio/construction.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "portfolio/eps_dom.h"
#include "portfolio/errors.h"
#include "portfolio/solver.h"

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

void RequireUnitRange(const MatrixGame& game) {
  if (!game.within_unit_range()) {
    throw PreconditionError(
        "dominance programs need every payoff in [-1, 1]; normalize the game first");
  }
}

solver::SolveResult SolveOrIncumbent(const solver::MixedIntegerProgram& mip,
                                     const ConstructOptions& options, bool& proven) {
  solver::MilpParams params;
  params.node_limit = options.milp_node_limit;
  try {
    solver::SolveResult res = solver::SolveMilp(mip, params);
    if (res.status != solver::SolveStatus::kOptimal) {
      throw SolverFailure(std::string("dominance MILP not optimal: ") +
                          solver::ToString(res.status));
    }
    proven = true;
    return res;
  } catch (const solver::NodeLimitReached& e) {
    if (!e.incumbent()) throw;
    proven = false;
    return *e.incumbent();
  }
}

std::vector<int> SelectedColumns(const std::vector<double>& primal, int n) {
  std::vector<int> cols;
  for (int j = 0; j < n; ++j) {
    if (primal[j] > 0.5) cols.push_back(j);
  }
  return cols;
}

}  // namespace

std::uint64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int t = 1; t <= k; ++t) {
    r = r * static_cast<unsigned>(n - k + t) / static_cast<unsigned>(t);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

ConstructionResult EpsDomPure(const MatrixGame& game, int k,
                              const ConstructOptions& options) {
  const auto start = Clock::now();
  CheckK(game, k);
  RequireUnitRange(game);
  ConstructionResult out;
  out.method = "eps_dom_pure";
  if (options.engine == Engine::kMilp) {
    const solver::SolveResult res =
        SolveOrIncumbent(EpsDomPureMilp(game, k), options, out.proven_optimal);
    out.portfolio = Portfolio::FromColumns(game.cols(), SelectedColumns(res.primal, game.cols()));
    out.epsilon_bound = std::max(0.0, res.objective_value);
  } else {
    PureSearchResult res = SearchPurePortfolio(game, k, options.node_budget);
    out.portfolio = Portfolio::FromColumns(game.cols(), res.columns);
    out.epsilon_bound = res.epsilon;
    out.proven_optimal = res.stats.proven_optimal;
  }
  out.runtime_ms = MillisecondsSince(start);
  return out;
}

ConstructionResult EpsDomMixed(const MatrixGame& game, int k,
                               const ConstructOptions& options) {
  const auto start = Clock::now();
  CheckK(game, k);
  RequireUnitRange(game);
  ConstructionResult out;
  out.method = "eps_dom_mixed";
  const int n = game.cols();
  if (options.engine == Engine::kMilp) {
    const solver::SolveResult res =
        SolveOrIncumbent(EpsDomMixedMilp(game, k), options, out.proven_optimal);
    std::vector<std::vector<double>> rows;
    for (int z = 0; z < k; ++z) {
      std::vector<double> p(res.primal.begin() + z * n, res.primal.begin() + (z + 1) * n);
      double total = 0.0;
      for (double& x : p) {
        x = std::max(0.0, x);
        total += x;
      }
      for (double& x : p) x /= total;
      rows.push_back(std::move(p));
    }
    out.portfolio = Portfolio(std::move(rows));
    out.epsilon_bound = std::max(0.0, res.objective_value);
  } else {
    MixedSearchResult res = SearchMixedPortfolio(game, k, options.node_budget);
    out.portfolio = Portfolio(res.mixtures);
    out.epsilon_bound = res.epsilon;
    out.proven_optimal = res.stats.proven_optimal;
  }
  out.runtime_ms = MillisecondsSince(start);
  return out;
}

ConstructionResult EpsDomMinSize(const MatrixGame& game, double epsilon,
                                 const ConstructOptions& options) {
  const auto start = Clock::now();
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ParameterError("epsilon must be a finite nonnegative number");
  }
  RequireUnitRange(game);
  ConstructionResult out;
  out.method = "eps_dom_min_size";
  const int n = game.cols();
  if (options.engine == Engine::kMilp) {
    const solver::SolveResult res =
        SolveOrIncumbent(EpsDomMinSizeMilp(game, epsilon), options, out.proven_optimal);
    std::vector<int> cols = SelectedColumns(res.primal, n);
    out.portfolio = Portfolio::FromColumns(n, cols);
  } else {
    for (int k = 1; k <= n; ++k) {
      auto found = FindPurePortfolioWithin(game, k, epsilon, options.node_budget);
      if (found) {
        out.portfolio = Portfolio::FromColumns(n, found->columns);
        break;
      }
    }
  }
  out.epsilon_bound = epsilon;
  out.runtime_ms = MillisecondsSince(start);
  return out;
}

const std::vector<std::string>& MethodNames() {
  static const std::vector<std::string> kNames = {
      "eps_dom_pure", "eps_dom_mixed", "eps_dom_min_size", "greedy_k",
      "double_oracle", "brute_force_pure", "random_mixed"};
  return kNames;
}

ConstructionResult Construct(const MatrixGame& game, const ConstructRequest& request) {
  const std::string& m = request.method;
  ConstructionResult out;
  if (m == "eps_dom_pure") {
    out = EpsDomPure(game, request.k, request.options);
  } else if (m == "eps_dom_mixed") {
    out = EpsDomMixed(game, request.k, request.options);
  } else if (m == "eps_dom_min_size") {
    out = EpsDomMinSize(game, request.epsilon, request.options);
  } else if (m == "greedy_k") {
    out = GreedyK(game, request.k);
  } else if (m == "double_oracle") {
    out = DoubleOracle(game, request.k);
  } else if (m == "brute_force_pure") {
    out = BruteForcePure(game, request.k, request.selection, request.options);
  } else if (m == "random_mixed") {
    out = RandomMixed(game, request.k, request.seed);
  } else {
    throw LookupError("unknown construction method '" + m + "'");
  }
  return out;
}

std::string ConstructionToJson(const ConstructionResult& result) {
  nlohmann::json doc = nlohmann::json::parse(PortfolioToJson(result.portfolio));
  nlohmann::json meta;
  meta["method"] = result.method;
  meta["seed"] = result.seed ? nlohmann::json(*result.seed) : nlohmann::json();
  meta["epsilon_bound"] =
      result.epsilon_bound ? nlohmann::json(*result.epsilon_bound) : nlohmann::json();
  meta["runtime_ms"] = result.runtime_ms;
  meta["proven_optimal"] = result.proven_optimal;
  if (result.exploitability) meta["exploitability"] = *result.exploitability;
  doc["metadata"] = std::move(meta);
  return doc.dump(1) + "\n";
}

void SaveConstruction(const ConstructionResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << ConstructionToJson(result);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace portfolio::construct
