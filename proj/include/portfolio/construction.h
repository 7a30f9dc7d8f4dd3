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

#ifndef PORTFOLIO_CONSTRUCTION_H_
#define PORTFOLIO_CONSTRUCTION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "portfolio/evaluation.h"
#include "portfolio/matrix_game.h"
#include "portfolio/portfolio.h"
#include "portfolio/random.h"

namespace portfolio::construct {

enum class Engine {
  // Exact decomposition into dominance LPs (default).
  kSearch,
  // The literal MILP through the built-in branch-and-bound.
  kMilp,
};

struct ConstructOptions {
  Engine engine = Engine::kSearch;
  // Search nodes for the decomposition engine.
  std::int64_t node_budget = 200000;
  // Branch-and-bound nodes for the MILP engine.
  std::int64_t milp_node_limit = 200000;
  // Largest C(n, k) brute force will enumerate.
  std::uint64_t enumeration_budget = 200000;
};

struct ConstructionResult {
  Portfolio portfolio;
  std::optional<double> epsilon_bound;
  std::string method;
  std::optional<std::uint64_t> seed;
  double runtime_ms = 0.0;
  // False when a budget ran out and the portfolio is the best one found.
  bool proven_optimal = true;
  // Brute force only: exploitability of the chosen portfolio.
  std::optional<double> exploitability;
};

ConstructionResult EpsDomPure(const MatrixGame& game, int k,
                              const ConstructOptions& options = {});
ConstructionResult EpsDomMixed(const MatrixGame& game, int k,
                               const ConstructOptions& options = {});
ConstructionResult EpsDomMinSize(const MatrixGame& game, double epsilon,
                                 const ConstructOptions& options = {});

// Removes the n - k columns with the smallest individual eps (each measured
// against all other columns) and reports the joint eps of the removed set.
ConstructionResult GreedyK(const MatrixGame& game, int k);

// Double oracle from best responses to uniform play, stopped once the column
// player holds k actions. Pads with best responses to perturbed equilibria
// when it converges early.
ConstructionResult DoubleOracle(const MatrixGame& game, int k);

// Best k-subset of columns under `selection`; lexicographic tie-break.
// Throws ResourceError when C(n, k) exceeds the enumeration budget.
ConstructionResult BruteForcePure(const MatrixGame& game, int k,
                                  const SelectionFunction& selection,
                                  const ConstructOptions& options = {});

// k strategies drawn uniformly from the simplex.
ConstructionResult RandomMixed(const MatrixGame& game, int k, std::uint64_t seed);
ConstructionResult RandomMixed(const MatrixGame& game, int k, Rng& rng);

struct ConstructRequest {
  std::string method;
  int k = 1;
  // eps_dom_min_size only.
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  // brute_force_pure only.
  SelectionFunction selection;
  ConstructOptions options;
};

// Dispatches on `method`; throws LookupError for unknown names.
ConstructionResult Construct(const MatrixGame& game, const ConstructRequest& request);
const std::vector<std::string>& MethodNames();

// Portfolio file with an extra "metadata" block.
std::string ConstructionToJson(const ConstructionResult& result);
void SaveConstruction(const ConstructionResult& result, const std::string& path);

// Binomial coefficient saturating at UINT64_MAX.
std::uint64_t Choose(int n, int k);

}  // namespace portfolio::construct

#endif  // PORTFOLIO_CONSTRUCTION_H_
