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

#ifndef PORTFOLIO_EPS_DOM_H_
#define PORTFOLIO_EPS_DOM_H_

// Epsilon-dominance portfolio programs. The literal MILP formulations are
// exposed for inspection and cross-checking; the search routines solve the
// same problems exactly by decomposing them into small dominance LPs.

#include <cstdint>
#include <optional>
#include <vector>

#include "portfolio/matrix_game.h"
#include "portfolio/solver.h"

namespace portfolio::construct {

// Pure program, variables: b_0..b_{n-1}, then l_{jh} at n + j*n + h, then
// eps. min eps s.t. sum b = k, sum_h l_jh = 1, l_jh <= b_h,
// l_j . U_i <= U_ij + eps.
solver::MixedIntegerProgram EpsDomPureMilp(const MatrixGame& game, int k);

// Mixed program, variables: l_{zj} at z*n + j, d_{zj} at k*n + z*n + j, then
// eps. min eps s.t. sum_j l_zj = 1, sum_z d_zj = 1,
// l_z . U_i <= U_ij + eps + M (1 - d_zj).
solver::MixedIntegerProgram EpsDomMixedMilp(const MatrixGame& game, int k);

// Pure program with eps fixed and min sum b. Variables: b, then l as above.
solver::MixedIntegerProgram EpsDomMinSizeMilp(const MatrixGame& game, double epsilon);

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t lps = 0;
  // False when the node budget ran out; the answer is then the best found.
  bool proven_optimal = true;
};

struct PureSearchResult {
  // Sorted column indices.
  std::vector<int> columns;
  double epsilon = 0.0;
  SearchStats stats;
};

// Smallest eps over all k-subsets S of columns, where eps(S) is the largest
// individual dominance eps of a column outside S by mixtures over S. Ties go
// to the lexicographically smallest subset.
PureSearchResult SearchPurePortfolio(const MatrixGame& game, int k,
                                     std::int64_t node_budget);

// Lexicographically smallest k-subset with eps(S) <= epsilon, if any.
std::optional<PureSearchResult> FindPurePortfolioWithin(const MatrixGame& game, int k,
                                                        double epsilon,
                                                        std::int64_t node_budget);

// eps(S) for one subset.
double PurePortfolioEpsilon(const MatrixGame& game, const std::vector<int>& columns);

struct MixedSearchResult {
  // Partition of the columns; group z is dominated by mixtures[z].
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<double>> mixtures;
  double epsilon = 0.0;
  SearchStats stats;
};

// Smallest eps over partitions of the columns into at most k groups, where a
// group costs the smallest eps for which one mixture over all columns
// dominates every member.
MixedSearchResult SearchMixedPortfolio(const MatrixGame& game, int k,
                                       std::int64_t node_budget);

}  // namespace portfolio::construct

#endif  // PORTFOLIO_EPS_DOM_H_
