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

#ifndef PORTFOLIO_TESTS_SUPPORT_MILP_ORACLE_H_
#define PORTFOLIO_TESTS_SUPPORT_MILP_ORACLE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "portfolio/solver.h"

namespace portfolio::testing {

// Exhaustive enumeration of every binary assignment with one LP per leaf.
// Returns the best objective in the model's own sense, or nullopt when no
// leaf is feasible.
inline std::optional<double> EnumerateMilp(
    const solver::MixedIntegerProgram& mip) {
  const auto& binaries = mip.binary_indices;
  const bool minimize = mip.base.sense == solver::Sense::kMinimize;
  std::optional<double> best;
  for (std::uint32_t mask = 0; mask < (1u << binaries.size()); ++mask) {
    std::vector<solver::Bounds> bounds = mip.base.bounds;
    for (std::size_t b = 0; b < binaries.size(); ++b) {
      const double v = (mask >> b) & 1u;
      bounds[binaries[b]] = {v, v};
    }
    const auto leaf = solver::SolveLpWithBounds(mip.base, bounds);
    if (leaf.status != solver::SolveStatus::kOptimal) continue;
    if (!best || (minimize ? leaf.objective_value < *best
                           : leaf.objective_value > *best)) {
      best = leaf.objective_value;
    }
  }
  return best;
}

// Random bounded MILP with `num_binaries` binaries and a few continuous
// variables in [0, 4]. The all-zero assignment is always feasible.
inline solver::MixedIntegerProgram RandomMilp(std::mt19937_64& rng,
                                              int num_binaries) {
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_int_distribution<int> small(1, 4);
  solver::MixedIntegerProgram mip;
  auto& lp = mip.base;
  lp.sense = (rng() & 1u) ? solver::Sense::kMinimize : solver::Sense::kMaximize;
  for (int b = 0; b < num_binaries; ++b) {
    mip.binary_indices.push_back(lp.AddVariable({0.0, 1.0}, coef(rng)));
  }
  const int continuous = small(rng);
  for (int c = 0; c < continuous; ++c) lp.AddVariable({0.0, 4.0}, coef(rng));
  const int rows = small(rng) + 2;
  for (int r = 0; r < rows; ++r) {
    std::vector<double> a(lp.num_variables());
    for (double& v : a) v = coef(rng);
    if (rng() % 3 == 0) {
      // Satisfied at zero: -a.x >= -rhs with rhs >= 0.
      for (double& v : a) v = -v;
      lp.AddDenseConstraint(std::move(a), solver::Relation::kGreaterEqual,
                            -std::abs(coef(rng)) - 0.5);
    } else {
      lp.AddDenseConstraint(std::move(a), solver::Relation::kLessEqual,
                            std::abs(coef(rng)) + 0.5);
    }
  }
  return mip;
}

}  // namespace portfolio::testing

#endif  // PORTFOLIO_TESTS_SUPPORT_MILP_ORACLE_H_
