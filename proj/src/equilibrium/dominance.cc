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

#include "portfolio/dominance.h"

#include <algorithm>
#include <string>
#include <vector>

#include "portfolio/errors.h"
#include "portfolio/solver.h"

namespace portfolio::equilibrium {
namespace {

using solver::Bounds;
using solver::Relation;

void CheckColumns(const MatrixGame& game, std::span<const int> cols,
                  const char* what) {
  for (int c : cols) {
    if (c < 0 || c >= game.cols()) {
      throw PreconditionError(std::string(what) + " column " + std::to_string(c) +
                              " out of range");
    }
  }
}

// min eps s.t. sum_h l_h U_ih <= floor_i + eps, l in the simplex over
// `allowed`, eps >= 0.
DominanceResult DominateFloor(const MatrixGame& game,
                              const std::vector<double>& floor,
                              std::span<const int> allowed) {
  const int m = game.rows();
  const int a = static_cast<int>(allowed.size());
  solver::LinearProgram lp;
  for (int h = 0; h < a; ++h) lp.AddVariable(Bounds{}, 0.0);
  const int eps = lp.AddVariable(Bounds{}, 1.0);
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(a + 1);
    for (int h = 0; h < a; ++h) row[h] = game(i, allowed[h]);
    row[eps] = -1.0;
    lp.AddDenseConstraint(std::move(row), Relation::kLessEqual, floor[i]);
  }
  std::vector<double> ones(a + 1, 1.0);
  ones[eps] = 0.0;
  lp.AddDenseConstraint(std::move(ones), Relation::kEqual, 1.0);

  solver::SolveResult res = solver::SolveLp(lp);
  if (res.status != solver::SolveStatus::kOptimal) {
    throw SolverFailure(std::string("dominance LP not optimal: ") +
                        solver::ToString(res.status));
  }
  DominanceResult out;
  out.epsilon = std::max(0.0, res.objective_value);
  out.mixture.owner = Player::kColumn;
  out.mixture.probabilities.assign(game.cols(), 0.0);
  double total = 0.0;
  for (int h = 0; h < a; ++h) {
    double p = std::max(0.0, res.primal[h]);
    out.mixture.probabilities[allowed[h]] += p;
    total += p;
  }
  for (double& p : out.mixture.probabilities) p /= total;
  return out;
}

}  // namespace

DominanceResult IndividualEpsilon(const MatrixGame& game, int j,
                                  std::span<const int> allowed) {
  if (allowed.empty()) throw PreconditionError("allowed set is empty");
  CheckColumns(game, allowed, "allowed");
  CheckColumns(game, std::span<const int>(&j, 1), "target");
  if (std::find(allowed.begin(), allowed.end(), j) != allowed.end()) {
    throw PreconditionError("target column " + std::to_string(j) +
                            " is in the allowed set");
  }
  return DominateFloor(game, game.column(j), allowed);
}

DominanceResult CoverEpsilon(const MatrixGame& game, std::span<const int> targets,
                             std::span<const int> allowed) {
  if (allowed.empty()) throw PreconditionError("allowed set is empty");
  if (targets.empty()) throw PreconditionError("target set is empty");
  CheckColumns(game, allowed, "allowed");
  CheckColumns(game, targets, "target");
  std::vector<double> floor(game.rows(), solver::kInfinity);
  for (int t : targets) {
    for (int i = 0; i < game.rows(); ++i) floor[i] = std::min(floor[i], game(i, t));
  }
  return DominateFloor(game, floor, allowed);
}

double JointEpsilon(const MatrixGame& game, std::span<const int> removed) {
  CheckColumns(game, removed, "removed");
  if (removed.empty()) return 0.0;
  const int m = game.rows();
  const int n = game.cols();
  std::vector<bool> out(n, false);
  for (int t : removed) out[t] = true;
  std::vector<int> keep;
  for (int j = 0; j < n; ++j) {
    if (!out[j]) keep.push_back(j);
  }
  if (keep.empty()) throw PreconditionError("cannot remove every column");

  // One mixture per removed column, shared eps as the last variable.
  const int a = static_cast<int>(keep.size());
  const int r = static_cast<int>(removed.size());
  solver::LinearProgram lp;
  for (int v = 0; v < a * r; ++v) lp.AddVariable(Bounds{}, 0.0);
  const int eps = lp.AddVariable(Bounds{}, 1.0);
  std::vector<std::pair<int, double>> terms;
  for (int t = 0; t < r; ++t) {
    for (int i = 0; i < m; ++i) {
      terms.clear();
      for (int h = 0; h < a; ++h) terms.emplace_back(t * a + h, game(i, keep[h]));
      terms.emplace_back(eps, -1.0);
      lp.AddConstraint(terms, Relation::kLessEqual, game(i, removed[t]));
    }
    terms.clear();
    for (int h = 0; h < a; ++h) terms.emplace_back(t * a + h, 1.0);
    lp.AddConstraint(terms, Relation::kEqual, 1.0);
  }
  solver::SolveResult res = solver::SolveLp(lp);
  if (res.status != solver::SolveStatus::kOptimal) {
    throw SolverFailure(std::string("joint dominance LP not optimal: ") +
                        solver::ToString(res.status));
  }
  return std::max(0.0, res.objective_value);
}

}  // namespace portfolio::equilibrium
