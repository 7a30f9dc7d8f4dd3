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

#include <string>
#include <vector>

#include "portfolio/eps_dom.h"
#include "portfolio/errors.h"
#include "portfolio/evaluation.h"

namespace portfolio::construct {
namespace {

using solver::Bounds;
using solver::Relation;

void CheckK(const MatrixGame& game, int k) {
  if (k < 1 || k > game.cols()) {
    throw ParameterError("portfolio size " + std::to_string(k) + " outside [1, " +
                         std::to_string(game.cols()) + "]");
  }
}

// b_j then l_{jh}; shared by the pure and min-size programs.
void AddPureSelection(const MatrixGame& game, solver::MixedIntegerProgram& mip) {
  const int n = game.cols();
  solver::LinearProgram& lp = mip.base;
  for (int j = 0; j < n; ++j) {
    mip.binary_indices.push_back(lp.AddVariable(Bounds{0.0, 1.0}, 0.0, "b" + std::to_string(j)));
  }
  for (int j = 0; j < n; ++j) {
    for (int h = 0; h < n; ++h) {
      lp.AddVariable(Bounds{0.0, 1.0}, 0.0,
                     "l" + std::to_string(j) + "_" + std::to_string(h));
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, double>> terms;
    for (int h = 0; h < n; ++h) terms.emplace_back(n + j * n + h, 1.0);
    lp.AddConstraint(terms, Relation::kEqual, 1.0);
  }
  for (int j = 0; j < n; ++j) {
    for (int h = 0; h < n; ++h) {
      lp.AddConstraint({{n + j * n + h, 1.0}, {h, -1.0}}, Relation::kLessEqual, 0.0);
    }
  }
}

// l_j . U_i - eps <= U_ij, or with eps a constant when eps_var < 0.
void AddPureDominance(const MatrixGame& game, solver::LinearProgram& lp, int eps_var,
                      double eps_value) {
  const int n = game.cols();
  std::vector<std::pair<int, double>> terms;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < game.rows(); ++i) {
      terms.clear();
      for (int h = 0; h < n; ++h) terms.emplace_back(n + j * n + h, game(i, h));
      if (eps_var >= 0) terms.emplace_back(eps_var, -1.0);
      lp.AddConstraint(terms, Relation::kLessEqual,
                       game(i, j) + (eps_var >= 0 ? 0.0 : eps_value));
    }
  }
}

}  // namespace

solver::MixedIntegerProgram EpsDomPureMilp(const MatrixGame& game, int k) {
  CheckK(game, k);
  solver::MixedIntegerProgram mip;
  mip.base.sense = solver::Sense::kMinimize;
  AddPureSelection(game, mip);
  const int eps = mip.base.AddVariable(Bounds{0.0, game.payoff_range()}, 1.0, "eps");
  std::vector<std::pair<int, double>> terms;
  for (int j = 0; j < game.cols(); ++j) terms.emplace_back(j, 1.0);
  mip.base.AddConstraint(terms, Relation::kEqual, k);
  AddPureDominance(game, mip.base, eps, 0.0);
  return mip;
}

solver::MixedIntegerProgram EpsDomMinSizeMilp(const MatrixGame& game, double epsilon) {
  if (!(epsilon >= 0.0)) throw ParameterError("epsilon must be nonnegative");
  solver::MixedIntegerProgram mip;
  mip.base.sense = solver::Sense::kMinimize;
  AddPureSelection(game, mip);
  for (int j = 0; j < game.cols(); ++j) mip.base.objective[j] = 1.0;
  AddPureDominance(game, mip.base, -1, epsilon);
  return mip;
}

solver::MixedIntegerProgram EpsDomMixedMilp(const MatrixGame& game, int k) {
  CheckK(game, k);
  const int n = game.cols();
  solver::MixedIntegerProgram mip;
  solver::LinearProgram& lp = mip.base;
  lp.sense = solver::Sense::kMinimize;
  for (int z = 0; z < k; ++z) {
    for (int j = 0; j < n; ++j) {
      lp.AddVariable(Bounds{0.0, 1.0}, 0.0, "l" + std::to_string(z) + "_" + std::to_string(j));
    }
  }
  for (int z = 0; z < k; ++z) {
    for (int j = 0; j < n; ++j) {
      mip.binary_indices.push_back(lp.AddVariable(
          Bounds{0.0, 1.0}, 0.0, "d" + std::to_string(z) + "_" + std::to_string(j)));
    }
  }
  const int eps = lp.AddVariable(Bounds{0.0, game.payoff_range()}, 1.0, "eps");
  std::vector<std::pair<int, double>> terms;
  for (int z = 0; z < k; ++z) {
    terms.clear();
    for (int j = 0; j < n; ++j) terms.emplace_back(z * n + j, 1.0);
    lp.AddConstraint(terms, Relation::kEqual, 1.0);
  }
  for (int j = 0; j < n; ++j) {
    terms.clear();
    for (int z = 0; z < k; ++z) terms.emplace_back(k * n + z * n + j, 1.0);
    lp.AddConstraint(terms, Relation::kEqual, 1.0);
  }
  for (int z = 0; z < k; ++z) {
    for (int i = 0; i < game.rows(); ++i) {
      for (int j = 0; j < n; ++j) {
        terms.clear();
        for (int h = 0; h < n; ++h) terms.emplace_back(z * n + h, game(i, h));
        terms.emplace_back(eps, -1.0);
        terms.emplace_back(k * n + z * n + j, kBigM);
        lp.AddConstraint(terms, Relation::kLessEqual, game(i, j) + kBigM);
      }
    }
  }
  return mip;
}

}  // namespace portfolio::construct
