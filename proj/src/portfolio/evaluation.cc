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

#include "portfolio/evaluation.h"

#include <algorithm>
#include <string>
#include <vector>

#include "portfolio/equilibrium.h"
#include "portfolio/errors.h"
#include "portfolio/rm_plus.h"

namespace portfolio {
namespace {

using solver::Bounds;
using solver::Relation;

// Restricted-equilibrium constraints are relaxed by this much so the LP
// value itself is always feasible.
constexpr double kValueSlack = 1e-9;

void RequireUnitRange(const MatrixGame& game) {
  if (!game.within_unit_range()) {
    throw PreconditionError(
        "portfolio evaluation needs every payoff in [-1, 1]; normalize the game first");
  }
}

std::vector<double> CleanDistribution(std::span<const double> raw) {
  std::vector<double> p(raw.begin(), raw.end());
  double total = 0.0;
  for (double& x : p) {
    x = std::clamp(x, 0.0, 1.0);
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

PortfolioEvaluation Finish(const MatrixGame& game, double game_value,
                           double restricted_value, std::vector<double> x,
                           double utility) {
  PortfolioEvaluation out;
  out.game_value = game_value;
  out.restricted_value = restricted_value;
  out.p1_strategy = {std::move(x), Player::kRow};
  out.responder_action =
      equilibrium::BestResponse(game, out.p1_strategy, Player::kColumn).action;
  out.utility = utility;
  out.exploitability = game_value - utility;
  if (out.exploitability < 0.0 && out.exploitability > -1e-9) out.exploitability = 0.0;
  return out;
}

// x_0..x_{m-1} then v_o; x in the simplex and x^T U_R >= v_r.
void AddRestrictedEquilibrium(solver::LinearProgram& lp, const MatrixGame& restricted,
                              double restricted_value) {
  const int m = restricted.rows();
  std::vector<std::pair<int, double>> terms;
  for (int i = 0; i < m; ++i) terms.emplace_back(i, 1.0);
  lp.AddConstraint(terms, Relation::kEqual, 1.0);
  for (int z = 0; z < restricted.cols(); ++z) {
    terms.clear();
    for (int i = 0; i < m; ++i) terms.emplace_back(i, restricted(i, z));
    lp.AddConstraint(terms, Relation::kGreaterEqual, restricted_value - kValueSlack);
  }
}

}  // namespace

std::string SelectionFunction::ToString() const {
  switch (kind) {
    case SelectionKind::kPessimistic:
      return "pessimistic";
    case SelectionKind::kOptimistic:
      return "optimistic";
    case SelectionKind::kRmPlus:
      if (iterations == equilibrium::kDefaultRmPlusIterations) return "rm_plus";
      return "rm_plus:" + std::to_string(iterations);
  }
  return "?";
}

SelectionFunction SelectionFunction::Parse(const std::string& text) {
  if (text == "pessimistic" || text == "pes") return Pessimistic();
  if (text == "optimistic" || text == "opt") return Optimistic();
  if (text == "rm_plus" || text == "rm") return RmPlus();
  const std::string prefix = "rm_plus:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    int t = 0;
    try {
      t = std::stoi(text.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - prefix.size() || t < 1) {
      throw ParameterError("bad RM+ iteration count in '" + text + "'");
    }
    return RmPlus(t);
  }
  throw ParameterError("unknown selection function '" + text + "'");
}

void SelectionFunction::Validate() const {
  if (kind == SelectionKind::kRmPlus && iterations < 1) {
    throw ParameterError("RM+ selection needs at least one iteration");
  }
}

solver::MixedIntegerProgram EvaluationMilp(const MatrixGame& game,
                                           const Portfolio& portfolio,
                                           double restricted_value) {
  const MatrixGame restricted = Restrict(game, portfolio);
  const int m = game.rows();
  const int n = game.cols();
  solver::MixedIntegerProgram mip;
  solver::LinearProgram& lp = mip.base;
  lp.sense = solver::Sense::kMinimize;
  for (int i = 0; i < m; ++i) lp.AddVariable(Bounds{0.0, 1.0}, 0.0, "x" + std::to_string(i));
  const int vo = lp.AddVariable(Bounds{game.min_payoff(), game.max_payoff()}, 1.0, "v_o");
  for (int j = 0; j < n; ++j) {
    mip.binary_indices.push_back(
        lp.AddVariable(Bounds{0.0, 1.0}, 0.0, "b" + std::to_string(j)));
  }
  AddRestrictedEquilibrium(lp, restricted, restricted_value);
  std::vector<std::pair<int, double>> terms;
  for (int j = 0; j < n; ++j) terms.emplace_back(vo + 1 + j, 1.0);
  lp.AddConstraint(terms, Relation::kEqual, 1.0);
  // x U e_j <= v_o + M (1 - b_j)
  for (int j = 0; j < n; ++j) {
    terms.clear();
    for (int i = 0; i < m; ++i) terms.emplace_back(i, game(i, j));
    terms.emplace_back(vo, -1.0);
    terms.emplace_back(vo + 1 + j, kBigM);
    lp.AddConstraint(terms, Relation::kLessEqual, kBigM);
  }
  return mip;
}

PortfolioEvaluation PessimisticUtility(const MatrixGame& game,
                                       const Portfolio& portfolio,
                                       std::optional<double> game_value) {
  RequireUnitRange(game);
  const double value = game_value ? *game_value : equilibrium::GameValue(game).value;
  const MatrixGame restricted = Restrict(game, portfolio);
  const equilibrium::EquilibriumResult req = equilibrium::GameValue(restricted);
  solver::MixedIntegerProgram mip = EvaluationMilp(game, portfolio, req.value);

  // The restricted equilibrium with its best response is a feasible start.
  const int m = game.rows();
  const int n = game.cols();
  const auto br = equilibrium::BestResponse(game, req.row_strategy, Player::kColumn);
  std::vector<double> hint(m + 1 + n, 0.0);
  std::copy(req.row_strategy.probabilities.begin(), req.row_strategy.probabilities.end(),
            hint.begin());
  hint[m] = std::clamp(br.value, game.min_payoff(), game.max_payoff());
  hint[m + 1 + br.action] = 1.0;
  solver::MilpParams params;
  params.incumbent_hint = std::move(hint);

  solver::SolveResult res = solver::SolveMilp(mip, params);
  if (res.status != solver::SolveStatus::kOptimal) {
    throw SolverFailure(std::string("evaluation MILP not optimal: ") +
                        solver::ToString(res.status));
  }
  std::vector<double> x =
      CleanDistribution(std::span<const double>(res.primal).first(m));
  return Finish(game, value, req.value, std::move(x), res.objective_value);
}

PortfolioEvaluation OptimisticUtility(const MatrixGame& game,
                                      const Portfolio& portfolio,
                                      std::optional<double> game_value) {
  RequireUnitRange(game);
  const double value = game_value ? *game_value : equilibrium::GameValue(game).value;
  const MatrixGame restricted = Restrict(game, portfolio);
  const double vr = equilibrium::GameValue(restricted).value;
  const int m = game.rows();
  solver::LinearProgram lp;
  lp.sense = solver::Sense::kMaximize;
  for (int i = 0; i < m; ++i) lp.AddVariable(Bounds{0.0, 1.0});
  const int vo = lp.AddVariable(Bounds{game.min_payoff(), game.max_payoff()}, 1.0);
  AddRestrictedEquilibrium(lp, restricted, vr);
  std::vector<std::pair<int, double>> terms;
  for (int j = 0; j < game.cols(); ++j) {
    terms.clear();
    for (int i = 0; i < m; ++i) terms.emplace_back(i, -game(i, j));
    terms.emplace_back(vo, 1.0);
    lp.AddConstraint(terms, Relation::kLessEqual, 0.0);
  }
  solver::SolveResult res = solver::SolveLp(lp);
  if (res.status != solver::SolveStatus::kOptimal) {
    throw SolverFailure(std::string("optimistic LP not optimal: ") +
                        solver::ToString(res.status));
  }
  std::vector<double> x =
      CleanDistribution(std::span<const double>(res.primal).first(m));
  return Finish(game, value, vr, std::move(x), res.objective_value);
}

PortfolioEvaluation RmUtility(const MatrixGame& game, const Portfolio& portfolio,
                              int iterations, std::optional<double> game_value) {
  RequireUnitRange(game);
  const double value = game_value ? *game_value : equilibrium::GameValue(game).value;
  const MatrixGame restricted = Restrict(game, portfolio);
  equilibrium::RmPlusState state = equilibrium::RmPlus(restricted, iterations);
  const auto br = equilibrium::BestResponse(game, state.row_average, Player::kColumn);
  const double vr = ExpectedPayoff(restricted, state.row_average.probabilities,
                                   state.column_average.probabilities);
  return Finish(game, value, vr, std::move(state.row_average.probabilities), br.value);
}

PortfolioEvaluation Evaluate(const MatrixGame& game, const Portfolio& portfolio,
                             const SelectionFunction& selection,
                             std::optional<double> game_value) {
  selection.Validate();
  switch (selection.kind) {
    case SelectionKind::kPessimistic:
      return PessimisticUtility(game, portfolio, game_value);
    case SelectionKind::kOptimistic:
      return OptimisticUtility(game, portfolio, game_value);
    case SelectionKind::kRmPlus:
      return RmUtility(game, portfolio, selection.iterations, game_value);
  }
  throw ParameterError("unknown selection function");
}

double Exploitability(const MatrixGame& game, const Portfolio& portfolio,
                      const SelectionFunction& selection,
                      std::optional<double> game_value) {
  return Evaluate(game, portfolio, selection, game_value).exploitability;
}

double ToRawUnits(const MatrixGame& game, double difference) {
  return difference * game.denorm_scale();
}

}  // namespace portfolio
