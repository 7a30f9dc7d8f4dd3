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
#include <cmath>
#include <string>

#include "portfolio/solver.h"

namespace portfolio::solver {

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

int LinearProgram::AddVariable(Bounds b, double cost, std::string name) {
  objective.push_back(cost);
  bounds.push_back(b);
  if (!name.empty() || !names.empty()) {
    names.resize(objective.size() - 1);
    names.push_back(std::move(name));
  }
  for (Constraint& row : constraints) row.coefficients.push_back(0.0);
  return num_variables() - 1;
}

void LinearProgram::AddConstraint(std::span<const std::pair<int, double>> terms,
                                  Relation relation, double rhs) {
  Constraint row;
  row.coefficients.assign(objective.size(), 0.0);
  for (const auto& [index, value] : terms) {
    if (index < 0 || index >= num_variables()) {
      throw ModelError("constraint references variable " +
                       std::to_string(index) + " of " +
                       std::to_string(num_variables()));
    }
    row.coefficients[index] += value;
  }
  row.relation = relation;
  row.rhs = rhs;
  constraints.push_back(std::move(row));
}

void LinearProgram::AddConstraint(
    std::initializer_list<std::pair<int, double>> terms, Relation relation,
    double rhs) {
  AddConstraint(std::span<const std::pair<int, double>>(terms.begin(),
                                                        terms.size()),
                relation, rhs);
}

void LinearProgram::AddDenseConstraint(std::vector<double> coefficients,
                                       Relation relation, double rhs) {
  constraints.push_back({std::move(coefficients), relation, rhs});
}

void LinearProgram::Validate() const {
  const std::size_t n = objective.size();
  if (bounds.size() != n) {
    throw ModelError("bounds has " + std::to_string(bounds.size()) +
                     " entries for " + std::to_string(n) + " variables");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(objective[j])) {
      throw ModelError("objective coefficient " + std::to_string(j) +
                       " is not finite");
    }
    if (std::isnan(bounds[j].lower) || std::isnan(bounds[j].upper) ||
        bounds[j].lower > bounds[j].upper ||
        bounds[j].lower == kInfinity || bounds[j].upper == -kInfinity) {
      throw ModelError("variable " + std::to_string(j) + " has invalid bounds");
    }
  }
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const Constraint& row = constraints[r];
    if (row.coefficients.size() != n) {
      throw ModelError("constraint " + std::to_string(r) + " has " +
                       std::to_string(row.coefficients.size()) +
                       " coefficients for " + std::to_string(n) +
                       " variables");
    }
    if (!std::isfinite(row.rhs) ||
        !std::all_of(row.coefficients.begin(), row.coefficients.end(),
                     [](double v) { return std::isfinite(v); })) {
      throw ModelError("constraint " + std::to_string(r) +
                       " has a non-finite value");
    }
  }
}

void MixedIntegerProgram::Validate() const {
  base.Validate();
  for (int index : binary_indices) {
    if (index < 0 || index >= base.num_variables()) {
      throw ModelError("binary index " + std::to_string(index) +
                       " out of range");
    }
    const Bounds& b = base.bounds[index];
    if (b.lower < 0.0 || b.upper > 1.0) {
      throw ModelError("binary variable " + std::to_string(index) +
                       " must have bounds within [0, 1]");
    }
  }
}

double Evaluate(const LinearProgram& lp, std::span<const double> x) {
  double value = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) value += lp.objective[j] * x[j];
  return value;
}

double MaxViolation(const LinearProgram& lp, std::span<const double> x) {
  if (static_cast<int>(x.size()) != lp.num_variables()) {
    throw DimensionError("assignment size does not match variable count");
  }
  double worst = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) {
    worst = std::max(worst, lp.bounds[j].lower - x[j]);
    worst = std::max(worst, x[j] - lp.bounds[j].upper);
  }
  for (const Constraint& row : lp.constraints) {
    double activity = 0.0;
    for (int j = 0; j < lp.num_variables(); ++j) {
      activity += row.coefficients[j] * x[j];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, activity - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - activity);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(activity - row.rhs));
        break;
    }
  }
  return worst;
}

double DualObjective(const LinearProgram& lp, const SolveResult& result,
                     double tolerance) {
  if (!result.dual.has_value() ||
      static_cast<int>(result.dual->size()) != lp.num_constraints()) {
    return std::nan("");
  }
  const std::vector<double>& y = *result.dual;
  // Work in minimization form: flipping the sense flips every multiplier.
  const double sign = lp.sense == Sense::kMinimize ? 1.0 : -1.0;
  double value = 0.0;
  std::vector<double> reduced(lp.num_variables());
  for (int j = 0; j < lp.num_variables(); ++j) {
    reduced[j] = sign * lp.objective[j];
  }
  for (int r = 0; r < lp.num_constraints(); ++r) {
    const Constraint& row = lp.constraints[r];
    const double yr = sign * y[r];
    if ((row.relation == Relation::kLessEqual && yr > tolerance) ||
        (row.relation == Relation::kGreaterEqual && yr < -tolerance)) {
      return std::nan("");
    }
    value += yr * row.rhs;
    for (int j = 0; j < lp.num_variables(); ++j) {
      reduced[j] -= yr * row.coefficients[j];
    }
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    const double d = reduced[j];
    if (d > tolerance) {
      if (!std::isfinite(lp.bounds[j].lower)) return std::nan("");
      value += d * lp.bounds[j].lower;
    } else if (d < -tolerance) {
      if (!std::isfinite(lp.bounds[j].upper)) return std::nan("");
      value += d * lp.bounds[j].upper;
    } else if (std::isfinite(lp.bounds[j].lower)) {
      value += d * lp.bounds[j].lower;
    } else if (std::isfinite(lp.bounds[j].upper)) {
      value += d * lp.bounds[j].upper;
    }
  }
  return sign * value;
}

}  // namespace portfolio::solver
