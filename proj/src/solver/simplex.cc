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

// Dense tableau implementation of the two-phase primal simplex method.
//
// The model is brought to the internal form
//   min c'x'  s.t.  A'x' (<=,=,>=) b',  b' >= 0,  x' >= 0
// by shifting, negating or splitting variables. Finite upper bounds become
// explicit rows. Every row owns one identity column (its slack for <= rows,
// an artificial otherwise) so that B^-1 and the row duals can be read off
// the final tableau.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "portfolio/solver.h"

namespace portfolio::solver {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kReducedCostTolerance = 1e-9;
constexpr double kRatioTieTolerance = 1e-12;
// Consecutive degenerate pivots before switching to Bland's rule.
constexpr int kStallLimit = 25;

enum class VarKind { kFixed, kShift, kNegate, kFree };

struct VarMap {
  VarKind kind = VarKind::kShift;
  int column = -1;
  int column2 = -1;
  double offset = 0.0;
};

class Simplex {
 public:
  Simplex(int rows, int columns)
      : rows_(rows),
        columns_(columns),
        width_(columns + 1),
        table_(static_cast<std::size_t>(rows) * width_, 0.0),
        basis_(rows, -1) {}

  double* Row(int r) { return table_.data() + static_cast<std::size_t>(r) * width_; }
  double& At(int r, int c) { return Row(r)[c]; }
  double Rhs(int r) { return Row(r)[columns_]; }
  int rows() const { return rows_; }
  int columns() const { return columns_; }
  std::vector<int>& basis() { return basis_; }

  // Objective rows hold reduced costs in [0, columns) and minus the current
  // objective value at index `columns`.
  void AddObjectiveRow(std::vector<double>* row) { objectives_.push_back(row); }
  void ClearObjectiveRows() { objectives_.clear(); }

  void Pivot(int r, int e) {
    double* pivot_row = Row(r);
    const double inv = 1.0 / pivot_row[e];
    nonzeros_.clear();
    for (int c = 0; c <= columns_; ++c) {
      if (pivot_row[c] != 0.0) {
        pivot_row[c] *= inv;
        nonzeros_.push_back(c);
      }
    }
    pivot_row[e] = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      double* row = Row(i);
      const double factor = row[e];
      if (factor == 0.0) continue;
      for (int c : nonzeros_) row[c] -= factor * pivot_row[c];
      row[e] = 0.0;
    }
    for (std::vector<double>* objective : objectives_) {
      double* row = objective->data();
      const double factor = row[e];
      if (factor == 0.0) continue;
      for (int c : nonzeros_) row[c] -= factor * pivot_row[c];
      row[e] = 0.0;
    }
    basis_[r] = e;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Minimizes the objective described by `z` over columns [0, eligible).
  Outcome Run(std::vector<double>& z, int eligible, std::int64_t cap,
              std::int64_t* iterations) {
    int degenerate_streak = 0;
    while (true) {
      if (*iterations >= cap) {
        throw SolverFailure("simplex iteration cap of " + std::to_string(cap) +
                            " reached");
      }
      const bool bland = degenerate_streak >= kStallLimit;
      int entering = -1;
      double most_negative = -kReducedCostTolerance;
      for (int c = 0; c < eligible; ++c) {
        if (z[c] < most_negative) {
          entering = c;
          if (bland) break;
          most_negative = z[c];
        }
      }
      if (entering < 0) return Outcome::kOptimal;

      int leaving = -1;
      double best_ratio = kInfinity;
      double best_pivot = 0.0;
      for (int i = 0; i < rows_; ++i) {
        const double a = At(i, entering);
        if (a <= kPivotTolerance) continue;
        const double ratio = std::max(0.0, Rhs(i)) / a;
        bool take = false;
        if (leaving < 0 || ratio < best_ratio - kRatioTieTolerance) {
          take = true;
        } else if (ratio <= best_ratio + kRatioTieTolerance) {
          take = bland ? basis_[i] < basis_[leaving] : a > best_pivot;
        }
        if (take) {
          leaving = i;
          best_ratio = ratio;
          best_pivot = a;
        }
      }
      if (leaving < 0) return Outcome::kUnbounded;
      degenerate_streak = best_ratio <= kRatioTieTolerance ? degenerate_streak + 1 : 0;
      Pivot(leaving, entering);
      ++*iterations;
    }
  }

 private:
  int rows_;
  int columns_;
  int width_;
  std::vector<double> table_;
  std::vector<int> basis_;
  std::vector<std::vector<double>*> objectives_;
  std::vector<int> nonzeros_;
};

}  // namespace

SolveResult SolveLp(const LinearProgram& lp) {
  return SolveLpWithBounds(lp, lp.bounds);
}

SolveResult SolveLpWithBounds(const LinearProgram& lp,
                              std::span<const Bounds> bounds) {
  {
    LinearProgram probe;
    probe.objective = lp.objective;
    probe.bounds.assign(bounds.begin(), bounds.end());
    if (probe.bounds.size() != lp.objective.size()) {
      throw ModelError("bounds override has the wrong length");
    }
    // Validate the override bounds and the constraint rows.
    probe.Validate();
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
      if (lp.constraints[r].coefficients.size() != lp.objective.size()) {
        throw ModelError("constraint " + std::to_string(r) + " has " +
                         std::to_string(lp.constraints[r].coefficients.size()) +
                         " coefficients for " +
                         std::to_string(lp.objective.size()) + " variables");
      }
      if (!std::isfinite(lp.constraints[r].rhs)) {
        throw ModelError("constraint " + std::to_string(r) +
                         " has a non-finite right-hand side");
      }
    }
  }

  const int n = lp.num_variables();
  const int m = lp.num_constraints();
  const double sense_sign = lp.sense == Sense::kMinimize ? 1.0 : -1.0;

  // Variable transformation.
  std::vector<VarMap> vars(n);
  std::vector<std::pair<int, double>> upper_rows;
  int structural = 0;
  for (int j = 0; j < n; ++j) {
    const double lo = bounds[j].lower;
    const double hi = bounds[j].upper;
    VarMap& v = vars[j];
    if (lo == hi) {
      v.kind = VarKind::kFixed;
      v.offset = lo;
    } else if (std::isfinite(lo)) {
      v.kind = VarKind::kShift;
      v.column = structural++;
      v.offset = lo;
      if (std::isfinite(hi)) upper_rows.emplace_back(v.column, hi - lo);
    } else if (std::isfinite(hi)) {
      v.kind = VarKind::kNegate;
      v.column = structural++;
      v.offset = hi;
    } else {
      v.kind = VarKind::kFree;
      v.column = structural++;
      v.column2 = structural++;
    }
  }

  const int rows = m + static_cast<int>(upper_rows.size());
  std::vector<double> coeff(static_cast<std::size_t>(rows) * structural, 0.0);
  std::vector<double> rhs(rows, 0.0);
  std::vector<Relation> relation(rows, Relation::kLessEqual);
  for (int r = 0; r < m; ++r) {
    const Constraint& row = lp.constraints[r];
    double* a = coeff.data() + static_cast<std::size_t>(r) * structural;
    double b = row.rhs;
    for (int j = 0; j < n; ++j) {
      const double value = row.coefficients[j];
      if (value == 0.0) continue;
      const VarMap& v = vars[j];
      switch (v.kind) {
        case VarKind::kFixed:
          b -= value * v.offset;
          break;
        case VarKind::kShift:
          a[v.column] += value;
          b -= value * v.offset;
          break;
        case VarKind::kNegate:
          a[v.column] -= value;
          b -= value * v.offset;
          break;
        case VarKind::kFree:
          a[v.column] += value;
          a[v.column2] -= value;
          break;
      }
    }
    rhs[r] = b;
    relation[r] = row.relation;
  }
  for (std::size_t u = 0; u < upper_rows.size(); ++u) {
    const int r = m + static_cast<int>(u);
    coeff[static_cast<std::size_t>(r) * structural + upper_rows[u].first] = 1.0;
    rhs[r] = upper_rows[u].second;
  }
  std::vector<bool> flipped(rows, false);
  for (int r = 0; r < rows; ++r) {
    if (rhs[r] < 0.0) {
      flipped[r] = true;
      rhs[r] = -rhs[r];
      double* a = coeff.data() + static_cast<std::size_t>(r) * structural;
      for (int c = 0; c < structural; ++c) a[c] = -a[c];
      if (relation[r] == Relation::kLessEqual) {
        relation[r] = Relation::kGreaterEqual;
      } else if (relation[r] == Relation::kGreaterEqual) {
        relation[r] = Relation::kLessEqual;
      }
    }
  }

  int slacks = 0;
  int artificials = 0;
  for (int r = 0; r < rows; ++r) {
    if (relation[r] != Relation::kEqual) ++slacks;
    if (relation[r] != Relation::kLessEqual) ++artificials;
  }
  const int slack_start = structural;
  const int artificial_start = structural + slacks;
  const int total = artificial_start + artificials;

  Simplex simplex(rows, total);
  std::vector<int> identity(rows, -1);
  {
    int next_slack = slack_start;
    int next_artificial = artificial_start;
    for (int r = 0; r < rows; ++r) {
      double* row = simplex.Row(r);
      std::copy_n(coeff.data() + static_cast<std::size_t>(r) * structural,
                  structural, row);
      row[total] = rhs[r];
      if (relation[r] == Relation::kLessEqual) {
        row[next_slack] = 1.0;
        identity[r] = next_slack++;
      } else {
        if (relation[r] == Relation::kGreaterEqual) row[next_slack++] = -1.0;
        row[next_artificial] = 1.0;
        identity[r] = next_artificial++;
      }
      simplex.basis()[r] = identity[r];
    }
  }

  std::vector<double> cost(total + 1, 0.0);
  for (int j = 0; j < n; ++j) {
    const VarMap& v = vars[j];
    const double c = sense_sign * lp.objective[j];
    switch (v.kind) {
      case VarKind::kFixed:
        break;
      case VarKind::kShift:
        cost[v.column] += c;
        break;
      case VarKind::kNegate:
        cost[v.column] -= c;
        break;
      case VarKind::kFree:
        cost[v.column] += c;
        cost[v.column2] -= c;
        break;
    }
  }

  SolveResult result;
  const std::int64_t cap = 50LL * (total + rows);
  std::int64_t iterations = 0;

  if (artificials > 0) {
    std::vector<double> phase1(total + 1, 0.0);
    for (int c = artificial_start; c < total; ++c) phase1[c] = 1.0;
    for (int r = 0; r < rows; ++r) {
      if (simplex.basis()[r] < artificial_start) continue;
      const double* row = simplex.Row(r);
      for (int c = 0; c <= total; ++c) phase1[c] -= row[c];
    }
    simplex.AddObjectiveRow(&phase1);
    simplex.AddObjectiveRow(&cost);
    simplex.Run(phase1, artificial_start, cap, &iterations);
    double scale = 1.0;
    for (double b : rhs) scale = std::max(scale, std::abs(b));
    if (-phase1[total] > kFeasibilityTolerance * scale) {
      result.status = SolveStatus::kInfeasible;
      result.iterations = iterations;
      return result;
    }
    simplex.ClearObjectiveRows();
    simplex.AddObjectiveRow(&cost);
    // Drive remaining artificials out of the basis. Rows where that is
    // impossible are redundant and keep a zero-valued artificial.
    for (int r = 0; r < rows; ++r) {
      if (simplex.basis()[r] < artificial_start) continue;
      const double* row = simplex.Row(r);
      int best = -1;
      double best_abs = kPivotTolerance;
      for (int c = 0; c < artificial_start; ++c) {
        if (std::abs(row[c]) > best_abs) {
          best_abs = std::abs(row[c]);
          best = c;
        }
      }
      if (best >= 0) {
        simplex.Pivot(r, best);
        ++iterations;
      }
    }
  } else {
    simplex.AddObjectiveRow(&cost);
  }

  const auto outcome = simplex.Run(cost, artificial_start, cap, &iterations);
  result.iterations = iterations;
  if (outcome == Simplex::Outcome::kUnbounded) {
    result.status = SolveStatus::kUnbounded;
    return result;
  }

  std::vector<double> internal(total, 0.0);
  for (int r = 0; r < rows; ++r) {
    internal[simplex.basis()[r]] = std::max(0.0, simplex.Rhs(r));
  }
  result.primal.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const VarMap& v = vars[j];
    double x = 0.0;
    switch (v.kind) {
      case VarKind::kFixed:
        x = v.offset;
        break;
      case VarKind::kShift:
        x = v.offset + internal[v.column];
        break;
      case VarKind::kNegate:
        x = v.offset - internal[v.column];
        break;
      case VarKind::kFree:
        x = internal[v.column] - internal[v.column2];
        break;
    }
    x = std::clamp(x, bounds[j].lower, bounds[j].upper);
    result.primal[j] = x;
  }

  std::vector<double> dual(m, 0.0);
  for (int r = 0; r < m; ++r) {
    double y = -cost[identity[r]];
    if (flipped[r]) y = -y;
    dual[r] = sense_sign * y;
  }
  result.dual = std::move(dual);
  result.status = SolveStatus::kOptimal;
  result.objective_value = Evaluate(lp, result.primal);
  return result;
}

}  // namespace portfolio::solver
