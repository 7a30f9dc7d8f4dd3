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

#ifndef PORTFOLIO_SOLVER_H_
#define PORTFOLIO_SOLVER_H_

// Dense two-phase simplex for small linear programs and a best-first
// branch-and-bound on top of it for programs with binary variables.
//
// Models are plain value types. Variables carry (possibly infinite) bounds,
// constraints are dense coefficient rows with a relation and a right-hand
// side. Every solve is single-threaded and a pure function of its input, so
// independent models can be solved concurrently.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "portfolio/errors.h"

namespace portfolio::solver {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Tolerances shared by the LP and MILP engines.
inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kIntegralityTolerance = 1e-7;
inline constexpr double kDefaultGapTolerance = 1e-6;

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Bounds {
  double lower = 0.0;
  double upper = kInfinity;
};

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::vector<Bounds> bounds;
  // Optional, only used by the LP-format writer.
  std::vector<std::string> names;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }

  // Appends a variable and returns its index. Existing constraint rows are
  // padded with a zero coefficient.
  int AddVariable(Bounds bounds, double cost = 0.0, std::string name = {});

  // Sparse helper: unspecified coefficients are zero.
  void AddConstraint(std::span<const std::pair<int, double>> terms,
                     Relation relation, double rhs);
  void AddConstraint(std::initializer_list<std::pair<int, double>> terms,
                     Relation relation, double rhs);
  void AddDenseConstraint(std::vector<double> coefficients, Relation relation,
                          double rhs);

  // Throws ModelError when a row has the wrong length, a value is not finite
  // where it must be, or lower > upper.
  void Validate() const;
};

struct MixedIntegerProgram {
  LinearProgram base;
  // Variables restricted to {0, 1}. Their bounds must lie within [0, 1].
  std::vector<int> binary_indices;

  void Validate() const;
};

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  double objective_value = 0.0;
  std::vector<double> primal;
  // One multiplier per constraint, LP solves only. Convention: the reduced
  // costs c - A^T y are nonnegative at variables resting on their lower bound
  // for a minimization (and nonpositive for a maximization).
  std::optional<std::vector<double>> dual;
  // Simplex pivots (LP) or branch-and-bound nodes (MILP).
  std::int64_t iterations = 0;
};

SolveResult SolveLp(const LinearProgram& lp);

// Same as SolveLp with the variable bounds replaced by `bounds`.
SolveResult SolveLpWithBounds(const LinearProgram& lp,
                              std::span<const Bounds> bounds);

struct MilpParams {
  std::int64_t node_limit = 200000;
  double gap_tolerance = kDefaultGapTolerance;
  // Optional starting incumbent. Ignored when it is not feasible.
  std::optional<std::vector<double>> incumbent_hint;
};

// Raised when the node budget is exhausted before optimality is proven.
class NodeLimitReached : public ResourceError {
 public:
  NodeLimitReached(std::string what, std::optional<SolveResult> incumbent,
                   double best_bound)
      : ResourceError(std::move(what)),
        incumbent_(std::move(incumbent)),
        best_bound_(best_bound) {}

  const std::optional<SolveResult>& incumbent() const { return incumbent_; }
  // Best proven bound on the optimum, in the model's own objective sense.
  double best_bound() const { return best_bound_; }

 private:
  std::optional<SolveResult> incumbent_;
  double best_bound_;
};

SolveResult SolveMilp(const MixedIntegerProgram& mip,
                      const MilpParams& params = {});

// Largest violation of any constraint or bound by `x`.
double MaxViolation(const LinearProgram& lp, std::span<const double> x);

// Objective of the dual built from `result.dual` and the variable bounds:
// y.b + sum_j d_j * (bound that d_j prices). Returns NaN when the duals are not
// dual feasible (a nonzero reduced cost on an infinite bound).
double DualObjective(const LinearProgram& lp, const SolveResult& result,
                     double tolerance = 1e-7);

double Evaluate(const LinearProgram& lp, std::span<const double> x);

}  // namespace portfolio::solver

#endif  // PORTFOLIO_SOLVER_H_
