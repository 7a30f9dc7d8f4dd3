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

// Best-first branch-and-bound over binary variables. Node selection takes the
// smallest LP bound, breaking ties by depth (deeper first) and then by
// creation order; branching picks the most fractional binary (lowest index
// on ties). Integral LP solutions are polished by re-solving with every
// binary fixed, so returned binaries are exactly 0 or 1.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "portfolio/solver.h"

namespace portfolio::solver {
namespace {

struct Node {
  double bound;
  int depth;
  std::int64_t sequence;
  // -1 free, otherwise the fixed value, one entry per binary.
  std::vector<std::int8_t> fixing;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.sequence > b.sequence;
  }
};

std::vector<Bounds> NodeBounds(const LinearProgram& lp,
                               const std::vector<int>& binaries,
                               const std::vector<std::int8_t>& fixing) {
  std::vector<Bounds> bounds = lp.bounds;
  for (std::size_t b = 0; b < binaries.size(); ++b) {
    if (fixing[b] >= 0) {
      bounds[binaries[b]].lower = fixing[b];
      bounds[binaries[b]].upper = fixing[b];
    }
  }
  return bounds;
}

}  // namespace

SolveResult SolveMilp(const MixedIntegerProgram& mip, const MilpParams& params) {
  mip.Validate();
  const double sign = mip.base.sense == Sense::kMinimize ? 1.0 : -1.0;
  LinearProgram work = mip.base;
  work.sense = Sense::kMinimize;
  for (double& c : work.objective) c *= sign;
  const std::vector<int>& binaries = mip.binary_indices;

  std::optional<SolveResult> incumbent;
  double incumbent_value = kInfinity;
  std::int64_t nodes = 0;

  auto to_user = [&](SolveResult r) {
    r.objective_value = Evaluate(mip.base, r.primal);
    r.dual.reset();
    r.iterations = nodes;
    return r;
  };

  if (params.incumbent_hint.has_value()) {
    const std::vector<double>& hint = *params.incumbent_hint;
    bool usable = static_cast<int>(hint.size()) == work.num_variables() &&
                  MaxViolation(work, hint) <= kFeasibilityTolerance * 10;
    for (int b : binaries) {
      if (!usable) break;
      usable = hint[b] == 0.0 || hint[b] == 1.0;
    }
    if (usable) {
      SolveResult seeded;
      seeded.status = SolveStatus::kOptimal;
      seeded.primal = hint;
      seeded.objective_value = Evaluate(work, hint);
      incumbent_value = seeded.objective_value;
      incumbent = std::move(seeded);
    }
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::int64_t sequence = 0;
  open.push({-kInfinity, 0, sequence++,
             std::vector<std::int8_t>(binaries.size(), -1)});

  while (!open.empty()) {
    if (open.top().bound >= incumbent_value - params.gap_tolerance) break;
    if (nodes >= params.node_limit) {
      std::optional<SolveResult> best;
      if (incumbent) best = to_user(*incumbent);
      throw NodeLimitReached(
          "branch-and-bound node limit of " +
              std::to_string(params.node_limit) + " reached",
          std::move(best), sign * open.top().bound);
    }
    Node node = open.top();
    open.pop();

    const SolveResult relaxed =
        SolveLpWithBounds(work, NodeBounds(work, binaries, node.fixing));
    ++nodes;
    if (relaxed.status == SolveStatus::kInfeasible) continue;
    if (relaxed.status == SolveStatus::kUnbounded) {
      if (node.depth == 0) {
        SolveResult unbounded;
        unbounded.status = SolveStatus::kUnbounded;
        unbounded.iterations = nodes;
        return unbounded;
      }
      continue;
    }
    if (relaxed.objective_value >= incumbent_value - params.gap_tolerance) {
      continue;
    }

    int branch = -1;
    double best_fraction = kIntegralityTolerance;
    for (std::size_t b = 0; b < binaries.size(); ++b) {
      const double value = relaxed.primal[binaries[b]];
      const double fraction = std::abs(value - std::round(value));
      if (fraction > best_fraction + 1e-12) {
        best_fraction = fraction;
        branch = static_cast<int>(b);
      }
    }

    if (branch < 0) {
      std::vector<std::int8_t> fixing(binaries.size());
      for (std::size_t b = 0; b < binaries.size(); ++b) {
        fixing[b] = static_cast<std::int8_t>(
            std::lround(relaxed.primal[binaries[b]]));
      }
      SolveResult polished =
          SolveLpWithBounds(work, NodeBounds(work, binaries, fixing));
      ++nodes;
      if (polished.status != SolveStatus::kOptimal) continue;
      if (polished.objective_value < incumbent_value) {
        incumbent_value = polished.objective_value;
        incumbent = std::move(polished);
      }
      continue;
    }

    const double value = relaxed.primal[binaries[branch]];
    const std::int8_t first = value >= 0.5 ? 1 : 0;
    for (std::int8_t direction : {first, static_cast<std::int8_t>(1 - first)}) {
      Node child{relaxed.objective_value, node.depth + 1, sequence++,
                 node.fixing};
      child.fixing[branch] = direction;
      open.push(std::move(child));
    }
  }

  if (!incumbent) {
    SolveResult infeasible;
    infeasible.status = SolveStatus::kInfeasible;
    infeasible.iterations = nodes;
    return infeasible;
  }
  return to_user(*incumbent);
}

}  // namespace portfolio::solver
