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

#include "portfolio/fixture_checks.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "portfolio/equilibrium.h"
#include "portfolio/evaluation.h"
#include "portfolio/fixtures.h"
#include "portfolio/matrix_game.h"
#include "portfolio/portfolio.h"

namespace portfolio::bench {
namespace {

FixtureCheck Check(std::string name, double expected, double actual,
                   std::string relation = "==") {
  FixtureCheck c;
  c.name = std::move(name);
  c.expected = expected;
  c.actual = actual;
  c.relation = std::move(relation);
  c.passed = c.relation == ">=" ? actual >= expected - c.tolerance
                                : std::abs(actual - expected) <= c.tolerance;
  return c;
}

MatrixGame Unit(const MatrixGame& g) { return g.within_unit_range() ? g : Normalize(g); }

// Raw-unit exploitability of a pure portfolio.
double PureEx(const MatrixGame& game, std::vector<int> cols,
              SelectionFunction sel = SelectionFunction::Pessimistic()) {
  const MatrixGame g = Unit(game);
  return ToRawUnits(g, Exploitability(g, Portfolio::FromColumns(g.cols(), cols), sel));
}

double MixedEx(const MatrixGame& game, std::vector<std::vector<double>> strategies,
               SelectionFunction sel) {
  const MatrixGame g = Unit(game);
  return ToRawUnits(g, Exploitability(g, Portfolio(std::move(strategies)), sel));
}

}  // namespace

std::vector<FixtureCheck> VerifyFixtures() {
  using namespace games;
  std::vector<FixtureCheck> out;

  const MatrixGame t2 = Theorem2Game();
  out.push_back(Check("theorem_2 game value", 0.5, equilibrium::GameValue(t2).value));
  out.push_back(Check("theorem_2 ex_PES({e3})", 0.5, PureEx(t2, {2})));

  const double delta = 0.1;
  const MatrixGame t3 = Theorem3Game(delta);
  const double t3_expected[] = {0.5 - delta, 0.5 - delta, 0.5};
  for (int j = 0; j < 3; ++j) {
    out.push_back(Check("theorem_3(0.1) ex_PES({" + std::to_string(j) + "})", t3_expected[j],
                        PureEx(t3, {j})));
  }

  const MatrixGame inc = IncrementalGame();
  out.push_back(Check("incremental ex_PES({b0,b1})", 0.0, PureEx(inc, {0, 1})));
  out.push_back(Check("incremental ex_PES({b0,b1,b2})", 1.0, PureEx(inc, {0, 1, 2})));
  out.push_back(Check("incremental ex_PES({b0,b1,b3})", 1.0, PureEx(inc, {0, 1, 3})));

  for (int n = 2; n <= 4; ++n) {
    out.push_back(Check("rank_game(" + std::to_string(n) + ") ex_PES({last})", 0.0,
                        PureEx(RankGame(n), {RankGame(n).cols() - 1})));
  }

  const MatrixGame rps = RockPaperScissors();
  for (const SelectionFunction& sel :
       {SelectionFunction::Pessimistic(), SelectionFunction::Optimistic()}) {
    const std::string tag = sel.kind == SelectionKind::kPessimistic ? "PES" : "OPT";
    out.push_back(Check("rps ex_" + tag + "({R,P})", 2.0 / 3.0, PureEx(rps, {0, 1}, sel)));
    out.push_back(Check("rps ex_" + tag + "({(1/2,1/2,0),(0,1/2,1/2)})", 1.0 / 3.0,
                        MixedEx(rps, {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}}, sel)));
  }

  for (int n = 3; n <= 5; ++n) {
    const MatrixGame neg = NegIdentityGame(n);
    for (int k = 1; k < n; ++k) {
      // Worst case over all size-k subsets.
      double lo = 1e300, hi = -1e300;
      std::vector<int> cols(k);
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + k, true);
      do {
        cols.clear();
        for (int j = 0; j < n; ++j) {
          if (pick[j]) cols.push_back(j);
        }
        const double ex = PureEx(neg, cols);
        lo = std::min(lo, ex);
        hi = std::max(hi, ex);
      } while (std::prev_permutation(pick.begin(), pick.end()));
      const std::string tag =
          "neg_identity(" + std::to_string(n) + ") k=" + std::to_string(k);
      out.push_back(Check(tag + " min ex_PES bound", double(n - k) / (n * k), lo, ">="));
      out.push_back(Check(tag + " min ex_PES", 1.0 - 1.0 / n, lo));
      out.push_back(Check(tag + " max ex_PES", 1.0 - 1.0 / n, hi));
    }
  }
  return out;
}

std::string FormatReport(const std::vector<FixtureCheck>& checks) {
  std::string s;
  int failed = 0;
  for (const FixtureCheck& c : checks) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s  %-48s expected %s %.9g  actual %.9g\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.relation.c_str(), c.expected,
                  c.actual);
    s += buf;
    if (!c.passed) ++failed;
  }
  s += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
       " fixture checks passed\n";
  return s;
}

}  // namespace portfolio::bench
