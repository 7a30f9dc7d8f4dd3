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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "portfolio/construction.h"
#include "portfolio/equilibrium.h"
#include "portfolio/evaluation.h"
#include "portfolio/fixture_checks.h"
#include "portfolio/fixtures.h"
#include "portfolio/generators.h"
#include "portfolio/rm_plus.h"
#include "portfolio/solver.h"
#include "support/milp_oracle.h"
#include "support/portfolio_oracle.h"

namespace {

using namespace portfolio;
using construct::ConstructionResult;

// Tolerances.
constexpr double kExact = 1e-6;
constexpr double kRmTol = 0.02;
constexpr double kRmZeroTol = 0.01;
constexpr double kFig2Ratio = 0.75;
constexpr int kRmIterations = 10000;

const SelectionFunction kPes = SelectionFunction::Pessimistic();
const SelectionFunction kOpt = SelectionFunction::Optimistic();
const SelectionFunction kRm = SelectionFunction::RmPlus(kRmIterations);

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void Expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (notes.size() < 12) notes.push_back("violated: " + what);
    }
  }
  void Note(const std::string& s) { notes.push_back(s); }
};

std::string F(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string F(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

double RawPureEx(const MatrixGame& game, std::vector<int> cols,
                 const SelectionFunction& sel = kPes) {
  const MatrixGame g = game.within_unit_range() ? game : Normalize(game);
  return ToRawUnits(g, Exploitability(g, Portfolio::FromColumns(g.cols(), cols), sel));
}

// 1. Fixture suite.
Outcome FixtureSuite() {
  Outcome o;
  for (const auto& c : bench::VerifyFixtures()) {
    if (c.name.rfind("neg_identity", 0) == 0) continue;
    o.Expect(c.passed, F("%s expected %.9g actual %.9g", c.name.c_str(), c.expected, c.actual));
  }
  return o;
}

// 2. Lower bound on -I_n, brute force over subsets.
Outcome NegIdentityBound() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    const MatrixGame g = games::NegIdentityGame(n);
    for (int k = 1; k < n; ++k) {
      const double bound = double(n - k) / (n * k);
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + k, true);
      do {
        std::vector<int> cols;
        for (int j = 0; j < n; ++j) {
          if (pick[j]) cols.push_back(j);
        }
        const double ex = RawPureEx(g, cols);
        o.Expect(ex >= bound - kExact, F("n=%d k=%d ex %.9g < bound %.9g", n, k, ex, bound));
        o.Expect(std::abs(ex - (1.0 - 1.0 / n)) <= kExact,
                 F("n=%d k=%d ex %.9g != 1-1/n", n, k, ex));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return o;
}

// 3. Bound soundness and method ordering.
Outcome BoundSoundness() {
  Outcome o;
  int mixed_above_pure = 0, pure_above_greedy = 0, unsound = 0, cells = 0, unproven = 0;
  double worst_mixed_gap = 0.0;
  const int sizes[] = {5, 10, 15};
  for (int seed = 0; seed < 100; ++seed) {
    const int n = sizes[seed % 3];
    const MatrixGame g = games::RandomGame(n, n, static_cast<std::uint64_t>(seed));
    const double value = equilibrium::GameValue(g).value;
    for (int k = 1; k <= 5; ++k) {
      ++cells;
      const ConstructionResult pure = construct::EpsDomPure(g, k);
      const ConstructionResult mixed = construct::EpsDomMixed(g, k);
      const ConstructionResult greedy = construct::GreedyK(g, k);
      unproven += !pure.proven_optimal + !mixed.proven_optimal;
      const double ex_pure = Exploitability(g, pure.portfolio, kPes, value);
      const double ex_mixed = Exploitability(g, mixed.portfolio, kPes, value);
      const std::string where = F("seed %d n=%d k=%d", seed, n, k);
      if (ex_pure > *pure.epsilon_bound + kExact || ex_mixed > *mixed.epsilon_bound + kExact) {
        ++unsound;
        o.Expect(false, where + F(": ex above eps (pure %.6g/%.6g, mixed %.6g/%.6g)", ex_pure,
                                  *pure.epsilon_bound, ex_mixed, *mixed.epsilon_bound));
      }
      if (*mixed.epsilon_bound > *pure.epsilon_bound + kExact) {
        ++mixed_above_pure;
        worst_mixed_gap = std::max(worst_mixed_gap, *mixed.epsilon_bound - *pure.epsilon_bound);
        o.Expect(false, where + F(": mixed eps %.6g > pure eps %.6g", *mixed.epsilon_bound,
                                  *pure.epsilon_bound));
      }
      if (*pure.epsilon_bound > *greedy.epsilon_bound + kExact) {
        ++pure_above_greedy;
        o.Expect(false, where + F(": pure eps %.6g > greedy eps %.6g", *pure.epsilon_bound,
                                  *greedy.epsilon_bound));
      }
    }
  }
  o.Note(F("%d cells: ex>eps %d, mixed>pure %d (worst gap %.4g), pure>greedy %d, "
           "unproven searches %d",
           cells, unsound, mixed_above_pure, worst_mixed_gap, pure_above_greedy, unproven));
  return o;
}

// 4. Epsilon sweep trend.
Outcome EpsilonSweep() {
  Outcome o;
  for (int n : {5, 10}) {
    std::vector<double> grid;
    for (int t = 1; t <= 10; ++t) grid.push_back(t / 10.0);
    std::vector<double> mean_ex(grid.size(), 0.0), mean_k(grid.size(), 0.0);
    const int games = 50;
    for (int seed = 0; seed < games; ++seed) {
      const MatrixGame g = games::RandomGame(n, n, static_cast<std::uint64_t>(seed));
      const double value = equilibrium::GameValue(g).value;
      int previous_k = n + 1;
      for (std::size_t t = 0; t < grid.size(); ++t) {
        const ConstructionResult r = construct::EpsDomMinSize(g, grid[t]);
        const double ex = Exploitability(g, r.portfolio, kPes, value);
        mean_ex[t] += ex / games;
        mean_k[t] += double(r.portfolio.k()) / games;
        o.Expect(r.portfolio.k() <= previous_k,
                 F("n=%d seed %d: size grows at eps %.1f", n, seed, grid[t]));
        previous_k = r.portfolio.k();
      }
    }
    double ratio = 0.0;
    for (std::size_t t = 0; t < grid.size(); ++t) {
      o.Expect(mean_ex[t] <= grid[t] + kExact,
               F("n=%d eps %.1f: mean ex %.4g", n, grid[t], mean_ex[t]));
      if (t) o.Expect(mean_k[t] <= mean_k[t - 1] + 1e-12, F("n=%d mean size grows", n));
      ratio += mean_ex[t] / grid[t] / grid.size();
    }
    o.Expect(ratio <= kFig2Ratio, F("n=%d mean ex/eps %.4g > %.2f", n, ratio, kFig2Ratio));
    std::string curve;
    for (std::size_t t = 0; t < grid.size(); ++t) {
      curve += F(" %.1f:%.3f/%.2f", grid[t], mean_ex[t], mean_k[t]);
    }
    o.Note(F("n=%d ratio %.4g; eps:ex/size", n, ratio) + curve);
  }
  return o;
}

// 5. Structured games under RM+ selection.
Outcome StructuredSpotChecks() {
  Outcome o;
  auto gate = [&](const std::string& what, double ex, double target) {
    const double tol = target == 0.0 ? kRmZeroTol : kRmTol;
    o.Expect(std::abs(ex - target) <= tol, F("%s ex %.4g target %.4g", what.c_str(), ex, target));
    o.Note(F("%s %.4g", what.c_str(), ex));
  };
  auto mixed_ex = [](const MatrixGame& g, int k) {
    return Exploitability(g, construct::EpsDomMixed(g, k).portfolio, kRm);
  };
  auto brute_ex = [](const MatrixGame& g, int k) {
    return *construct::BruteForcePure(g, k, kRm).exploitability;
  };

  const MatrixGame goof = games::Goofspiel3();
  for (int k = 1; k <= 3; ++k) {
    gate(F("goofspiel3 brute_force_pure k=%d", k), brute_ex(goof, k), 0.0);
    gate(F("goofspiel3 eps_dom_mixed k=%d", k), mixed_ex(goof, k), 0.0);
  }
  const MatrixGame kuhn2 = games::KuhnPoker(2.0);
  gate("kuhn(2) brute_force_pure k=2", brute_ex(kuhn2, 2), 0.0);
  gate("kuhn(2) eps_dom_mixed k=2", mixed_ex(kuhn2, 2), 0.0);
  const MatrixGame kuhn3 = games::KuhnPoker(3.0);
  gate("kuhn(3) eps_dom_mixed k=1", mixed_ex(kuhn3, 1), 0.0);

  // Reported only.
  const MatrixGame blotto = games::Blotto(3, 6);
  for (int k = 1; k <= 3; ++k) {
    o.Note(F("blotto(3,6) eps_dom_mixed k=%d %.4g (ungated)", k, mixed_ex(blotto, k)));
  }
  return o;
}

double RmExploitability(const MatrixGame& g) {
  const auto s = equilibrium::RmPlus(g, kRmIterations);
  const auto& x = s.row_average.probabilities;
  const auto& y = s.column_average.probabilities;
  double row_worst = 1e300, col_worst = -1e300;
  for (int j = 0; j < g.cols(); ++j) {
    double v = 0.0;
    for (int i = 0; i < g.rows(); ++i) v += x[i] * g(i, j);
    row_worst = std::min(row_worst, v);
  }
  for (int i = 0; i < g.rows(); ++i) {
    double v = 0.0;
    for (int j = 0; j < g.cols(); ++j) v += y[j] * g(i, j);
    col_worst = std::max(col_worst, v);
  }
  // NashConv of the average profile.
  return col_worst - row_worst;
}

// 6. Oracle equivalences.
Outcome OracleEquivalences() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int binaries = 1 + static_cast<int>(rng() % 12);
    const auto mip = testing::RandomMilp(rng, binaries);
    const auto expected = testing::EnumerateMilp(mip);
    const auto got = solver::SolveMilp(mip);
    o.Expect(expected && got.status == solver::SolveStatus::kOptimal &&
                 std::abs(got.objective_value - *expected) <= kExact,
             F("milp %d: %.9g vs enumeration %.9g", trial, got.objective_value,
               expected.value_or(NAN)));
  }

  int accepted = 0, tried = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 0; accepted < 50 && tried < 1000; ++seed, ++tried) {
    const int n = 3 + static_cast<int>(seed % 6);
    const MatrixGame g = games::RandomGame(n, n, seed);
    const Portfolio p = seed % 2 ? construct::RandomMixed(g, 2 + seed % 3, seed).portfolio
                                 : construct::GreedyK(g, 2 + seed % 3).portfolio;
    if (!testing::RestrictedEquilibriumIsUnique(g, p)) continue;
    ++accepted;
    const double milp = PessimisticUtility(g, p).utility;
    const double oracle = testing::UniqueEquilibriumUtility(g, p);
    worst = std::max(worst, std::abs(milp - oracle));
    o.Expect(std::abs(milp - oracle) <= kExact,
             F("seed %llu: milp %.9g vs oracle %.9g", (unsigned long long)seed, milp, oracle));
  }
  o.Expect(accepted == 50, F("only %d unique-equilibrium games found", accepted));
  o.Note(F("%d unique-NE games (of %d), worst gap %.3g", accepted, tried, worst));

  const double rps = RmExploitability(games::RockPaperScissors());
  const double pennies = RmExploitability(games::MatchingPennies());
  o.Expect(rps <= kRmTol, F("rps RM+ %.4g", rps));
  o.Expect(pennies <= kRmTol, F("matching pennies RM+ %.4g", pennies));
  o.Note(F("RM+ NashConv rps %.3g, matching pennies %.3g", rps, pennies));
  return o;
}

// 7. Bracketing of the selection functions.
Outcome Bracketing() {
  Outcome o;
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const MatrixGame g = games::RandomGame(10, 10, seed);
    const double value = equilibrium::GameValue(g).value;
    const Portfolio p = construct::RandomMixed(g, 3, seed).portfolio;
    const double opt = Exploitability(g, p, kOpt, value);
    const double rm = Exploitability(g, p, kRm, value);
    const double pes = Exploitability(g, p, kPes, value);
    const bool ok = opt <= rm + kRmTol && rm <= pes + kRmTol;
    violations += !ok;
    o.Expect(ok, F("seed %llu: opt %.4g rm %.4g pes %.4g", (unsigned long long)seed, opt, rm,
                   pes));
  }
  o.Note(F("%d/50 violations", violations));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"fixture suite", FixtureSuite},
      {"neg_identity lower bound", NegIdentityBound},
      {"bound soundness and method ordering", BoundSoundness},
      {"epsilon sweep trend", EpsilonSweep},
      {"structured games under RM+", StructuredSpotChecks},
      {"oracle equivalences", OracleEquivalences},
      {"selection bracketing", Bracketing},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[c].run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1fs)\n", o.passed ? "PASS" : "FAIL", c + 1,
                criteria[c].title, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.passed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
