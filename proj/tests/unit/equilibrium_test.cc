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
#include <numeric>
#include <vector>

#include "doctest.h"
#include "portfolio/dominance.h"
#include "portfolio/equilibrium.h"
#include "portfolio/errors.h"
#include "portfolio/fixtures.h"
#include "portfolio/generators.h"
#include "portfolio/matrix_game.h"
#include "portfolio/random.h"
#include "portfolio/rm_plus.h"

namespace portfolio::equilibrium {
namespace {

using games::Fixture;

// Certificate oracle: (x, y, v) is an equilibrium iff x guarantees at least v
// against every column and y concedes at most v against every row.
void CheckSaddlePoint(const MatrixGame& g, const EquilibriumResult& eq) {
  eq.row_strategy.Validate();
  eq.column_strategy.Validate();
  std::vector<double> cols = ColumnPayoffs(g, eq.row_strategy.probabilities);
  std::vector<double> rows = RowPayoffs(g, eq.column_strategy.probabilities);
  CHECK(*std::min_element(cols.begin(), cols.end()) >= eq.value - 1e-6);
  CHECK(*std::max_element(rows.begin(), rows.end()) <= eq.value + 1e-6);
}

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (size_t t = 0; t < a.size(); ++t) d = std::max(d, std::abs(a[t] - b[t]));
  return d;
}

std::vector<int> AllExcept(int n, std::vector<int> drop) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j) {
    if (std::find(drop.begin(), drop.end(), j) == drop.end()) out.push_back(j);
  }
  return out;
}

TEST_CASE("game value examples") {
  EquilibriumResult rps = GameValue(Fixture("rps"));
  CHECK(std::abs(rps.value) < 1e-9);
  for (double p : rps.row_strategy.probabilities) CHECK(p == doctest::Approx(1.0 / 3));
  for (double p : rps.column_strategy.probabilities) CHECK(p == doctest::Approx(1.0 / 3));

  EquilibriumResult t2 = GameValue(Fixture("theorem_2"));
  CHECK(t2.value == doctest::Approx(0.5));
  CHECK(t2.row_strategy[0] == doctest::Approx(0.5));
  CHECK(t2.row_strategy[1] == doctest::Approx(0.5));

  // Uniform play by both sides of -I_3 gives -1/3 and neither side can improve.
  MatrixGame neg = Fixture("neg_identity", {.n = 3});
  EquilibriumResult eq = GameValue(neg);
  std::vector<double> uni(3, 1.0 / 3);
  CHECK(ExpectedPayoff(neg, uni, uni) == doctest::Approx(-1.0 / 3));
  CHECK(eq.value == doctest::Approx(-1.0 / 3));
  CheckSaddlePoint(neg, eq);
}

TEST_CASE("game value properties on generated games") {
  Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    int m = static_cast<int>(rng.UniformInt(1, 12));
    int n = static_cast<int>(rng.UniformInt(1, 12));
    MatrixGame g = games::RandomGame(m, n, rng);
    EquilibriumResult eq = GameValue(g);
    CheckSaddlePoint(g, eq);
    CHECK(GameValue(g.TransposeNegate()).value == doctest::Approx(-eq.value).epsilon(1e-6));
    CHECK(ExploitabilityOf(g, eq.row_strategy, eq.value) <= 1e-6);
    // Determinism.
    EquilibriumResult again = GameValue(g);
    CHECK(again.value == eq.value);
    CHECK(again.row_strategy.probabilities == eq.row_strategy.probabilities);
  }
  for (const MatrixGame& g : {games::Blotto(3, 5), games::Goofspiel3(), games::KuhnPoker(2.0)}) {
    CheckSaddlePoint(g, GameValue(g));
  }
}

TEST_CASE("best response") {
  MatrixGame t2 = Fixture("theorem_2");
  BestResponseResult br =
      BestResponse(t2, MixedStrategy::Pure(3, 2, Player::kRow), Player::kColumn);
  CHECK(br.action == 0);
  CHECK(br.value == 0.0);

  MatrixGame rps = Fixture("rps");
  br = BestResponse(rps, MixedStrategy::Uniform(3, Player::kColumn), Player::kRow);
  CHECK(br.action == 0);
  CHECK(std::abs(br.value) < 1e-12);

  MatrixGame one = MatrixGame::FromRows({{0.25}});
  CHECK(BestResponse(one, MixedStrategy::Pure(1, 0, Player::kRow), Player::kColumn).action == 0);

  CHECK_THROWS_AS(BestResponse(rps, MixedStrategy::Uniform(2, Player::kRow), Player::kColumn),
                  DimensionError);

  // Row player's best response to e_1 in RPS is paper (row 1).
  br = BestResponse(rps, MixedStrategy::Pure(3, 0, Player::kColumn), Player::kRow);
  CHECK(br.action == 1);
  CHECK(br.value == 1.0);
}

TEST_CASE("exploitability of a strategy") {
  MatrixGame t2 = Fixture("theorem_2");
  CHECK(ExploitabilityOf(t2, MixedStrategy::Pure(3, 2, Player::kRow)) == doctest::Approx(0.5));
  MatrixGame neg = Fixture("neg_identity", {.n = 3});
  CHECK(ExploitabilityOf(neg, MixedStrategy::Pure(3, 2, Player::kRow)) ==
        doctest::Approx(2.0 / 3));
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    MatrixGame g = games::RandomGame(6, 4, rng);
    MixedStrategy x{rng.Simplex(6), Player::kRow};
    CHECK(ExploitabilityOf(g, x) >= 0.0);
  }
}

TEST_CASE("rm+ converges on small games") {
  RmPlusState rps = RmPlus(Fixture("rps"), 10000);
  CHECK(rps.iterations == 10000);
  for (double p : rps.row_average.probabilities) CHECK(std::abs(p - 1.0 / 3) <= 0.02);
  for (double p : rps.column_average.probabilities) CHECK(std::abs(p - 1.0 / 3) <= 0.02);
  CHECK(ExploitabilityOf(Fixture("rps"), rps.row_average, 0.0) <= 0.02);

  MatrixGame mp = Fixture("matching_pennies");
  RmPlusState pennies = RmPlus(mp, 10000);
  CHECK(ExploitabilityOf(mp, pennies.row_average, 0.0) <= 0.02);

  RmPlusState one = RmPlus(MatrixGame::FromRows({{0.3}}), 17);
  CHECK(one.row_average.probabilities == std::vector<double>{1.0});

  CHECK_THROWS_AS(RmPlus(mp, 0), ParameterError);
}

TEST_CASE("rm+ state invariants and checkpoint trend") {
  std::vector<MatrixGame> gs;
  for (const std::string& name : games::FixtureNames()) gs.push_back(Fixture(name));
  gs.push_back(games::RandomGame(8, 8, 1));
  for (const MatrixGame& g : gs) {
    double value = GameValue(g).value;
    double prev = 1e9;
    for (int t : {100, 1000, 10000}) {
      RmPlusState s = RmPlus(g, t);
      for (double r : s.row_regrets) CHECK(r >= 0.0);
      for (double r : s.column_regrets) CHECK(r >= 0.0);
      CHECK_NOTHROW(s.row_average.Validate());
      CHECK_NOTHROW(s.column_average.Validate());
      double ex = ExploitabilityOf(g, s.row_average, value);
      CHECK(ex <= prev + 1e-3);
      prev = ex;
    }
    // Same input, same output.
    CHECK(RmPlus(g, 300).row_average.probabilities ==
          RmPlus(g, 300).row_average.probabilities);
  }
}

TEST_CASE("individual epsilon examples") {
  MatrixGame t2 = Fixture("theorem_2");
  std::vector<int> only2 = {2};
  DominanceResult d = IndividualEpsilon(t2, 0, only2);
  CHECK(d.epsilon == doctest::Approx(0.5));
  CHECK(d.mixture[2] == doctest::Approx(1.0));

  MatrixGame dup = MatrixGame::FromRows({{0.3, -0.2, 0.3}, {0.9, 0.1, 0.9}});
  std::vector<int> allowed = {0, 1};
  CHECK(IndividualEpsilon(dup, 2, allowed).epsilon == doctest::Approx(0.0));

  MatrixGame rank = Fixture("rank_game", {.n = 2});
  CHECK(IndividualEpsilon(rank, 0, only2).epsilon == doctest::Approx(1.0));

  std::vector<int> bad = {0, 2};
  CHECK_THROWS_AS(IndividualEpsilon(t2, 0, bad), PreconditionError);
  CHECK_THROWS_AS(IndividualEpsilon(t2, 0, std::vector<int>{}), PreconditionError);
}

TEST_CASE("joint epsilon examples") {
  MatrixGame t2 = Fixture("theorem_2");
  CHECK(JointEpsilon(t2, std::vector<int>{}) == 0.0);
  CHECK(JointEpsilon(t2, std::vector<int>{0, 1}) == doctest::Approx(0.5));
  MatrixGame neg = Fixture("neg_identity", {.n = 3});
  CHECK(JointEpsilon(neg, std::vector<int>{0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(JointEpsilon(neg, std::vector<int>{0, 1, 2}), PreconditionError);
}

// Grid oracle for a mixture over two columns: scan the segment finely.
double TwoColumnOracle(const MatrixGame& g, int j, int a, int b) {
  double best = 1e9;
  const int steps = 20000;
  for (int s = 0; s <= steps; ++s) {
    double w = static_cast<double>(s) / steps;
    double worst = 0.0;
    for (int i = 0; i < g.rows(); ++i) {
      worst = std::max(worst, w * g(i, a) + (1 - w) * g(i, b) - g(i, j));
    }
    best = std::min(best, worst);
  }
  return best;
}

TEST_CASE("dominance properties") {
  Rng rng(2024);
  for (int t = 0; t < 40; ++t) {
    const int m = static_cast<int>(rng.UniformInt(2, 6));
    const int n = static_cast<int>(rng.UniformInt(3, 7));
    MatrixGame g = games::RandomGame(m, n, rng);

    // Two-column allowed set against a fine grid; the grid can only be worse.
    std::vector<int> pair = {1, 2};
    double lp = IndividualEpsilon(g, 0, pair).epsilon;
    double grid = TwoColumnOracle(g, 0, 1, 2);
    CHECK(lp <= grid + 1e-9);
    CHECK(lp >= grid - 2e-4);

    // The returned mixture certifies the value.
    DominanceResult d = IndividualEpsilon(g, 0, pair);
    d.mixture.Validate();
    for (int i = 0; i < m; ++i) {
      double mix = 0.0;
      for (int h = 0; h < n; ++h) mix += d.mixture[h] * g(i, h);
      CHECK(mix <= g(i, 0) + d.epsilon + 1e-9);
    }

    // Monotone as the allowed set grows.
    std::vector<int> allowed;
    double prev = 1e9;
    for (int h = 1; h < n; ++h) {
      allowed.push_back(h);
      double e = IndividualEpsilon(g, 0, allowed).epsilon;
      CHECK(e <= prev + 1e-9);
      prev = e;
    }

    // Joint epsilon equals the max of individual epsilons over the same
    // remaining columns.
    std::vector<int> removed;
    for (int j = 0; j < n; ++j) {
      if (rng.UniformInt(0, 1) == 1) removed.push_back(j);
    }
    if (removed.empty() || static_cast<int>(removed.size()) == n) continue;
    std::vector<int> keep = AllExcept(n, removed);
    double mx = 0.0;
    for (int r : removed) mx = std::max(mx, IndividualEpsilon(g, r, keep).epsilon);
    CHECK(JointEpsilon(g, removed) == doctest::Approx(mx).epsilon(1e-6));

    // A single cover mixture is never better than individual ones.
    DominanceResult cover = CoverEpsilon(g, removed, keep);
    CHECK(cover.epsilon >= mx - 1e-9);
    CHECK(MaxAbsDiff(cover.mixture.probabilities, cover.mixture.probabilities) == 0.0);
  }
}

}  // namespace
}  // namespace portfolio::equilibrium
