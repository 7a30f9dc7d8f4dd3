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
#include <cstdio>
#include <filesystem>
#include <vector>

#include "doctest.h"
#include "portfolio/equilibrium.h"
#include "portfolio/errors.h"
#include "portfolio/evaluation.h"
#include "portfolio/fixtures.h"
#include "portfolio/generators.h"
#include "portfolio/lp_format.h"
#include "portfolio/portfolio.h"
#include "portfolio/random.h"
#include "support/portfolio_oracle.h"

namespace portfolio {
namespace {

using games::Fixture;

const SelectionFunction kPes = SelectionFunction::Pessimistic();
const SelectionFunction kOpt = SelectionFunction::Optimistic();
const SelectionFunction kRm = SelectionFunction::RmPlus();

Portfolio Cols(const MatrixGame& g, std::vector<int> cols) {
  return Portfolio::FromColumns(g.cols(), cols);
}

// Every k-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  for (int t = 0; t < k; ++t) s[t] = t;
  while (true) {
    out.push_back(s);
    int t = k - 1;
    while (t >= 0 && s[t] == n - k + t) --t;
    if (t < 0) break;
    ++s[t];
    for (int u = t + 1; u < k; ++u) s[u] = s[u - 1] + 1;
  }
  return out;
}

TEST_CASE("portfolio type") {
  Portfolio p = Portfolio::FromColumns(4, std::vector<int>{2, 0, 2});
  CHECK(p.k() == 3);
  CHECK(p.n() == 4);
  CHECK(p.pure());
  CHECK(p.columns() == std::vector<int>{2, 0, 2});
  Portfolio mixed({{0.5, 0.5, 0.0}});
  CHECK(!mixed.pure());
  CHECK_THROWS_AS(mixed.columns(), PreconditionError);
  CHECK_THROWS_AS(Portfolio(std::vector<std::vector<double>>{}), PreconditionError);
  CHECK_THROWS_AS(Portfolio({{0.5, 0.6}}), PreconditionError);
  CHECK_THROWS_AS(Portfolio({{1.0}, {0.0, 1.0}}), PreconditionError);
  CHECK_THROWS_AS(Portfolio::FromColumns(3, std::vector<int>{3}), PreconditionError);
}

TEST_CASE("restriction") {
  MatrixGame rps = Fixture("rps");
  CHECK(Restrict(rps, Portfolio::Identity(3)).payoffs().size() == 9);
  MatrixGame same = Restrict(rps, Portfolio::Identity(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(same(i, j) == rps(i, j));
  }
  MatrixGame r = Restrict(rps, Portfolio({{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}}));
  CHECK(r.column(0) == std::vector<double>{-0.5, 0.5, 0.0});
  CHECK(r.column(1) == std::vector<double>{0.0, -0.5, 0.5});
  MatrixGame t2 = Restrict(Fixture("theorem_2"), Cols(Fixture("theorem_2"), {2}));
  CHECK(t2.column(0) == std::vector<double>{0.5, 0.5, 0.5});
  CHECK_THROWS_AS(Restrict(rps, Portfolio::Identity(2)), DimensionError);
}

TEST_CASE("pessimistic examples") {
  MatrixGame t2 = Fixture("theorem_2");
  PortfolioEvaluation e = PessimisticUtility(t2, Cols(t2, {2}));
  CHECK(e.exploitability == doctest::Approx(0.5));
  CHECK(e.game_value == doctest::Approx(0.5));

  MatrixGame rps = Fixture("rps");
  CHECK(Exploitability(rps, Cols(rps, {0, 1}), kPes) == doctest::Approx(2.0 / 3));
  CHECK(Exploitability(rps, Portfolio({{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}}), kPes) ==
        doctest::Approx(1.0 / 3));
  PortfolioEvaluation rp = PessimisticUtility(rps, Cols(rps, {0, 1}));
  CHECK(rp.p1_strategy[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(rp.p1_strategy[1] == doctest::Approx(2.0 / 3));
  CHECK(rp.p1_strategy[2] == doctest::Approx(1.0 / 3));
  CHECK(rp.responder_action == 2);

  for (int n : {2, 3, 4}) {
    MatrixGame rank = Fixture("rank_game", {.n = n});
    CHECK(Exploitability(rank, Cols(rank, {n}), kPes) == doctest::Approx(0.0).epsilon(1e-9));
  }

  MatrixGame big = Fixture("incremental");
  CHECK_THROWS_AS(PessimisticUtility(big, Cols(big, {0, 1})), PreconditionError);
}

TEST_CASE("incremental fixture in raw units") {
  MatrixGame g = Normalize(Fixture("incremental"));
  auto raw = [&](std::vector<int> cols) {
    return ToRawUnits(g, Exploitability(g, Cols(g, cols), kPes));
  };
  // Restricted game on {b0, b1} has the unique equilibrium p = 9/19, whose
  // best response b3 leaves -1901/19 against u* = -100.
  CHECK(raw({0, 1}) == doctest::Approx(1.0 / 19).epsilon(1e-9));
  CHECK(raw({2, 3}) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(raw({0, 1, 2}) == doctest::Approx(1.0));
  CHECK(raw({0, 1, 3}) == doctest::Approx(1.0));
  CHECK(raw({2, 3, 0}) == doctest::Approx(0.0).epsilon(1e-9));
  // Adding an action to {b0, b1} makes things worse.
  CHECK(raw({0, 1, 2}) > raw({0, 1}));
  CHECK(raw({0, 1, 3}) > raw({0, 1}));
}

TEST_CASE("optimistic and rm+ examples") {
  MatrixGame rps = Fixture("rps");
  CHECK(Exploitability(rps, Cols(rps, {0, 1}), kOpt) == doctest::Approx(2.0 / 3));
  CHECK(Exploitability(rps, Portfolio({{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}}), kOpt) ==
        doctest::Approx(1.0 / 3));
  CHECK(Exploitability(rps, Portfolio::Identity(3), kOpt) == doctest::Approx(0.0).epsilon(1e-9));
  MatrixGame t2 = Fixture("theorem_2");
  CHECK(Exploitability(t2, Cols(t2, {2}), kOpt) == doctest::Approx(0.0).epsilon(1e-9));

  CHECK(Exploitability(rps, Portfolio::Identity(3), kRm) <= 0.02);
  CHECK(std::abs(Exploitability(rps, Cols(rps, {0, 1}), kRm) - 2.0 / 3) <= 0.02);
  MatrixGame one = MatrixGame::FromRows({{0.4}});
  CHECK(Exploitability(one, Portfolio::Identity(1), kRm) == 0.0);
  CHECK(Exploitability(one, Portfolio::Identity(1), kPes) == doctest::Approx(0.0));
}

TEST_CASE("selection function strings") {
  CHECK(SelectionFunction::Parse("pessimistic") == kPes);
  CHECK(SelectionFunction::Parse("optimistic") == kOpt);
  CHECK(SelectionFunction::Parse("rm_plus") == kRm);
  CHECK(SelectionFunction::Parse("rm_plus:250") == SelectionFunction::RmPlus(250));
  CHECK(SelectionFunction::RmPlus(250).ToString() == "rm_plus:250");
  CHECK(kPes.ToString() == "pessimistic");
  CHECK_THROWS_AS(SelectionFunction::Parse("rm_plus:0"), ParameterError);
  CHECK_THROWS_AS(SelectionFunction::Parse("rm_plus:x"), ParameterError);
  CHECK_THROWS_AS(SelectionFunction::Parse("maxent"), ParameterError);
}

TEST_CASE("lower bound on -I") {
  for (int n = 3; n <= 5; ++n) {
    MatrixGame g = Fixture("neg_identity", {.n = n});
    for (int k = 1; k < n; ++k) {
      for (const auto& s : Subsets(n, k)) {
        double ex = Exploitability(g, Cols(g, s), kPes);
        CHECK(ex >= static_cast<double>(n - k) / (n * k) * g.payoff_range() - 1e-9);
        CHECK(ex == doctest::Approx(1.0 - 1.0 / n));
      }
    }
  }
}

TEST_CASE("evaluation milp matches the enumeration oracle") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const int m = static_cast<int>(rng.UniformInt(2, 8));
    const int n = static_cast<int>(rng.UniformInt(2, 8));
    MatrixGame g = games::RandomGame(m, n, rng);
    const int k = static_cast<int>(rng.UniformInt(1, 3));
    std::vector<std::vector<double>> rows;
    for (int z = 0; z < k; ++z) {
      if (rng.UniformInt(0, 1) == 0) {
        rows.push_back(rng.Simplex(n));
      } else {
        rows.push_back(MixedStrategy::Pure(n, static_cast<int>(rng.UniformInt(0, n - 1)),
                                           Player::kColumn).probabilities);
      }
    }
    Portfolio p(rows);
    PortfolioEvaluation e = PessimisticUtility(g, p);
    CHECK(e.utility == doctest::Approx(testing::PessimisticByEnumeration(g, p)).epsilon(1e-6));
    // The witness is a restricted equilibrium whose best response attains
    // the utility.
    auto cols = ColumnPayoffs(g, e.p1_strategy.probabilities);
    CHECK(cols[e.responder_action] == doctest::Approx(e.utility).epsilon(1e-6));
    auto rcols = ColumnPayoffs(Restrict(g, p), e.p1_strategy.probabilities);
    for (double v : rcols) CHECK(v >= e.restricted_value - 1e-6);
  }
}

TEST_CASE("unique restricted equilibrium: all selections agree") {
  Rng rng(77);
  int checked = 0;
  while (checked < 20) {
    MatrixGame g = games::RandomGame(6, 6, rng);
    Portfolio p({rng.Simplex(6), rng.Simplex(6), rng.Simplex(6)});
    if (!testing::RestrictedEquilibriumIsUnique(g, p)) continue;
    ++checked;
    const double u = testing::UniqueEquilibriumUtility(g, p);
    CHECK(PessimisticUtility(g, p).utility == doctest::Approx(u).epsilon(1e-6));
    CHECK(OptimisticUtility(g, p).utility == doctest::Approx(u).epsilon(1e-6));
  }
}

TEST_CASE("bracketing and identity zero on random games") {
  Rng rng(5150);
  for (int t = 0; t < 25; ++t) {
    MatrixGame g = games::RandomGame(7, 7, rng);
    const double v = equilibrium::GameValue(g).value;
    Portfolio p({rng.Simplex(7), rng.Simplex(7), rng.Simplex(7)});
    double pes = Exploitability(g, p, kPes, v);
    double opt = Exploitability(g, p, kOpt, v);
    double rm = Exploitability(g, p, kRm, v);
    CHECK(opt <= pes + 1e-9);
    CHECK(opt <= rm + 0.02);
    CHECK(rm <= pes + 0.02);
    CHECK(opt >= -1e-9);
    CHECK(Exploitability(g, Portfolio::Identity(7), kPes, v) <= 1e-6);
  }
}

TEST_CASE("portfolio files") {
  Portfolio p({{0.25, 0.75, 0.0}, {0.0, 0.0, 1.0}});
  Portfolio q = PortfolioFromJson(PortfolioToJson(p));
  CHECK(q == p);
  std::string path = (std::filesystem::temp_directory_path() / "portfolio_rt.json").string();
  SavePortfolio(Portfolio::FromColumns(5, std::vector<int>{4, 1}), path);
  Portfolio loaded = LoadPortfolio(path);
  CHECK(loaded.pure());
  CHECK(loaded.columns() == std::vector<int>{4, 1});
  std::remove(path.c_str());
  CHECK_THROWS_AS(PortfolioFromJson(R"({"format_version":1,"strategies":[[0.5,0.4]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      PortfolioFromJson(R"({"format_version":1,"k":2,"strategies":[[1,0]]})"),
      ParseError);
  CHECK_THROWS_AS(
      PortfolioFromJson(R"({"format_version":1,"pure":true,"strategies":[[0.5,0.5]]})"),
      ParseError);
  CHECK_THROWS_AS(PortfolioFromJson("[1,2"), ParseError);
}

TEST_CASE("evaluation milp dumps to lp format") {
  MatrixGame rps = Fixture("rps");
  std::string text = solver::ToLpFormat(EvaluationMilp(rps, Portfolio::Identity(3), 0.0));
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.find("v_o") != std::string::npos);
}

}  // namespace
}  // namespace portfolio
