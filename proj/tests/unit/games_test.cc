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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "portfolio/equilibrium.h"
#include "portfolio/errors.h"
#include "portfolio/fixtures.h"
#include "portfolio/game_io.h"
#include "portfolio/generators.h"
#include "portfolio/matrix_game.h"
#include "portfolio/random.h"

namespace portfolio {
namespace {

using games::Blotto;
using games::Fixture;

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST_CASE("matrix game rejects bad shapes and values") {
  CHECK_THROWS_AS(MatrixGame(2, 2, {1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(MatrixGame(1, 1, {NAN}), PreconditionError);
  CHECK_THROWS_AS(MatrixGame(1, 1, {INFINITY}), PreconditionError);
  CHECK_THROWS_AS(MatrixGame(1, 2, {0.5, 2.0}, {}, {}, true), PreconditionError);
  MatrixGame g(1, 2, {0.5, 2.0});
  CHECK(g.payoff_range() == doctest::Approx(1.5));
  CHECK(g.row_labels()[0] == "r0");
  CHECK(g.col_labels()[1] == "c1");
}

TEST_CASE("normalize maps onto the unit range") {
  MatrixGame g = MatrixGame::FromRows({{0, 1}, {-1, 0}});
  MatrixGame n = Normalize(g);
  CHECK(n.payoffs()[0] == 0.0);
  CHECK(n.payoffs()[1] == 1.0);
  CHECK(n.payoffs()[2] == -1.0);
  CHECK(n.normalized());

  MatrixGame c = Normalize(MatrixGame::FromRows({{5, 5}, {5, 5}}));
  for (double v : c.payoffs()) CHECK(v == 0.0);

  // raw = offset + scale * u recovers the original entries.
  MatrixGame raw = MatrixGame::FromRows({{3, 7, -2}, {11, 0, 4}});
  MatrixGame u = Normalize(raw);
  CHECK(u.min_payoff() == -1.0);
  CHECK(u.max_payoff() == 1.0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(u.denorm_offset() + u.denorm_scale() * u(i, j) ==
            doctest::Approx(raw(i, j)).epsilon(1e-12));
    }
  }
  // Normalizing twice composes the maps.
  MatrixGame twice = Normalize(ScaleByMaxAbs(raw));
  CHECK(twice.denorm_scale() == doctest::Approx(u.denorm_scale()));
  CHECK(twice.denorm_offset() == doctest::Approx(u.denorm_offset()));
}

TEST_CASE("random games are reproducible and normalized") {
  MatrixGame a = games::RandomGame(5, 5, 10);
  MatrixGame b = games::RandomGame(5, 5, 10);
  CHECK(a == b);
  CHECK(!(a == games::RandomGame(5, 5, 11)));

  MatrixGame big = games::RandomGame(25, 25, 42);
  CHECK(big.min_payoff() == -1.0);
  CHECK(big.max_payoff() == 1.0);
  CHECK(big.normalized());
  // Raw entries are integers in [-1e7, 1e7].
  for (double v : big.payoffs()) {
    double raw = big.denorm_offset() + big.denorm_scale() * v;
    CHECK(std::abs(raw - std::round(raw)) < 1e-6);
    CHECK(std::abs(raw) <= 1e7);
  }

  MatrixGame one = games::RandomGame(1, 1, 0);
  CHECK(one.rows() == 1);
  CHECK(equilibrium::GameValue(one).value == doctest::Approx(one(0, 0)));
}

TEST_CASE("rng helpers") {
  Rng rng(7);
  std::set<std::int64_t> seen;
  for (int t = 0; t < 2000; ++t) {
    std::int64_t v = rng.UniformInt(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    seen.insert(v);
    double u = rng.UniformReal();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(seen.size() == 7);
  std::vector<double> p = rng.Simplex(6);
  double s = 0.0;
  for (double x : p) {
    CHECK(x >= 0.0);
    s += x;
  }
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

// Independent field-majority rule.
int BlottoSign(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (size_t f = 0; f < a.size(); ++f) d += (a[f] > b[f]) - (a[f] < b[f]);
  return (d > 0) - (d < 0);
}

TEST_CASE("blotto") {
  auto alloc = games::BlottoAllocations(3, 6);
  CHECK(alloc.size() == 28);
  for (size_t t = 1; t < alloc.size(); ++t) CHECK(alloc[t - 1] < alloc[t]);

  MatrixGame g = Blotto(3, 6);
  CHECK(g.rows() == 28);
  CHECK(g.cols() == 28);
  CHECK(g == g.TransposeNegate());
  CHECK(std::abs(equilibrium::GameValue(g).value) < 1e-6);

  auto alloc8 = games::BlottoAllocations(3, 8);
  MatrixGame g8 = Blotto(3, 8);
  int i = -1, j = -1;
  for (size_t t = 0; t < alloc8.size(); ++t) {
    if (alloc8[t] == std::vector<int>{8, 0, 0}) i = static_cast<int>(t);
    if (alloc8[t] == std::vector<int>{3, 3, 2}) j = static_cast<int>(t);
  }
  REQUIRE(i >= 0);
  REQUIRE(j >= 0);
  CHECK(g8.denorm_offset() + g8.denorm_scale() * g8(i, j) == doctest::Approx(-1.0));
  for (size_t a = 0; a < alloc8.size(); ++a) {
    for (size_t b = 0; b < alloc8.size(); ++b) {
      double raw = g8.denorm_offset() + g8.denorm_scale() * g8(a, b);
      CHECK(raw == doctest::Approx(BlottoSign(alloc8[a], alloc8[b])));
    }
  }
  CHECK(g8.col_labels()[i] == "8-0-0");
}

TEST_CASE("goofspiel") {
  MatrixGame g = games::Goofspiel3();
  CHECK(g.rows() == 24);
  CHECK(g.cols() == 24);
  CHECK(g == g.TransposeNegate());
  CHECK(std::abs(equilibrium::GameValue(g).value) < 1e-6);
  // Always play the highest remaining card.
  const int descending = 23;
  CHECK(g(descending, descending) == 0.0);
  CHECK(g.row_labels()[descending] == "3:w2l2d2");
  // 3-2-1 cannot be beaten.
  for (int j = 0; j < 24; ++j) CHECK(g(descending, j) >= 0.0);
}

TEST_CASE("kuhn poker") {
  MatrixGame raw = games::KuhnPokerRaw(1.0);
  CHECK(raw.rows() == 27);
  CHECK(raw.cols() == 64);
  CHECK(equilibrium::GameValue(raw).value == doctest::Approx(-1.0 / 18).epsilon(1e-9));

  MatrixGame k = games::KuhnPoker(2.0);
  double max_abs = 0.0;
  for (double v : k.payoffs()) max_abs = std::max(max_abs, std::abs(v));
  CHECK(max_abs == doctest::Approx(1.0));
  CHECK(k.within_unit_range());
  CHECK(k.denorm_offset() == 0.0);
  CHECK_THROWS_AS(games::KuhnPoker(0.0), ParameterError);
  CHECK_THROWS_AS(games::KuhnPoker(-1.0), ParameterError);

  // Row 0: check-fold everywhere. Column 0: fold to bets, check behind.
  // Every deal goes to showdown for the ante, which sums to zero.
  CHECK(raw(0, 0) == doctest::Approx(0.0));
  // Row 26 always bets, column 0 always folds: row wins the ante.
  CHECK(raw(26, 0) == doctest::Approx(1.0));
}

TEST_CASE("fixtures") {
  CHECK(Fixture("theorem_2") == MatrixGame::FromRows({{1, 0, 0.5}, {0, 1, 0.5}, {0, 0, 0.5}}));
  CHECK(Fixture("neg_identity", {.n = 3}) ==
        MatrixGame::FromRows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  MatrixGame inc = Fixture("incremental");
  CHECK(inc.payoffs()[0] == -1);
  CHECK(inc.payoffs()[2] == -101);
  CHECK(inc.payoffs()[5] == doctest::Approx(-0.8));
  CHECK(inc.col_labels()[3] == "b3");
  MatrixGame rank = Fixture("rank_game", {.n = 2});
  CHECK(rank == MatrixGame::FromRows({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
  MatrixGame t3 = Fixture("theorem_3", {.delta = 0.1});
  CHECK(t3.rows() >= 1);
  CHECK_THROWS_AS(Fixture("theorem_3", {.delta = 0.5}), ParameterError);
  CHECK_THROWS_AS(Fixture("no_such_game"), LookupError);
  for (const std::string& name : games::FixtureNames()) CHECK_NOTHROW(Fixture(name));
}

TEST_CASE("game files round trip") {
  for (const MatrixGame& g : {Fixture("rps"), games::RandomGame(4, 7, 3),
                              games::KuhnPoker(2.5), Fixture("incremental")}) {
    std::string path = TempPath("portfolio_game_roundtrip.json");
    games::SaveGame(g, path);
    CHECK(games::LoadGame(path) == g);
    std::remove(path.c_str());
  }
}

TEST_CASE("game file diagnostics") {
  auto expect_parse_error = [](const std::string& text, const std::string& needle) {
    try {
      games::GameFromJson(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error(
      R"({"format_version":1,"rows":2,"cols":2,"payoffs":[[1,2],[3]]})",
      "payoffs[1]");
  expect_parse_error(
      R"({"format_version":1,"rows":1,"cols":1,"payoffs":[[1e999]]})", "");
  expect_parse_error(
      R"({"format_version":1,"rows":1,"cols":1,"payoffs":[["x"]]})", "payoffs");
  expect_parse_error(R"({"format_version":1,"rows":1,)", "line");
  expect_parse_error(R"({"rows":1,"cols":1,"payoffs":[[0]]})", "format_version");
  CHECK_THROWS_AS(games::LoadGame("/nonexistent/dir/game.json"), ParseError);
}

}  // namespace
}  // namespace portfolio
