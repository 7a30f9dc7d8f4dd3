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

#include "portfolio/fixtures.h"

#include <string>

#include "portfolio/errors.h"

namespace portfolio::games {

MatrixGame Theorem2Game() {
  return MatrixGame::FromRows({{1, 0, 0.5}, {0, 1, 0.5}, {0, 0, 0.5}});
}

MatrixGame Theorem3Game(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw ParameterError("theorem_3 needs delta in (0, 1/2)");
  }
  return MatrixGame::FromRows({{1, delta, 0.5}, {delta, 1, 0.5}, {0, 0, 0.5}});
}

MatrixGame IncrementalGame() {
  MatrixGame raw = MatrixGame::FromRows({{-1, 1, -101, -99}, {1, -0.8, -99, -101}});
  return MatrixGame(raw.rows(), raw.cols(),
                    {raw.payoffs().begin(), raw.payoffs().end()}, {},
                    {"b0", "b1", "b2", "b3"});
}

MatrixGame NegIdentityGame(int n) {
  if (n < 1) throw ParameterError("neg_identity needs n >= 1");
  std::vector<double> payoffs(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) payoffs[i * n + i] = -1.0;
  return MatrixGame(n, n, std::move(payoffs));
}

MatrixGame RankGame(int n) {
  if (n < 1) throw ParameterError("rank_game needs n >= 1");
  const int size = n + 1;
  std::vector<double> payoffs(static_cast<std::size_t>(size) * size, 0.0);
  for (int i = 0; i < n; ++i) payoffs[i * size + i] = -1.0;
  payoffs[n * size + n] = 1.0;
  return MatrixGame(size, size, std::move(payoffs));
}

MatrixGame RockPaperScissors() {
  const std::vector<std::string> labels = {"R", "P", "S"};
  return MatrixGame(3, 3, {0, -1, 1, 1, 0, -1, -1, 1, 0}, labels, labels);
}

MatrixGame MatchingPennies() {
  const std::vector<std::string> labels = {"H", "T"};
  return MatrixGame(2, 2, {1, -1, -1, 1}, labels, labels);
}

MatrixGame Fixture(const std::string& name, const FixtureParams& params) {
  if (name == "theorem_2") return Theorem2Game();
  if (name == "theorem_3") return Theorem3Game(params.delta);
  if (name == "incremental") return IncrementalGame();
  if (name == "neg_identity") return NegIdentityGame(params.n);
  if (name == "rank_game") return RankGame(params.n);
  if (name == "rps") return RockPaperScissors();
  if (name == "matching_pennies") return MatchingPennies();
  throw LookupError("unknown fixture '" + name + "'");
}

std::vector<std::string> FixtureNames() {
  return {"theorem_2", "theorem_3", "incremental", "neg_identity",
          "rank_game", "rps",       "matching_pennies"};
}

}  // namespace portfolio::games
