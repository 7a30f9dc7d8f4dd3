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

#include "portfolio/generators.h"

#include <array>
#include <cmath>
#include <string>

#include "portfolio/errors.h"

namespace portfolio::games {
namespace {

constexpr std::int64_t kRandomPayoffBound = 10'000'000;

int Sign(int v) { return (v > 0) - (v < 0); }

void Compositions(int fields, int remaining, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == fields - 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    prefix.push_back(c);
    Compositions(fields, remaining - c, prefix, out);
    prefix.pop_back();
  }
}

// Goofspiel pure strategy decoded into its three plays given the outcomes.
struct GoofspielStrategy {
  int first;
  std::array<int, 3> second;  // by round-one outcome: win, lose, draw
};

GoofspielStrategy DecodeGoofspiel(int index) {
  GoofspielStrategy s;
  s.first = index / 8 + 1;
  std::array<int, 2> rest{};
  int k = 0;
  for (int card = 1; card <= 3; ++card) {
    if (card != s.first) rest[k++] = card;
  }
  for (int outcome = 0; outcome < 3; ++outcome) {
    const int bit = (index >> (2 - outcome)) & 1;
    s.second[outcome] = rest[bit];
  }
  return s;
}

int Outcome(int mine, int theirs) {
  if (mine > theirs) return 0;
  if (mine < theirs) return 1;
  return 2;
}

std::string GoofspielLabel(int index) {
  const GoofspielStrategy s = DecodeGoofspiel(index);
  return std::to_string(s.first) + ":w" + std::to_string(s.second[0]) + "l" +
         std::to_string(s.second[1]) + "d" + std::to_string(s.second[2]);
}

}  // namespace

MatrixGame RandomGame(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  return RandomGame(rows, cols, rng);
}

MatrixGame RandomGame(int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) throw ParameterError("game dimensions must be >= 1");
  std::vector<double> payoffs(static_cast<std::size_t>(rows) * cols);
  for (double& v : payoffs) {
    v = static_cast<double>(rng.UniformInt(-kRandomPayoffBound, kRandomPayoffBound));
  }
  return Normalize(MatrixGame(rows, cols, std::move(payoffs)));
}

std::vector<std::vector<int>> BlottoAllocations(int fields, int coins) {
  if (fields < 1 || coins < 0) {
    throw ParameterError("blotto needs fields >= 1 and coins >= 0");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  Compositions(fields, coins, prefix, out);
  return out;
}

MatrixGame Blotto(int fields, int coins) {
  const auto actions = BlottoAllocations(fields, coins);
  const int n = static_cast<int>(actions.size());
  std::vector<double> payoffs(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    for (int f = 0; f < fields; ++f) {
      labels[i] += (f ? "-" : "") + std::to_string(actions[i][f]);
    }
    for (int j = 0; j < n; ++j) {
      int balance = 0;
      for (int f = 0; f < fields; ++f) balance += Sign(actions[i][f] - actions[j][f]);
      payoffs[i * n + j] = Sign(balance);
    }
  }
  return Normalize(MatrixGame(n, n, std::move(payoffs), labels, labels));
}

MatrixGame Goofspiel3() {
  constexpr int kStrategies = 24;
  constexpr std::array<int, 3> kPoints = {3, 2, 1};
  std::vector<double> payoffs(kStrategies * kStrategies);
  std::vector<std::string> labels(kStrategies);
  for (int i = 0; i < kStrategies; ++i) {
    labels[i] = GoofspielLabel(i);
    const GoofspielStrategy a = DecodeGoofspiel(i);
    for (int j = 0; j < kStrategies; ++j) {
      const GoofspielStrategy b = DecodeGoofspiel(j);
      const int a1 = a.first;
      const int b1 = b.first;
      const int a2 = a.second[Outcome(a1, b1)];
      const int b2 = b.second[Outcome(b1, a1)];
      const int a3 = 6 - a1 - a2;
      const int b3 = 6 - b1 - b2;
      const std::array<int, 3> pa = {a1, a2, a3};
      const std::array<int, 3> pb = {b1, b2, b3};
      int score = 0;
      for (int r = 0; r < 3; ++r) {
        if (pa[r] > pb[r]) score += kPoints[r];
        if (pa[r] < pb[r]) score -= kPoints[r];
      }
      payoffs[i * kStrategies + j] = Sign(score);
    }
  }
  return MatrixGame(kStrategies, kStrategies, std::move(payoffs), labels, labels,
                    true);
}

MatrixGame KuhnPokerRaw(double bet) {
  if (!(bet > 0.0) || !std::isfinite(bet)) {
    throw ParameterError("kuhn poker bet must be a positive finite number");
  }
  constexpr int kRowStrategies = 27;
  constexpr int kColStrategies = 64;
  static const char* kCards = "JQK";
  static const char* kRowActions[] = {"cf", "cc", "b"};
  static const char* kColActions[] = {"fc", "fb", "cc", "cb"};
  std::vector<double> payoffs(kRowStrategies * kColStrategies, 0.0);
  std::vector<std::string> row_labels(kRowStrategies);
  std::vector<std::string> col_labels(kColStrategies);
  for (int r = 0; r < kRowStrategies; ++r) {
    const std::array<int, 3> s1 = {r / 9, (r / 3) % 3, r % 3};
    for (int c = 0; c < 3; ++c) {
      row_labels[r] += std::string(c ? " " : "") + kCards[c] + "=" + kRowActions[s1[c]];
    }
    for (int q = 0; q < kColStrategies; ++q) {
      const std::array<int, 3> s2 = {q / 16, (q / 4) % 4, q % 4};
      double total = 0.0;
      for (int c1 = 0; c1 < 3; ++c1) {
        for (int c2 = 0; c2 < 3; ++c2) {
          if (c1 == c2) continue;
          const double showdown = c1 > c2 ? 1.0 : -1.0;
          const int act1 = s1[c1];
          const bool call_bet = s2[c2] / 2 == 1;
          const bool bet_after_check = s2[c2] % 2 == 1;
          double u = 0.0;
          if (act1 == 2) {
            u = call_bet ? showdown * (1.0 + bet) : 1.0;
          } else if (!bet_after_check) {
            u = showdown;
          } else {
            u = act1 == 0 ? -1.0 : showdown * (1.0 + bet);
          }
          total += u;
        }
      }
      payoffs[r * kColStrategies + q] = total / 6.0;
    }
  }
  for (int q = 0; q < kColStrategies; ++q) {
    const std::array<int, 3> s2 = {q / 16, (q / 4) % 4, q % 4};
    for (int c = 0; c < 3; ++c) {
      col_labels[q] += std::string(c ? " " : "") + kCards[c] + "=" + kColActions[s2[c]];
    }
  }
  return MatrixGame(kRowStrategies, kColStrategies, std::move(payoffs),
                    std::move(row_labels), std::move(col_labels));
}

MatrixGame KuhnPoker(double bet) { return ScaleByMaxAbs(KuhnPokerRaw(bet)); }

}  // namespace portfolio::games
