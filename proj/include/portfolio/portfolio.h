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

#ifndef PORTFOLIO_PORTFOLIO_H_
#define PORTFOLIO_PORTFOLIO_H_

#include <span>
#include <string>
#include <vector>

#include "portfolio/matrix_game.h"

namespace portfolio {

inline constexpr int kPortfolioFormatVersion = 1;

// An ordered list of k column-player strategies over n actions. Rows may
// repeat.
class Portfolio {
 public:
  Portfolio() = default;
  // Throws PreconditionError unless every row is a distribution over the same
  // number of actions and there is at least one row.
  explicit Portfolio(std::vector<std::vector<double>> strategies);

  // Pure portfolio made of the given columns, in the given order.
  static Portfolio FromColumns(int n, std::span<const int> columns);
  static Portfolio Identity(int n);

  int k() const { return static_cast<int>(strategies_.size()); }
  int n() const { return strategies_.empty() ? 0 : static_cast<int>(strategies_[0].size()); }
  const std::vector<std::vector<double>>& strategies() const { return strategies_; }
  const std::vector<double>& strategy(int z) const { return strategies_[z]; }

  // True iff every row is a standard basis vector.
  bool pure() const;
  // Column index of every row; throws PreconditionError for mixed portfolios.
  std::vector<int> columns() const;

  bool operator==(const Portfolio& other) const = default;

 private:
  std::vector<std::vector<double>> strategies_;
};

// Game where the column player mixes over the portfolio:
// U_R[i][z] = sum_j U[i][j] * P[z][j]. Throws DimensionError on mismatch.
MatrixGame Restrict(const MatrixGame& game, const Portfolio& portfolio);

std::string PortfolioToJson(const Portfolio& portfolio);
Portfolio PortfolioFromJson(const std::string& text,
                            const std::string& origin = "<string>");
void SavePortfolio(const Portfolio& portfolio, const std::string& path);
Portfolio LoadPortfolio(const std::string& path);

}  // namespace portfolio

#endif  // PORTFOLIO_PORTFOLIO_H_
