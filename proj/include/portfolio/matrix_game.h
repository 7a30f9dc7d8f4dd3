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

#ifndef PORTFOLIO_MATRIX_GAME_H_
#define PORTFOLIO_MATRIX_GAME_H_

#include <span>
#include <string>
#include <vector>

namespace portfolio {

enum class Player { kRow = 1, kColumn = 2 };

inline Player Opponent(Player p) {
  return p == Player::kRow ? Player::kColumn : Player::kRow;
}

// Two-player zero-sum game in normal form. Entry (i, j) is the utility of the
// row player when it plays i and the column player plays j; the column
// player receives the negation.
//
// A game may carry an affine de-normalization map raw = offset + scale * u
// recording how its entries relate to the units it was generated in.
class MatrixGame {
 public:
  MatrixGame() = default;
  // Throws DimensionError on size mismatches and PreconditionError on
  // non-finite entries (or entries outside [-1, 1] when `normalized`).
  MatrixGame(int rows, int cols, std::vector<double> payoffs,
             std::vector<std::string> row_labels = {},
             std::vector<std::string> col_labels = {},
             bool normalized = false, double denorm_offset = 0.0,
             double denorm_scale = 1.0);

  static MatrixGame FromRows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const { return payoffs_[i * cols_ + j]; }
  std::span<const double> payoffs() const { return payoffs_; }
  std::span<const double> row(int i) const {
    return std::span<const double>(payoffs_).subspan(i * cols_, cols_);
  }
  std::vector<double> column(int j) const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  double min_payoff() const;
  double max_payoff() const;
  // Payoff range max - min.
  double payoff_range() const { return max_payoff() - min_payoff(); }

  bool normalized() const { return normalized_; }
  double denorm_offset() const { return denorm_offset_; }
  double denorm_scale() const { return denorm_scale_; }
  // True when every entry lies in [-1, 1].
  bool within_unit_range() const;

  // The same game seen from the column player: U' = -U^T.
  MatrixGame TransposeNegate() const;
  // Sub-game on the given row and column indices.
  MatrixGame Submatrix(std::span<const int> rows, std::span<const int> cols) const;

  bool operator==(const MatrixGame& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> payoffs_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  bool normalized_ = false;
  double denorm_offset_ = 0.0;
  double denorm_scale_ = 1.0;
};

// Probability vector over one player's actions.
struct MixedStrategy {
  std::vector<double> probabilities;
  Player owner = Player::kRow;

  int size() const { return static_cast<int>(probabilities.size()); }
  double operator[](int a) const { return probabilities[a]; }

  static MixedStrategy Pure(int size, int action, Player owner);
  static MixedStrategy Uniform(int size, Player owner);
  // Throws PreconditionError unless entries are >= 0 and sum to 1 (1e-9).
  void Validate() const;
};

// Affine map of the entries onto [-1, 1] (min -> -1, max -> 1). Constant
// games map to all zeros. The de-normalization parameters compose with any
// already stored on `game`.
MatrixGame Normalize(const MatrixGame& game);

// Divides every entry by the largest absolute entry (offset 0).
MatrixGame ScaleByMaxAbs(const MatrixGame& game);

// Row player's expected utility of each row against `column_strategy`.
std::vector<double> RowPayoffs(const MatrixGame& game,
                               std::span<const double> column_strategy);
// Row player's expected utility of each column against `row_strategy`.
std::vector<double> ColumnPayoffs(const MatrixGame& game,
                                  std::span<const double> row_strategy);
double ExpectedPayoff(const MatrixGame& game, std::span<const double> row_strategy,
                      std::span<const double> column_strategy);

}  // namespace portfolio

#endif  // PORTFOLIO_MATRIX_GAME_H_
