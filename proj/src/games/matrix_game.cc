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

#include "portfolio/matrix_game.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "portfolio/errors.h"

namespace portfolio {
namespace {

std::vector<std::string> DefaultLabels(const char* prefix, int count) {
  std::vector<std::string> labels(count);
  for (int i = 0; i < count; ++i) labels[i] = prefix + std::to_string(i);
  return labels;
}

}  // namespace

MatrixGame::MatrixGame(int rows, int cols, std::vector<double> payoffs,
                       std::vector<std::string> row_labels,
                       std::vector<std::string> col_labels, bool normalized,
                       double denorm_offset, double denorm_scale)
    : rows_(rows),
      cols_(cols),
      payoffs_(std::move(payoffs)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      normalized_(normalized),
      denorm_offset_(denorm_offset),
      denorm_scale_(denorm_scale) {
  if (rows_ < 1 || cols_ < 1) {
    throw DimensionError("a game needs at least one action per player");
  }
  if (payoffs_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw DimensionError("payoff array has " + std::to_string(payoffs_.size()) +
                         " entries for a " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " game");
  }
  if (row_labels_.empty()) row_labels_ = DefaultLabels("r", rows_);
  if (col_labels_.empty()) col_labels_ = DefaultLabels("c", cols_);
  if (static_cast<int>(row_labels_.size()) != rows_ ||
      static_cast<int>(col_labels_.size()) != cols_) {
    throw DimensionError("label count does not match the game dimensions");
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) throw PreconditionError("payoff entry is not finite");
    if (normalized_ && std::abs(v) > 1.0 + 1e-12) {
      throw PreconditionError("normalized game has an entry outside [-1, 1]");
    }
  }
  if (!std::isfinite(denorm_offset_) || !std::isfinite(denorm_scale_)) {
    throw PreconditionError("de-normalization parameters must be finite");
  }
}

MatrixGame MatrixGame::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionError("a game needs at least one row");
  const int cols = static_cast<int>(rows.front().size());
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) {
      throw DimensionError("ragged payoff rows");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return MatrixGame(static_cast<int>(rows.size()), cols, std::move(flat));
}

std::vector<double> MatrixGame::column(int j) const {
  std::vector<double> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

double MatrixGame::min_payoff() const {
  return *std::min_element(payoffs_.begin(), payoffs_.end());
}

double MatrixGame::max_payoff() const {
  return *std::max_element(payoffs_.begin(), payoffs_.end());
}

bool MatrixGame::within_unit_range() const {
  return std::all_of(payoffs_.begin(), payoffs_.end(),
                     [](double v) { return std::abs(v) <= 1.0 + 1e-12; });
}

MatrixGame MatrixGame::TransposeNegate() const {
  std::vector<double> out(payoffs_.size());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[j * rows_ + i] = -(*this)(i, j);
  }
  return MatrixGame(cols_, rows_, std::move(out), col_labels_, row_labels_,
                    normalized_, -denorm_offset_, denorm_scale_);
}

MatrixGame MatrixGame::Submatrix(std::span<const int> rows,
                                 std::span<const int> cols) const {
  std::vector<double> out;
  out.reserve(rows.size() * cols.size());
  std::vector<std::string> rl;
  std::vector<std::string> cl;
  for (int i : rows) {
    if (i < 0 || i >= rows_) throw DimensionError("row index out of range");
    rl.push_back(row_labels_[i]);
    for (int j : cols) {
      if (j < 0 || j >= cols_) throw DimensionError("column index out of range");
      out.push_back((*this)(i, j));
    }
  }
  for (int j : cols) cl.push_back(col_labels_[j]);
  return MatrixGame(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                    std::move(out), std::move(rl), std::move(cl), normalized_,
                    denorm_offset_, denorm_scale_);
}

MixedStrategy MixedStrategy::Pure(int size, int action, Player owner) {
  MixedStrategy s{std::vector<double>(size, 0.0), owner};
  s.probabilities.at(action) = 1.0;
  return s;
}

MixedStrategy MixedStrategy::Uniform(int size, Player owner) {
  return {std::vector<double>(size, 1.0 / size), owner};
}

void MixedStrategy::Validate() const {
  if (probabilities.empty()) throw PreconditionError("empty mixed strategy");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw PreconditionError("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw PreconditionError("probabilities sum to " + std::to_string(total));
  }
}

MatrixGame Normalize(const MatrixGame& game) {
  const double lo = game.min_payoff();
  const double hi = game.max_payoff();
  std::vector<double> out(game.payoffs().begin(), game.payoffs().end());
  double offset = 0.0;
  double scale = 1.0;
  if (hi > lo) {
    offset = 0.5 * (hi + lo);
    scale = 0.5 * (hi - lo);
    for (double& v : out) v = std::clamp((v - offset) / scale, -1.0, 1.0);
    // Exact endpoints.
    for (std::size_t e = 0; e < out.size(); ++e) {
      if (game.payoffs()[e] == lo) out[e] = -1.0;
      if (game.payoffs()[e] == hi) out[e] = 1.0;
    }
  } else {
    offset = lo;
    std::fill(out.begin(), out.end(), 0.0);
  }
  return MatrixGame(game.rows(), game.cols(), std::move(out), game.row_labels(),
                    game.col_labels(), true,
                    game.denorm_offset() + game.denorm_scale() * offset,
                    game.denorm_scale() * scale);
}

MatrixGame ScaleByMaxAbs(const MatrixGame& game) {
  double peak = 0.0;
  for (double v : game.payoffs()) peak = std::max(peak, std::abs(v));
  std::vector<double> out(game.payoffs().begin(), game.payoffs().end());
  if (peak > 0.0) {
    for (double& v : out) v /= peak;
  } else {
    peak = 1.0;
  }
  return MatrixGame(game.rows(), game.cols(), std::move(out), game.row_labels(),
                    game.col_labels(), true, game.denorm_offset(),
                    game.denorm_scale() * peak);
}

std::vector<double> RowPayoffs(const MatrixGame& game,
                               std::span<const double> column_strategy) {
  if (static_cast<int>(column_strategy.size()) != game.cols()) {
    throw DimensionError("column strategy has " +
                         std::to_string(column_strategy.size()) +
                         " entries for " + std::to_string(game.cols()) +
                         " columns");
  }
  std::vector<double> out(game.rows(), 0.0);
  for (int i = 0; i < game.rows(); ++i) {
    const auto row = game.row(i);
    out[i] = std::inner_product(row.begin(), row.end(), column_strategy.begin(),
                                0.0);
  }
  return out;
}

std::vector<double> ColumnPayoffs(const MatrixGame& game,
                                  std::span<const double> row_strategy) {
  if (static_cast<int>(row_strategy.size()) != game.rows()) {
    throw DimensionError("row strategy has " +
                         std::to_string(row_strategy.size()) + " entries for " +
                         std::to_string(game.rows()) + " rows");
  }
  std::vector<double> out(game.cols(), 0.0);
  for (int i = 0; i < game.rows(); ++i) {
    const double p = row_strategy[i];
    if (p == 0.0) continue;
    const auto row = game.row(i);
    for (int j = 0; j < game.cols(); ++j) out[j] += p * row[j];
  }
  return out;
}

double ExpectedPayoff(const MatrixGame& game,
                      std::span<const double> row_strategy,
                      std::span<const double> column_strategy) {
  const std::vector<double> by_column = ColumnPayoffs(game, row_strategy);
  if (static_cast<int>(column_strategy.size()) != game.cols()) {
    throw DimensionError("column strategy size mismatch");
  }
  return std::inner_product(by_column.begin(), by_column.end(),
                            column_strategy.begin(), 0.0);
}

}  // namespace portfolio
