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

#include "portfolio/portfolio.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "portfolio/errors.h"

namespace portfolio {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

bool IsBasisVector(const std::vector<double>& p) {
  int ones = 0;
  for (double x : p) {
    if (x == 1.0) {
      ++ones;
    } else if (x != 0.0) {
      return false;
    }
  }
  return ones == 1;
}

}  // namespace

Portfolio::Portfolio(std::vector<std::vector<double>> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.empty()) throw PreconditionError("portfolio needs k >= 1");
  const std::size_t n = strategies_[0].size();
  for (std::size_t z = 0; z < strategies_.size(); ++z) {
    if (strategies_[z].size() != n) {
      throw PreconditionError("portfolio row " + std::to_string(z) + " has " +
                              std::to_string(strategies_[z].size()) +
                              " entries, expected " + std::to_string(n));
    }
    MixedStrategy{strategies_[z], Player::kColumn}.Validate();
  }
}

Portfolio Portfolio::FromColumns(int n, std::span<const int> columns) {
  std::vector<std::vector<double>> rows;
  for (int c : columns) {
    if (c < 0 || c >= n) {
      throw PreconditionError("column " + std::to_string(c) + " out of range");
    }
    rows.push_back(MixedStrategy::Pure(n, c, Player::kColumn).probabilities);
  }
  return Portfolio(std::move(rows));
}

Portfolio Portfolio::Identity(int n) {
  std::vector<int> all(n);
  for (int j = 0; j < n; ++j) all[j] = j;
  return FromColumns(n, all);
}

bool Portfolio::pure() const {
  for (const auto& p : strategies_) {
    if (!IsBasisVector(p)) return false;
  }
  return true;
}

std::vector<int> Portfolio::columns() const {
  std::vector<int> out;
  for (const auto& p : strategies_) {
    if (!IsBasisVector(p)) throw PreconditionError("portfolio is not pure");
    for (int j = 0; j < static_cast<int>(p.size()); ++j) {
      if (p[j] == 1.0) out.push_back(j);
    }
  }
  return out;
}

MatrixGame Restrict(const MatrixGame& game, const Portfolio& portfolio) {
  if (portfolio.n() != game.cols()) {
    throw DimensionError("portfolio covers " + std::to_string(portfolio.n()) +
                         " actions, game has " + std::to_string(game.cols()));
  }
  const int m = game.rows();
  const int k = portfolio.k();
  std::vector<double> payoffs(static_cast<std::size_t>(m) * k, 0.0);
  for (int z = 0; z < k; ++z) {
    const auto& p = portfolio.strategy(z);
    for (int j = 0; j < game.cols(); ++j) {
      if (p[j] == 0.0) continue;
      for (int i = 0; i < m; ++i) payoffs[i * k + z] += game(i, j) * p[j];
    }
  }
  std::vector<std::string> labels(k);
  for (int z = 0; z < k; ++z) {
    const auto& p = portfolio.strategy(z);
    int single = -1;
    for (int j = 0; j < game.cols(); ++j) {
      if (p[j] == 1.0) single = j;
    }
    labels[z] = single >= 0 ? game.col_labels()[single] : "p" + std::to_string(z);
  }
  // Rows of a restricted normalized game stay within [-1, 1] up to rounding,
  // so the flag is not carried over.
  return MatrixGame(m, k, std::move(payoffs), game.row_labels(), std::move(labels),
                    false, game.denorm_offset(), game.denorm_scale());
}

std::string PortfolioToJson(const Portfolio& portfolio) {
  json doc;
  doc["format_version"] = kPortfolioFormatVersion;
  doc["k"] = portfolio.k();
  doc["n"] = portfolio.n();
  doc["pure"] = portfolio.pure();
  doc["strategies"] = portfolio.strategies();
  return doc.dump(1) + "\n";
}

Portfolio PortfolioFromJson(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    Fail(origin, e.what());
  }
  if (!doc.is_object()) Fail(origin, "top level must be an object");
  auto version = doc.find("format_version");
  if (version == doc.end() || !version->is_number_integer() ||
      version->get<int>() != kPortfolioFormatVersion) {
    Fail(origin, "missing or unsupported format_version");
  }
  auto strategies = doc.find("strategies");
  if (strategies == doc.end() || !strategies->is_array() || strategies->empty()) {
    Fail(origin, "field 'strategies' must be a nonempty array");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t z = 0; z < strategies->size(); ++z) {
    const json& row = (*strategies)[z];
    const std::string where = "strategies[" + std::to_string(z) + "]";
    if (!row.is_array()) Fail(origin, where + ": expected an array");
    std::vector<double> p;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number()) {
        Fail(origin, where + "[" + std::to_string(j) + "]: expected a number");
      }
      double v = row[j].get<double>();
      if (!std::isfinite(v)) {
        Fail(origin, where + "[" + std::to_string(j) + "]: value is not finite");
      }
      p.push_back(v);
    }
    rows.push_back(std::move(p));
  }
  if (auto k = doc.find("k"); k != doc.end()) {
    if (!k->is_number_integer() || k->get<long long>() != static_cast<long long>(rows.size())) {
      Fail(origin, "field 'k' disagrees with the number of strategies");
    }
  }
  Portfolio out;
  try {
    out = Portfolio(std::move(rows));
  } catch (const Error& e) {
    Fail(origin, e.what());
  }
  if (auto pure = doc.find("pure"); pure != doc.end()) {
    if (!pure->is_boolean()) Fail(origin, "field 'pure' must be a boolean");
    if (pure->get<bool>() != out.pure()) {
      Fail(origin, "field 'pure' disagrees with the strategies");
    }
  }
  return out;
}

void SavePortfolio(const Portfolio& portfolio, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << PortfolioToJson(portfolio);
  if (!out) throw Error("failed writing '" + path + "'");
}

Portfolio LoadPortfolio(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return PortfolioFromJson(buffer.str(), path);
}

}  // namespace portfolio
