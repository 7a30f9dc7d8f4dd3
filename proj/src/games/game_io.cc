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

#include "portfolio/game_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "portfolio/errors.h"

namespace portfolio::games {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

const json& Field(const json& doc, const char* name, const std::string& origin) {
  auto it = doc.find(name);
  if (it == doc.end()) Fail(origin, std::string("missing field '") + name + "'");
  return *it;
}

int PositiveInt(const json& doc, const char* name, const std::string& origin) {
  const json& v = Field(doc, name, origin);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    Fail(origin, std::string("field '") + name + "' must be a positive integer");
  }
  return v.get<int>();
}

double Finite(const json& v, const std::string& where, const std::string& origin) {
  if (!v.is_number()) Fail(origin, where + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) Fail(origin, where + ": value is not finite");
  return d;
}

std::vector<std::string> Labels(const json& doc, const char* name, int expected,
                                const std::string& origin) {
  auto it = doc.find(name);
  if (it == doc.end()) return {};
  if (!it->is_array() || static_cast<int>(it->size()) != expected) {
    Fail(origin, std::string("field '") + name + "' must be an array of " +
                     std::to_string(expected) + " strings");
  }
  std::vector<std::string> out;
  for (const json& s : *it) {
    if (!s.is_string()) Fail(origin, std::string("field '") + name + "' has a non-string entry");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

std::string GameToJson(const MatrixGame& game) {
  json doc;
  doc["format_version"] = kGameFormatVersion;
  doc["rows"] = game.rows();
  doc["cols"] = game.cols();
  json payoffs = json::array();
  for (int i = 0; i < game.rows(); ++i) {
    const auto row = game.row(i);
    payoffs.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["payoffs"] = std::move(payoffs);
  doc["row_labels"] = game.row_labels();
  doc["col_labels"] = game.col_labels();
  doc["normalized"] = game.normalized();
  doc["denorm_offset"] = game.denorm_offset();
  doc["denorm_scale"] = game.denorm_scale();
  return doc.dump(1) + "\n";
}

MatrixGame GameFromJson(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    Fail(origin, e.what());
  }
  if (!doc.is_object()) Fail(origin, "top level must be an object");
  const json& version = Field(doc, "format_version", origin);
  if (!version.is_number_integer() || version.get<int>() != kGameFormatVersion) {
    Fail(origin, "unsupported format_version");
  }
  const int rows = PositiveInt(doc, "rows", origin);
  const int cols = PositiveInt(doc, "cols", origin);
  const json& payoffs = Field(doc, "payoffs", origin);
  if (!payoffs.is_array() || static_cast<int>(payoffs.size()) != rows) {
    Fail(origin, "field 'payoffs' must hold " + std::to_string(rows) + " rows");
  }
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = payoffs[i];
    const std::string where = "payoffs[" + std::to_string(i) + "]";
    if (!row.is_array()) Fail(origin, where + ": expected an array");
    if (static_cast<int>(row.size()) != cols) {
      Fail(origin, where + ": expected " + std::to_string(cols) +
                       " entries, got " + std::to_string(row.size()));
    }
    for (int j = 0; j < cols; ++j) {
      flat.push_back(Finite(row[j], where + "[" + std::to_string(j) + "]", origin));
    }
  }
  bool normalized = false;
  if (auto it = doc.find("normalized"); it != doc.end()) {
    if (!it->is_boolean()) Fail(origin, "field 'normalized' must be a boolean");
    normalized = it->get<bool>();
  }
  double offset = 0.0;
  double scale = 1.0;
  if (auto it = doc.find("denorm_offset"); it != doc.end()) {
    offset = Finite(*it, "denorm_offset", origin);
  }
  if (auto it = doc.find("denorm_scale"); it != doc.end()) {
    scale = Finite(*it, "denorm_scale", origin);
  }
  try {
    return MatrixGame(rows, cols, std::move(flat),
                      Labels(doc, "row_labels", rows, origin),
                      Labels(doc, "col_labels", cols, origin), normalized, offset,
                      scale);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    Fail(origin, e.what());
  }
}

void SaveGame(const MatrixGame& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << GameToJson(game);
  if (!out) throw Error("failed writing '" + path + "'");
}

MatrixGame LoadGame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return GameFromJson(buffer.str(), path);
}

}  // namespace portfolio::games
