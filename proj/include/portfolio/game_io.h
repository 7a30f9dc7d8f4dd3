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

#ifndef PORTFOLIO_GAME_IO_H_
#define PORTFOLIO_GAME_IO_H_

#include <string>

#include "portfolio/matrix_game.h"

namespace portfolio::games {

inline constexpr int kGameFormatVersion = 1;

// JSON game file:
//   {"format_version": 1, "rows": m, "cols": n,
//    "payoffs": [[...], ...],            // m rows of n decimals
//    "row_labels": [...], "col_labels": [...],
//    "normalized": bool,
//    "denorm_offset": x, "denorm_scale": y}   // optional
// Decimals are written with round-trip precision, so Load(Save(g)) == g.
std::string GameToJson(const MatrixGame& game);
// Throws ParseError naming the offending field (or line/column for syntax).
MatrixGame GameFromJson(const std::string& text, const std::string& origin = "<string>");

void SaveGame(const MatrixGame& game, const std::string& path);
MatrixGame LoadGame(const std::string& path);

}  // namespace portfolio::games

#endif  // PORTFOLIO_GAME_IO_H_
