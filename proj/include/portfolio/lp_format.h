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

#ifndef PORTFOLIO_LP_FORMAT_H_
#define PORTFOLIO_LP_FORMAT_H_

#include <iosfwd>
#include <string>

#include "portfolio/solver.h"

namespace portfolio::solver {

// Writes the model in the CPLEX LP text dialect (Minimize/Maximize,
// Subject To, Bounds, Binaries, End). Unnamed variables are written as
// x0, x1, ... and rows as c0, c1, ...; intended for debugging only.
void WriteLpFormat(std::ostream& out, const LinearProgram& lp);
void WriteLpFormat(std::ostream& out, const MixedIntegerProgram& mip);
std::string ToLpFormat(const MixedIntegerProgram& mip);

}  // namespace portfolio::solver

#endif  // PORTFOLIO_LP_FORMAT_H_
