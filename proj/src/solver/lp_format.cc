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

#include "portfolio/lp_format.h"

#include <cmath>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace portfolio::solver {
namespace {

std::string VariableName(const LinearProgram& lp, int j) {
  if (j < static_cast<int>(lp.names.size()) && !lp.names[j].empty()) {
    return lp.names[j];
  }
  return "x" + std::to_string(j);
}

void WriteTerms(std::ostream& out, const LinearProgram& lp,
                const std::vector<double>& coefficients) {
  bool first = true;
  for (int j = 0; j < lp.num_variables(); ++j) {
    const double c = coefficients[j];
    if (c == 0.0) continue;
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (std::abs(c) != 1.0) out << std::abs(c) << ' ';
    out << VariableName(lp, j);
    first = false;
  }
  if (first) out << '0';
}

void Write(std::ostream& out, const LinearProgram& lp,
           const std::set<int>& binaries) {
  const auto precision = out.precision(17);
  out << (lp.sense == Sense::kMinimize ? "Minimize\n" : "Maximize\n")
      << " obj: ";
  WriteTerms(out, lp, lp.objective);
  out << "\nSubject To\n";
  for (int r = 0; r < lp.num_constraints(); ++r) {
    const Constraint& row = lp.constraints[r];
    out << " c" << r << ": ";
    WriteTerms(out, lp, row.coefficients);
    switch (row.relation) {
      case Relation::kLessEqual:
        out << " <= ";
        break;
      case Relation::kEqual:
        out << " = ";
        break;
      case Relation::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << row.rhs << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (binaries.count(j)) continue;
    const Bounds& b = lp.bounds[j];
    const std::string name = VariableName(lp, j);
    if (std::isinf(b.lower) && std::isinf(b.upper)) {
      out << ' ' << name << " free\n";
    } else if (b.lower == b.upper) {
      out << ' ' << name << " = " << b.lower << '\n';
    } else {
      out << ' ';
      if (std::isinf(b.lower)) {
        out << "-inf";
      } else {
        out << b.lower;
      }
      out << " <= " << name;
      if (!std::isinf(b.upper)) out << " <= " << b.upper;
      out << '\n';
    }
  }
  if (!binaries.empty()) {
    out << "Binaries\n";
    for (int j : binaries) out << ' ' << VariableName(lp, j) << '\n';
  }
  out << "End\n";
  out.precision(precision);
}

}  // namespace

void WriteLpFormat(std::ostream& out, const LinearProgram& lp) {
  Write(out, lp, {});
}

void WriteLpFormat(std::ostream& out, const MixedIntegerProgram& mip) {
  Write(out, mip.base,
        std::set<int>(mip.binary_indices.begin(), mip.binary_indices.end()));
}

std::string ToLpFormat(const MixedIntegerProgram& mip) {
  std::ostringstream out;
  WriteLpFormat(out, mip);
  return out.str();
}

}  // namespace portfolio::solver
