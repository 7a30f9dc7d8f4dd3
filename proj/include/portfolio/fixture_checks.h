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

#ifndef PORTFOLIO_FIXTURE_CHECKS_H_
#define PORTFOLIO_FIXTURE_CHECKS_H_

#include <string>
#include <vector>

namespace portfolio::bench {

struct FixtureCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 1e-6;
  bool passed = false;
  // Relation checked: "==" or ">=".
  std::string relation = "==";
};

// Every counterexample assertion on the fixture games, in raw units.
std::vector<FixtureCheck> VerifyFixtures();

std::string FormatReport(const std::vector<FixtureCheck>& checks);

}  // namespace portfolio::bench

#endif  // PORTFOLIO_FIXTURE_CHECKS_H_
