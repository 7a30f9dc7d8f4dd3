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

#include "portfolio/random.h"

#include <cmath>
#include <limits>

#include "portfolio/errors.h"

namespace portfolio {

std::int64_t Rng::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ParameterError("empty integer range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full range
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

double Rng::UniformReal() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::Exponential() { return -std::log1p(-UniformReal()); }

std::vector<double> Rng::Simplex(int size) {
  std::vector<double> out(size);
  double total = 0.0;
  for (double& v : out) {
    v = Exponential();
    total += v;
  }
  if (total <= 0.0) {
    // All draws hit exactly zero; fall back to the barycenter.
    for (double& v : out) v = 1.0 / size;
    return out;
  }
  for (double& v : out) v /= total;
  return out;
}

}  // namespace portfolio
