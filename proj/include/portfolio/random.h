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

#ifndef PORTFOLIO_RANDOM_H_
#define PORTFOLIO_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace portfolio {

// Seeded generator used by every stochastic component.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Range sampling is done here rather than through the
// implementation-defined std::*_distribution classes so that a given seed
// yields the same numbers on every platform:
//  * UniformInt(lo, hi): rejection sampling on the raw 64-bit output,
//    value = lo + (draw mod span) with draws above the largest multiple of
//    span rejected.
//  * UniformReal(): the top 53 bits of one draw divided by 2^53, in [0, 1).
//  * Exponential(): -log(1 - UniformReal()).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  double UniformReal();
  double Exponential();
  // Uniform point of the probability simplex of dimension `size`
  // (normalized exponential spacings).
  std::vector<double> Simplex(int size);

 private:
  std::mt19937_64 engine_;
};

}  // namespace portfolio

#endif  // PORTFOLIO_RANDOM_H_
