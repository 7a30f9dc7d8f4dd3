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

#ifndef PORTFOLIO_EXPERIMENT_H_
#define PORTFOLIO_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "portfolio/construction.h"
#include "portfolio/evaluation.h"
#include "portfolio/fixtures.h"
#include "portfolio/matrix_game.h"
#include "portfolio/random.h"

namespace portfolio::bench {

// Where the games of an experiment come from.
struct GameSpec {
  // random, blotto, goofspiel3, kuhn, fixture or file.
  std::string generator = "random";
  int rows = 10;
  int cols = 10;
  int fields = 3;
  int coins = 6;
  double bet = 2.0;
  std::string fixture;
  games::FixtureParams fixture_params;
  std::string path;

  // True when the game depends on the cell seed.
  bool seeded() const { return generator == "random"; }
  // Stable identifier used in the "game" column.
  std::string Id() const;
  // The game for one cell, with every entry in [-1, 1]. Unseeded games ignore
  // the generator.
  MatrixGame Make(Rng& rng) const;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<GameSpec> games;
  std::vector<std::string> methods;
  // Portfolio sizes; sizes above a game's column count are skipped.
  std::vector<int> ks;
  // Targets for eps_dom_min_size.
  std::vector<double> epsilons;
  std::vector<SelectionFunction> selections = {SelectionFunction::Pessimistic()};
  std::vector<std::uint64_t> seeds;
  std::string csv_path;
  std::string summary_path;
  std::string plot_dir;
  int parallelism = 1;
  construct::ConstructOptions options;

  // Seeds default to 10..59.
  static std::vector<std::uint64_t> DefaultSeeds();
  // Throws ParseError with the offending field.
  static ExperimentConfig FromJson(const std::string& text,
                                   const std::string& origin = "<string>");
  static ExperimentConfig Load(const std::string& path);
  // Throws ParameterError or LookupError.
  void Validate() const;
};

struct ResultRow {
  std::string game;
  std::string method;
  int k = 0;
  std::uint64_t seed = 0;
  std::string selection;
  double exploitability = 0.0;
  std::optional<double> epsilon_bound;
  double runtime_ms = 0.0;
  // Non-empty for failed cells.
  std::string error;
};

inline constexpr const char* kCsvHeader =
    "game,method,k,seed,selection,exploitability,epsilon_bound,runtime_ms";

// Runs the full grid. Rows come back in grid order (game, method, size,
// seed, selection) regardless of parallelism. Failed cells become error rows.
std::vector<ResultRow> RunExperiment(const ExperimentConfig& config);

std::string ToCsv(const std::vector<ResultRow>& rows, bool include_runtime = true);
void WriteCsv(const std::vector<ResultRow>& rows, const std::string& path);

struct Aggregate {
  std::string game;
  std::string method;
  std::string selection;
  // k for size-driven methods, the target eps for eps_dom_min_size.
  double param = 0.0;
  int count = 0;
  int errors = 0;
  double mean_k = 0.0;
  double mean_exploitability = 0.0;
  double stderr_exploitability = 0.0;
  std::optional<double> mean_epsilon_bound;
  double stderr_epsilon_bound = 0.0;
  double mean_runtime_ms = 0.0;
};

// Mean and standard error (sample deviation over sqrt(count)) per cell,
// ignoring error rows. Sorted by (game, method, selection, param).
std::vector<Aggregate> Summarize(const std::vector<ResultRow>& rows);
std::string SummaryToCsv(const std::vector<Aggregate>& aggregates);

}  // namespace portfolio::bench

#endif  // PORTFOLIO_EXPERIMENT_H_
