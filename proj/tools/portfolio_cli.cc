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

// Command-line front end: generate, construct, evaluate, experiment and
// verify-fixtures.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "portfolio/construction.h"
#include "portfolio/equilibrium.h"
#include "portfolio/errors.h"
#include "portfolio/evaluation.h"
#include "portfolio/experiment.h"
#include "portfolio/fixture_checks.h"
#include "portfolio/game_io.h"
#include "portfolio/plot_data.h"
#include "portfolio/portfolio.h"

namespace {

using namespace portfolio;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kSolver = 3;

MatrixGame LoadForPrograms(const std::string& path, bool normalize) {
  MatrixGame g = games::LoadGame(path);
  if (normalize) return Normalize(g);
  if (!g.within_unit_range()) {
    throw PreconditionError(path + ": payoffs outside [-1, 1]; pass --normalize");
  }
  return g;
}

struct GenerateArgs {
  bench::GameSpec spec;
  std::uint64_t seed = 0;
  bool normalize = false;
  std::string output;
};

int Generate(const GenerateArgs& a) {
  if (a.spec.generator == "file") throw ParameterError("generate cannot read files");
  Rng rng(a.seed);
  MatrixGame g = a.spec.Make(rng);
  if (a.normalize) g = Normalize(g);
  if (a.output.empty()) {
    std::cout << games::GameToJson(g) << "\n";
  } else {
    games::SaveGame(g, a.output);
    std::cerr << "wrote " << g.rows() << "x" << g.cols() << " game to " << a.output << "\n";
  }
  return kOk;
}

struct ConstructArgs {
  std::string game;
  construct::ConstructRequest request;
  std::string selection = "pessimistic";
  std::string engine = "search";
  bool normalize = false;
  std::string output;
};

int Construct(ConstructArgs a) {
  const MatrixGame g = LoadForPrograms(a.game, a.normalize);
  a.request.selection = SelectionFunction::Parse(a.selection);
  if (a.engine == "milp") {
    a.request.options.engine = construct::Engine::kMilp;
  } else if (a.engine != "search") {
    throw ParameterError("engine must be 'search' or 'milp'");
  }
  const construct::ConstructionResult r = a.request.method == "random_mixed"
                                              ? construct::RandomMixed(g, a.request.k, a.request.seed)
                                              : construct::Construct(g, a.request);
  if (a.output.empty()) {
    std::cout << construct::ConstructionToJson(r) << "\n";
  } else {
    construct::SaveConstruction(r, a.output);
    std::cerr << r.method << ": k = " << r.portfolio.k();
    if (r.epsilon_bound) std::cerr << ", epsilon = " << *r.epsilon_bound;
    if (!r.proven_optimal) std::cerr << " (budget exhausted, not proven optimal)";
    std::cerr << "\n";
  }
  return kOk;
}

struct EvaluateArgs {
  std::string game;
  std::string portfolio;
  std::string selection = "pessimistic";
  bool normalize = false;
};

int Evaluate(const EvaluateArgs& a) {
  const MatrixGame g = LoadForPrograms(a.game, a.normalize);
  const Portfolio p = LoadPortfolio(a.portfolio);
  const SelectionFunction sel = SelectionFunction::Parse(a.selection);
  const PortfolioEvaluation e = portfolio::Evaluate(g, p, sel);
  std::printf("selection        %s\n", sel.ToString().c_str());
  std::printf("game value       %.9g\n", e.game_value);
  std::printf("restricted value %.9g\n", e.restricted_value);
  std::printf("utility          %.9g\n", e.utility);
  std::printf("exploitability   %.9g\n", e.exploitability);
  std::printf("raw units        %.9g\n", ToRawUnits(g, e.exploitability));
  return kOk;
}

struct ExperimentArgs {
  std::string config;
  std::string csv;
  std::string summary;
  std::string plots;
  int parallelism = 0;
};

int Experiment(const ExperimentArgs& a) {
  bench::ExperimentConfig c = bench::ExperimentConfig::Load(a.config);
  if (!a.csv.empty()) c.csv_path = a.csv;
  if (!a.summary.empty()) c.summary_path = a.summary;
  if (!a.plots.empty()) c.plot_dir = a.plots;
  if (a.parallelism > 0) c.parallelism = a.parallelism;
  const auto rows = bench::RunExperiment(c);
  int errors = 0;
  for (const auto& r : rows) errors += !r.error.empty();

  if (c.csv_path.empty()) {
    std::cout << bench::ToCsv(rows);
  } else {
    bench::WriteCsv(rows, c.csv_path);
    std::cerr << "wrote " << rows.size() << " rows to " << c.csv_path << "\n";
  }
  if (!c.summary_path.empty()) {
    std::ofstream out(c.summary_path);
    if (!out) throw Error("cannot open '" + c.summary_path + "' for writing");
    out << bench::SummaryToCsv(bench::Summarize(rows));
  }
  if (!c.plot_dir.empty()) {
    const bench::Table table = bench::ParseCsv(bench::ToCsv(rows));
    std::vector<bench::PlotSpec> specs;
    if (!c.epsilons.empty()) specs = bench::EpsilonSweepPlots(c.plot_dir);
    if (!c.ks.empty()) {
      for (auto& s : bench::SizeSweepPlots(c.plot_dir)) specs.push_back(s);
    }
    for (const auto& spec : specs) {
      const auto out = bench::EmitPlotData(table, spec);
      for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
    }
  }
  if (errors) std::cerr << "warning: " << errors << " cells failed\n";
  return kOk;
}

int VerifyFixtures() {
  const auto checks = bench::VerifyFixtures();
  std::cout << bench::FormatReport(checks);
  for (const auto& c : checks) {
    if (!c.passed) return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Portfolio abstraction for zero-sum matrix games"};
  app.require_subcommand(1);
  int status = kOk;

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a game to a JSON file");
  g->add_option("--generator", gen.spec.generator,
                "random, blotto, goofspiel3, kuhn or fixture")
      ->capture_default_str();
  g->add_option("--rows", gen.spec.rows)->capture_default_str();
  g->add_option("--cols", gen.spec.cols)->capture_default_str();
  g->add_option("--fields", gen.spec.fields)->capture_default_str();
  g->add_option("--coins", gen.spec.coins)->capture_default_str();
  g->add_option("--bet", gen.spec.bet)->capture_default_str();
  g->add_option("--fixture", gen.spec.fixture, "Fixture name");
  g->add_option("--delta", gen.spec.fixture_params.delta)->capture_default_str();
  g->add_option("--n", gen.spec.fixture_params.n)->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_flag("--normalize", gen.normalize, "Min-max normalize to [-1, 1]");
  g->add_option("-o,--output", gen.output, "Output file (stdout if omitted)");
  g->callback([&] { status = Generate(gen); });

  ConstructArgs con;
  auto* c = app.add_subcommand("construct", "Build a portfolio for a game");
  c->add_option("--game", con.game)->required();
  c->add_option("--method", con.request.method)
      ->required()
      ->check(CLI::IsMember(construct::MethodNames()));
  c->add_option("-k,--k", con.request.k)->capture_default_str();
  c->add_option("--epsilon", con.request.epsilon, "Target for eps_dom_min_size");
  c->add_option("--seed", con.request.seed)->capture_default_str();
  c->add_option("--selection", con.selection, "Selection for brute_force_pure")
      ->capture_default_str();
  c->add_option("--engine", con.engine, "search or milp")->capture_default_str();
  c->add_option("--node-budget", con.request.options.node_budget)->capture_default_str();
  c->add_option("--milp-node-limit", con.request.options.milp_node_limit)
      ->capture_default_str();
  c->add_option("--enumeration-budget", con.request.options.enumeration_budget)
      ->capture_default_str();
  c->add_flag("--normalize", con.normalize, "Normalize the game first");
  c->add_option("-o,--output", con.output, "Output file (stdout if omitted)");
  c->callback([&] { status = Construct(con); });

  EvaluateArgs ev;
  auto* e = app.add_subcommand("evaluate", "Exploitability of a portfolio");
  e->add_option("--game", ev.game)->required();
  e->add_option("--portfolio", ev.portfolio)->required();
  e->add_option("--selection", ev.selection, "pessimistic, optimistic or rm_plus[:T]")
      ->capture_default_str();
  e->add_flag("--normalize", ev.normalize, "Normalize the game first");
  e->callback([&] { status = Evaluate(ev); });

  ExperimentArgs ex;
  auto* x = app.add_subcommand("experiment", "Run an experiment grid from a config file");
  x->add_option("config", ex.config)->required();
  x->add_option("--csv", ex.csv, "Override the results CSV path");
  x->add_option("--summary", ex.summary, "Override the summary CSV path");
  x->add_option("--plots", ex.plots, "Override the plot directory");
  x->add_option("-j,--parallelism", ex.parallelism);
  x->callback([&] { status = Experiment(ex); });

  auto* v = app.add_subcommand("verify-fixtures", "Check the counterexample fixtures");
  v->callback([&] { status = VerifyFixtures(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const LookupError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const ParameterError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const SchemaError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const DimensionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kSolver;
  }
  return status;
}
