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

#include "portfolio/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "portfolio/equilibrium.h"
#include "portfolio/errors.h"
#include "portfolio/game_io.h"
#include "portfolio/generators.h"

namespace portfolio::bench {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

std::string Number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Accepts a list or {"from", "to", "step"}.
template <typename T>
std::vector<T> Range(const json& v, const std::string& field, const std::string& origin) {
  std::vector<T> out;
  try {
    if (v.is_array()) {
      for (const json& x : v) out.push_back(x.get<T>());
    } else if (v.is_object()) {
      const T from = v.at("from").get<T>();
      const T to = v.at("to").get<T>();
      const T step = v.contains("step") ? v.at("step").get<T>() : T(1);
      if (!(step > T(0))) Fail(origin, field + ": step must be positive");
      // Index-based so floating grids do not drift.
      for (long long t = 0;; ++t) {
        const T x = static_cast<T>(from + static_cast<T>(t) * step);
        if (x > to + (std::is_floating_point_v<T> ? step * 1e-9 : T(0))) break;
        out.push_back(x);
      }
    } else {
      Fail(origin, field + ": expected a list or a {from, to, step} range");
    }
  } catch (const json::exception& e) {
    Fail(origin, field + ": " + e.what());
  }
  return out;
}

GameSpec ParseGame(const json& v, const std::string& where, const std::string& origin) {
  if (!v.is_object()) Fail(origin, where + ": expected an object");
  GameSpec g;
  try {
    g.generator = v.value("generator", g.generator);
    g.rows = v.value("rows", g.rows);
    g.cols = v.value("cols", g.cols);
    if (v.contains("size")) g.rows = g.cols = v.at("size").get<int>();
    g.fields = v.value("fields", g.fields);
    g.coins = v.value("coins", g.coins);
    g.bet = v.value("bet", g.bet);
    g.fixture = v.value("name", g.fixture);
    g.fixture_params.delta = v.value("delta", g.fixture_params.delta);
    g.fixture_params.n = v.value("n", g.fixture_params.n);
    g.path = v.value("path", g.path);
  } catch (const json::exception& e) {
    Fail(origin, where + ": " + e.what());
  }
  return g;
}

MatrixGame IntoUnitRange(MatrixGame g) {
  return g.within_unit_range() ? g : Normalize(g);
}

struct Job {
  int game = 0;
  int method = 0;
  int param = 0;
  int seed = 0;
  // Index of the job whose rows this one copies, or -1.
  int copy_of = -1;
};

bool IsMinSize(const std::string& method) { return method == "eps_dom_min_size"; }

std::vector<ResultRow> RunJob(const ExperimentConfig& c, const Job& job) {
  const GameSpec& spec = c.games[job.game];
  const std::string& method = c.methods[job.method];
  const std::uint64_t seed = c.seeds[job.seed];
  std::vector<ResultRow> rows;
  auto base = [&](const SelectionFunction& sel) {
    ResultRow r;
    r.game = spec.Id();
    r.method = method;
    r.seed = seed;
    r.selection = sel.ToString();
    if (!IsMinSize(method)) r.k = c.ks[job.param];
    return r;
  };
  try {
    Rng rng(seed);
    const MatrixGame game = spec.Make(rng);
    const double value = equilibrium::GameValue(game).value;
    construct::ConstructRequest req;
    req.method = method;
    req.options = c.options;
    req.seed = seed;
    if (IsMinSize(method)) {
      req.epsilon = c.epsilons[job.param];
    } else {
      req.k = c.ks[job.param];
      if (req.k > game.cols()) return rows;
    }
    if (method == "brute_force_pure") {
      for (const SelectionFunction& sel : c.selections) {
        req.selection = sel;
        construct::ConstructionResult res = construct::Construct(game, req);
        ResultRow r = base(sel);
        r.k = res.portfolio.k();
        r.exploitability = *res.exploitability;
        r.runtime_ms = res.runtime_ms;
        rows.push_back(r);
      }
      return rows;
    }
    construct::ConstructionResult res =
        method == "random_mixed" ? construct::RandomMixed(game, req.k, rng)
                                 : construct::Construct(game, req);
    for (const SelectionFunction& sel : c.selections) {
      ResultRow r = base(sel);
      r.k = res.portfolio.k();
      r.exploitability = Exploitability(game, res.portfolio, sel, value);
      r.epsilon_bound = res.epsilon_bound;
      r.runtime_ms = res.runtime_ms;
      rows.push_back(r);
    }
  } catch (const std::exception& e) {
    rows.clear();
    for (const SelectionFunction& sel : c.selections) {
      ResultRow r = base(sel);
      r.exploitability = std::nan("");
      r.error = e.what();
      rows.push_back(r);
    }
  }
  return rows;
}

std::string CsvSafe(std::string s) {
  for (char& ch : s) {
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') ch = ';';
  }
  return s;
}

}  // namespace

std::string GameSpec::Id() const {
  if (generator == "random") return "random_" + std::to_string(rows) + "x" + std::to_string(cols);
  if (generator == "blotto") return "blotto_" + std::to_string(fields) + "_" + std::to_string(coins);
  if (generator == "goofspiel3") return "goofspiel3";
  if (generator == "kuhn") return "kuhn_" + Number(bet);
  if (generator == "fixture") {
    if (fixture == "theorem_3") return fixture + "_d" + Number(fixture_params.delta);
    if (fixture == "neg_identity" || fixture == "rank_game") {
      return fixture + "_n" + std::to_string(fixture_params.n);
    }
    return fixture;
  }
  if (generator == "file") return std::filesystem::path(path).stem().string();
  return generator;
}

MatrixGame GameSpec::Make(Rng& rng) const {
  if (generator == "random") return games::RandomGame(rows, cols, rng);
  if (generator == "blotto") return games::Blotto(fields, coins);
  if (generator == "goofspiel3") return games::Goofspiel3();
  if (generator == "kuhn") return games::KuhnPoker(bet);
  if (generator == "fixture") return IntoUnitRange(games::Fixture(fixture, fixture_params));
  if (generator == "file") return IntoUnitRange(games::LoadGame(path));
  throw LookupError("unknown game generator '" + generator + "'");
}

std::vector<std::uint64_t> ExperimentConfig::DefaultSeeds() {
  std::vector<std::uint64_t> s;
  for (std::uint64_t x = 10; x <= 59; ++x) s.push_back(x);
  return s;
}

ExperimentConfig ExperimentConfig::FromJson(const std::string& text,
                                            const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    Fail(origin, e.what());
  }
  if (!doc.is_object()) Fail(origin, "top level must be an object");
  ExperimentConfig c;
  c.seeds = DefaultSeeds();
  try {
    c.name = doc.value("name", c.name);
    if (doc.contains("game")) c.games.push_back(ParseGame(doc["game"], "game", origin));
    if (doc.contains("games")) {
      const json& gs = doc["games"];
      if (!gs.is_array()) Fail(origin, "games: expected a list");
      for (std::size_t t = 0; t < gs.size(); ++t) {
        c.games.push_back(ParseGame(gs[t], "games[" + std::to_string(t) + "]", origin));
      }
    }
    if (doc.contains("methods")) c.methods = doc["methods"].get<std::vector<std::string>>();
    if (doc.contains("method")) c.methods.push_back(doc["method"].get<std::string>());
    if (doc.contains("k")) c.ks = Range<int>(doc["k"], "k", origin);
    if (doc.contains("epsilons")) c.epsilons = Range<double>(doc["epsilons"], "epsilons", origin);
    if (doc.contains("seeds")) c.seeds = Range<std::uint64_t>(doc["seeds"], "seeds", origin);
    const int rm_iterations = doc.value("rm_iterations", equilibrium::kDefaultRmPlusIterations);
    if (doc.contains("selections")) {
      c.selections.clear();
      for (const json& s : doc["selections"]) {
        SelectionFunction sel = SelectionFunction::Parse(s.get<std::string>());
        if (sel.kind == SelectionKind::kRmPlus && s.get<std::string>().find(':') == std::string::npos) {
          sel.iterations = rm_iterations;
        }
        c.selections.push_back(sel);
      }
    }
    c.parallelism = doc.value("parallelism", c.parallelism);
    if (doc.contains("output")) {
      const json& out = doc["output"];
      c.csv_path = out.value("csv", c.csv_path);
      c.summary_path = out.value("summary", c.summary_path);
      c.plot_dir = out.value("plots", c.plot_dir);
    }
    const std::string engine = doc.value("engine", std::string("search"));
    if (engine == "milp") {
      c.options.engine = construct::Engine::kMilp;
    } else if (engine != "search") {
      Fail(origin, "engine must be 'search' or 'milp'");
    }
    c.options.node_budget = doc.value("node_budget", c.options.node_budget);
    c.options.milp_node_limit = doc.value("milp_node_limit", c.options.milp_node_limit);
    c.options.enumeration_budget =
        doc.value("enumeration_budget", c.options.enumeration_budget);
  } catch (const json::exception& e) {
    Fail(origin, e.what());
  } catch (const ParameterError& e) {
    Fail(origin, e.what());
  }
  return c;
}

ExperimentConfig ExperimentConfig::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  ExperimentConfig c = FromJson(buffer.str(), path);
  // Relative paths in the config are relative to the config file.
  const auto dir = std::filesystem::path(path).parent_path();
  for (GameSpec& g : c.games) {
    if (g.generator == "file" && std::filesystem::path(g.path).is_relative()) {
      g.path = (dir / g.path).string();
    }
  }
  return c;
}

void ExperimentConfig::Validate() const {
  if (games.empty()) throw ParameterError("config has no games");
  if (methods.empty()) throw ParameterError("config has no methods");
  if (seeds.empty()) throw ParameterError("config has no seeds");
  if (selections.empty()) throw ParameterError("config has no selection functions");
  if (parallelism < 1) throw ParameterError("parallelism must be at least 1");
  const auto& known = construct::MethodNames();
  bool sized = false;
  for (const std::string& m : methods) {
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw LookupError("unknown method '" + m + "'");
    }
    if (IsMinSize(m)) {
      if (epsilons.empty()) throw ParameterError("eps_dom_min_size needs epsilons");
      for (double e : epsilons) {
        if (!(e >= 0.0)) throw ParameterError("epsilons must be nonnegative");
      }
    } else {
      sized = true;
    }
  }
  for (const SelectionFunction& s : selections) s.Validate();
  if (!sized) return;
  if (ks.empty()) throw ParameterError("config has no portfolio sizes");
  for (int k : ks) {
    if (k < 1) throw ParameterError("portfolio sizes must be at least 1");
  }
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  std::vector<Job> jobs;
  for (int g = 0; g < static_cast<int>(config.games.size()); ++g) {
    for (int m = 0; m < static_cast<int>(config.methods.size()); ++m) {
      const bool min_size = IsMinSize(config.methods[m]);
      const int params = static_cast<int>(min_size ? config.epsilons.size() : config.ks.size());
      const bool deterministic =
          !config.games[g].seeded() && config.methods[m] != "random_mixed";
      for (int p = 0; p < params; ++p) {
        const int first = static_cast<int>(jobs.size());
        for (int s = 0; s < static_cast<int>(config.seeds.size()); ++s) {
          jobs.push_back({g, m, p, s, deterministic && s > 0 ? first : -1});
        }
      }
    }
  }

  std::vector<std::vector<ResultRow>> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t = next++; t < jobs.size(); t = next++) {
      if (jobs[t].copy_of < 0) out[t] = RunJob(config, jobs[t]);
    }
  };
  const int threads = std::max(1, config.parallelism);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::vector<ResultRow> rows;
  for (std::size_t t = 0; t < jobs.size(); ++t) {
    if (jobs[t].copy_of >= 0) {
      out[t] = out[jobs[t].copy_of];
      for (ResultRow& r : out[t]) r.seed = config.seeds[jobs[t].seed];
    }
    rows.insert(rows.end(), out[t].begin(), out[t].end());
  }
  return rows;
}

std::string ToCsv(const std::vector<ResultRow>& rows, bool include_runtime) {
  std::string s = std::string(kCsvHeader) + "\n";
  for (const ResultRow& r : rows) {
    s += CsvSafe(r.game) + "," + r.method + "," + std::to_string(r.k) + "," +
         std::to_string(r.seed) + "," + r.selection + ",";
    s += r.error.empty() ? Number(r.exploitability) : "error(" + CsvSafe(r.error) + ")";
    s += ",";
    if (r.epsilon_bound) s += Number(*r.epsilon_bound);
    s += ",";
    s += include_runtime ? Number(r.runtime_ms) : "0";
    s += "\n";
  }
  return s;
}

void WriteCsv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << ToCsv(rows);
  if (!out) throw Error("failed writing '" + path + "'");
}

std::vector<Aggregate> Summarize(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, std::string, std::string, double>;
  struct Acc {
    std::vector<double> ex, eps, k, runtime;
    int errors = 0;
  };
  std::map<Key, Acc> cells;
  for (const ResultRow& r : rows) {
    const double param =
        IsMinSize(r.method) ? r.epsilon_bound.value_or(std::nan("")) : r.k;
    Acc& acc = cells[{r.game, r.method, r.selection, param}];
    if (!r.error.empty()) {
      ++acc.errors;
      continue;
    }
    acc.ex.push_back(r.exploitability);
    if (r.epsilon_bound) acc.eps.push_back(*r.epsilon_bound);
    acc.k.push_back(r.k);
    acc.runtime.push_back(r.runtime_ms);
  }
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / v.size();
  };
  auto stderr_of = [&](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / (v.size() - 1)) / std::sqrt(static_cast<double>(v.size()));
  };
  std::vector<Aggregate> out;
  for (const auto& [key, acc] : cells) {
    Aggregate a;
    std::tie(a.game, a.method, a.selection, a.param) = key;
    a.count = static_cast<int>(acc.ex.size());
    a.errors = acc.errors;
    a.mean_k = mean(acc.k);
    a.mean_exploitability = mean(acc.ex);
    a.stderr_exploitability = stderr_of(acc.ex);
    if (!acc.eps.empty()) {
      a.mean_epsilon_bound = mean(acc.eps);
      a.stderr_epsilon_bound = stderr_of(acc.eps);
    }
    a.mean_runtime_ms = mean(acc.runtime);
    out.push_back(a);
  }
  return out;
}

std::string SummaryToCsv(const std::vector<Aggregate>& aggregates) {
  std::string s =
      "game,method,selection,param,count,errors,mean_k,mean_exploitability,"
      "stderr_exploitability,mean_epsilon_bound,stderr_epsilon_bound,mean_runtime_ms\n";
  for (const Aggregate& a : aggregates) {
    s += CsvSafe(a.game) + "," + a.method + "," + a.selection + "," + Number(a.param) + "," +
         std::to_string(a.count) + "," + std::to_string(a.errors) + "," + Number(a.mean_k) +
         "," + Number(a.mean_exploitability) + "," + Number(a.stderr_exploitability) + ",";
    if (a.mean_epsilon_bound) s += Number(*a.mean_epsilon_bound);
    s += "," + Number(a.stderr_epsilon_bound) + "," + Number(a.mean_runtime_ms) + "\n";
  }
  return s;
}

}  // namespace portfolio::bench
