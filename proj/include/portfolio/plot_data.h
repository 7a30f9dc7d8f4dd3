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

#ifndef PORTFOLIO_PLOT_DATA_H_
#define PORTFOLIO_PLOT_DATA_H_

#include <string>
#include <vector>

namespace portfolio::bench {

// A CSV table held as strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Index of `name`; throws SchemaError when absent.
  int Column(const std::string& name) const;
};

Table ParseCsv(const std::string& text);
Table ReadCsv(const std::string& path);

struct PlotSpec {
  // Output stem; files are <dir>/<name>.csv and <dir>/<name>.svg.
  std::string name;
  std::string x_column;
  std::string y_column;
  // Each distinct value of these columns is one series.
  std::vector<std::string> series_columns = {"method"};
  std::string title;
  std::string output_dir = ".";
};

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> mean;
  std::vector<double> stderr_;
  std::vector<int> count;
};

// Groups rows by series and x, averaging y. Rows whose x or y is not a
// number (error rows, empty bounds) are skipped.
std::vector<Series> BuildSeries(const Table& table, const PlotSpec& spec);

struct PlotOutput {
  std::vector<std::string> files;
  std::vector<std::string> warnings;
};

// Writes the series data file and a static SVG rendering. Throws SchemaError
// when a needed column is missing.
PlotOutput EmitPlotData(const Table& table, const PlotSpec& spec);

std::string RenderSvg(const std::vector<Series>& series, const PlotSpec& spec);

// exploitability-vs-eps and size-vs-eps for eps sweeps.
std::vector<PlotSpec> EpsilonSweepPlots(const std::string& dir);
// exploitability-vs-k and eps-bound-vs-k for size sweeps.
std::vector<PlotSpec> SizeSweepPlots(const std::string& dir);

}  // namespace portfolio::bench

#endif  // PORTFOLIO_PLOT_DATA_H_
