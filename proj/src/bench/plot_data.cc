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

#include "portfolio/plot_data.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "portfolio/errors.h"

namespace portfolio::bench {
namespace {

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> ToNumber(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::string Fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace

int Table::Column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw SchemaError("missing column '" + name + "'");
  return static_cast<int>(it - columns.begin());
}

Table ParseCsv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = Split(line);
    if (header) {
      t.columns = std::move(cells);
      header = false;
      continue;
    }
    if (cells.size() != t.columns.size()) {
      throw SchemaError("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(t.columns.size()) + " cells, got " +
                        std::to_string(cells.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCsv(buffer.str());
}

std::vector<Series> BuildSeries(const Table& table, const PlotSpec& spec) {
  const int xc = table.Column(spec.x_column);
  const int yc = table.Column(spec.y_column);
  std::vector<int> sc;
  for (const std::string& c : spec.series_columns) sc.push_back(table.Column(c));

  std::map<std::string, std::map<double, std::vector<double>>> groups;
  for (const auto& row : table.rows) {
    const auto x = ToNumber(row[xc]);
    const auto y = ToNumber(row[yc]);
    if (!x || !y) continue;
    std::string label;
    for (std::size_t t = 0; t < sc.size(); ++t) {
      if (t) label += "/";
      label += row[sc[t]];
    }
    groups[label][*x].push_back(*y);
  }
  std::vector<Series> out;
  for (const auto& [label, points] : groups) {
    Series s;
    s.label = label;
    for (const auto& [x, ys] : points) {
      double sum = 0.0;
      for (double y : ys) sum += y;
      const double mu = sum / ys.size();
      double ss = 0.0;
      for (double y : ys) ss += (y - mu) * (y - mu);
      const double se =
          ys.size() > 1 ? std::sqrt(ss / (ys.size() - 1)) / std::sqrt(double(ys.size())) : 0.0;
      s.x.push_back(x);
      s.mean.push_back(mu);
      s.stderr_.push_back(se);
      s.count.push_back(static_cast<int>(ys.size()));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string RenderSvg(const std::vector<Series>& series, const PlotSpec& spec) {
  const double W = 720, H = 440, left = 70, right = 180, top = 40, bottom = 50;
  const double pw = W - left - right, ph = H - top - bottom;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool any = false;
  for (const Series& s : series) {
    for (std::size_t t = 0; t < s.x.size(); ++t) {
      const double lo = s.mean[t] - s.stderr_[t], hi = s.mean[t] + s.stderr_[t];
      if (!any) {
        x0 = x1 = s.x[t];
        y0 = lo;
        y1 = hi;
        any = true;
      }
      x0 = std::min(x0, s.x[t]);
      x1 = std::max(x1, s.x[t]);
      y0 = std::min(y0, lo);
      y1 = std::max(y1, hi);
    }
  }
  if (x1 - x0 < 1e-12) { x0 -= 0.5; x1 += 0.5; }
  if (y1 - y0 < 1e-12) { y0 -= 0.5; y1 += 0.5; }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto X = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto Y = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << left + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
    << Escape(spec.title.empty() ? spec.name : spec.title) << "</text>\n";
  o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double xv = x0 + (x1 - x0) * t / 5, yv = y0 + (y1 - y0) * t / 5;
    o << "<text x=\"" << X(xv) << "\" y=\"" << top + ph + 16 << "\" text-anchor=\"middle\">"
      << Fmt(xv) << "</text>\n";
    o << "<text x=\"" << left - 6 << "\" y=\"" << Y(yv) + 4 << "\" text-anchor=\"end\">"
      << Fmt(yv) << "</text>\n";
    o << "<line x1=\"" << left << "\" x2=\"" << left + pw << "\" y1=\"" << Y(yv) << "\" y2=\""
      << Y(yv) << "\" stroke=\"#ddd\"/>\n";
  }
  o << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
    << Escape(spec.x_column) << "</text>\n";
  o << "<text transform=\"translate(16," << top + ph / 2
    << ") rotate(-90)\" text-anchor=\"middle\">" << Escape(spec.y_column) << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& sr = series[s];
    const char* color = kPalette[s % std::size(kPalette)];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t t = 0; t < sr.x.size(); ++t) {
      o << (t ? " " : "") << X(sr.x[t]) << "," << Y(sr.mean[t]);
    }
    o << "\"/>\n";
    for (std::size_t t = 0; t < sr.x.size(); ++t) {
      const double cx = X(sr.x[t]);
      o << "<line x1=\"" << cx << "\" x2=\"" << cx << "\" y1=\""
        << Y(sr.mean[t] - sr.stderr_[t]) << "\" y2=\"" << Y(sr.mean[t] + sr.stderr_[t])
        << "\" stroke=\"" << color << "\"/>\n";
      o << "<circle cx=\"" << cx << "\" cy=\"" << Y(sr.mean[t]) << "\" r=\"3\" fill=\"" << color
        << "\"/>\n";
    }
    const double ly = top + 14 + 18 * s;
    o << "<line x1=\"" << left + pw + 12 << "\" x2=\"" << left + pw + 32 << "\" y1=\"" << ly - 4
      << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << left + pw + 38 << "\" y=\"" << ly << "\">" << Escape(sr.label)
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

PlotOutput EmitPlotData(const Table& table, const PlotSpec& spec) {
  PlotOutput out;
  const std::vector<Series> series = BuildSeries(table, spec);
  std::filesystem::create_directories(spec.output_dir);
  const std::string stem = (std::filesystem::path(spec.output_dir) / spec.name).string();

  std::string csv = "series,x,mean,stderr,count\n";
  for (const Series& s : series) {
    for (std::size_t t = 0; t < s.x.size(); ++t) {
      csv += s.label + "," + Fmt(s.x[t]) + "," + Fmt(s.mean[t]) + "," + Fmt(s.stderr_[t]) +
             "," + std::to_string(s.count[t]) + "\n";
    }
  }
  WriteFile(stem + ".csv", csv);
  WriteFile(stem + ".svg", RenderSvg(series, spec));
  out.files = {stem + ".csv", stem + ".svg"};

  if (series.empty()) out.warnings.push_back(spec.name + ": no numeric data to plot");
  std::size_t used = 0;
  for (const Series& s : series) {
    for (int c : s.count) used += c;
  }
  if (used < table.rows.size()) {
    out.warnings.push_back(spec.name + ": skipped " + std::to_string(table.rows.size() - used) +
                           " rows without numeric " + spec.x_column + "/" + spec.y_column);
  }
  return out;
}

std::vector<PlotSpec> EpsilonSweepPlots(const std::string& dir) {
  return {
      {"epsilon_vs_exploitability", "epsilon_bound", "exploitability", {"method", "selection"},
       "Exploitability against target epsilon", dir},
      {"epsilon_vs_size", "epsilon_bound", "k", {"method", "selection"},
       "Portfolio size against target epsilon", dir},
  };
}

std::vector<PlotSpec> SizeSweepPlots(const std::string& dir) {
  return {
      {"k_vs_exploitability", "k", "exploitability", {"method", "selection"},
       "Exploitability against portfolio size", dir},
      {"k_vs_epsilon_bound", "k", "epsilon_bound", {"method", "selection"},
       "Epsilon bound against portfolio size", dir},
  };
}

}  // namespace portfolio::bench
