// Copyright 2026 The netdim Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netdim/box_cover.hpp"
#include "netdim/dimension_fit.hpp"
#include "netdim/graph.hpp"

namespace netdim {

// Default q grid of the sweep command.
inline const std::vector<double> kDefaultQList = {0.1, 0.5, 1.0,   1.5,
                                                  2.0, 10.0, 100.0, 1000.0};

struct InputInfo {
  std::string file;
  std::string format;  // "edgelist" or "pajek"
  std::size_t original_nodes = 0;
  std::size_t original_edges = 0;
  std::size_t nodes = 0;  // analyzed component
  std::size_t edges = 0;
  int diameter = 0;
  std::string component;  // "connected" or a note on the reduction
};

struct AnalysisSettings {
  std::vector<double> q_list = {1.0};
  int trials = kDefaultTrials;
  std::uint64_t seed = 42;
  FitMode mode = FitMode::kSlope;
  int l_min = 1;
  std::optional<int> l_max;  // resolved to diameter + 1 in the report
  bool strict = false;
};

struct ReportEstimate {
  std::string kind;   // "box_counting", "information" or "tsallis"
  std::string label;  // human-readable name of the quantity
  std::optional<DimensionEstimate> estimate;
  std::string error;  // set when the fit failed
};

struct QProfile {
  double q = 1.0;
  std::vector<ProfilePoint> rows;
};

struct AnalysisReport {
  InputInfo input;
  AnalysisSettings settings;
  std::vector<QProfile> profiles;
  std::vector<ReportEstimate> estimates;
  // Component reductions and monotonicity repairs; never serialized.
  std::vector<std::string> diagnostics;

  bool has_errors() const;
};

// Reads `path`, choosing the parser from `format` ("auto", "edgelist",
// "pajek"). Auto picks Pajek when the first line that is neither blank nor a
// '%' comment starts with '*'. Throws ParseError (also for unreadable files).
Graph load_graph(const std::string& path, const std::string& format,
                 std::string* resolved_format = nullptr);

// Runs component reduction, distances, the covering profile and every fit.
// A disconnected graph is reduced to its largest component with a
// diagnostic, or rejected with DisconnectedError when settings.strict is set.
// Fit failures are recorded per estimate instead of thrown.
AnalysisReport analyze(const Graph& graph, InputInfo input,
                       AnalysisSettings settings);

// JSON numbers use the shortest representation that round-trips the double.
std::string to_json(const AnalysisReport& report);
// CSV numbers use 6 significant digits.
std::string to_csv(const AnalysisReport& report);

}  // namespace netdim
