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

#include "netdim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netdim/errors.hpp"
#include "netdim/q_entropy.hpp"

namespace netdim {

bool AnalysisReport::has_errors() const {
  for (const auto& e : estimates) {
    if (!e.error.empty()) return true;
  }
  return false;
}

namespace {

std::string detect_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos || line[pos] == '%') continue;
    return line[pos] == '*' ? "pajek" : "edgelist";
  }
  return "edgelist";
}

}  // namespace

Graph load_graph(const std::string& path, const std::string& format,
                 std::string* resolved_format) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();

  std::string fmt = format;
  if (fmt == "auto") fmt = detect_format(text);
  if (resolved_format) *resolved_format = fmt;
  try {
    if (fmt == "edgelist") return parse_edge_list(text);
    if (fmt == "pajek") return parse_pajek(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
  throw ArgumentError("unknown format '" + format +
                      "' (expected auto, edgelist or pajek)");
}

AnalysisReport analyze(const Graph& graph, InputInfo input,
                       AnalysisSettings settings) {
  AnalysisReport report;
  input.original_nodes = graph.node_count();
  input.original_edges = graph.edge_count();

  const Graph* work = &graph;
  Graph component;
  if (graph.node_count() == 0) throw ArgumentError("graph has no nodes");
  if (!is_connected(graph)) {
    if (settings.strict) {
      throw DisconnectedError(
          "graph is disconnected and --strict forbids reducing it to the "
          "largest component");
    }
    component = largest_connected_component(graph);
    work = &component;
    input.component = "largest component: " +
                      std::to_string(component.node_count()) + " of " +
                      std::to_string(graph.node_count()) + " nodes";
    report.diagnostics.push_back("graph is disconnected; analyzing the " +
                                 input.component);
  } else {
    input.component = "connected";
  }
  input.nodes = work->node_count();
  input.edges = work->edge_count();

  const DistanceMatrix dist = all_pairs_distances(*work);
  input.diameter = dist.diameter();
  if (!settings.l_max) settings.l_max = dist.diameter() + 1;

  const CoveringProfile profile = covering_profile(
      dist, settings.l_min, settings.l_max, settings.trials, settings.seed);
  for (int size : profile.repaired) {
    report.diagnostics.push_back(
        "greedy covering at l_B=" + std::to_string(size) +
        " used more boxes than at l_B=" + std::to_string(size - 1) +
        "; reused the smaller covering");
  }

  {
    ReportEstimate est{"box_counting", "box-counting dimension", {}, {}};
    try {
      est.estimate = box_counting_dimension(profile);
    } catch (const Error& e) {
      est.error = e.what();
    }
    report.estimates.push_back(std::move(est));
  }
  for (double q : settings.q_list) {
    report.profiles.push_back({q, profile_points(profile, q)});
    const bool shannon = std::abs(q - 1.0) < kShannonThreshold;
    ReportEstimate est{shannon ? "information" : "tsallis",
                       shannon ? "information dimension"
                               : "Tsallis information dimension",
                       {},
                       {}};
    try {
      est.estimate = tsallis_dimension(profile, q, settings.mode);
    } catch (const Error& e) {
      est.error = e.what();
    }
    report.estimates.push_back(std::move(est));
  }

  report.input = std::move(input);
  report.settings = std::move(settings);
  return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string to_json(const AnalysisReport& report) {
  ordered_json doc;
  const auto& in = report.input;
  doc["input"] = {{"file", in.file},
                  {"format", in.format},
                  {"nodes", in.nodes},
                  {"edges", in.edges},
                  {"diameter", in.diameter},
                  {"original_nodes", in.original_nodes},
                  {"original_edges", in.original_edges},
                  {"component", in.component}};

  const auto& s = report.settings;
  doc["settings"] = {{"q_list", s.q_list},
                     {"trials", s.trials},
                     {"seed", s.seed},
                     {"mode", std::string(to_string(s.mode))},
                     {"lmin", s.l_min},
                     {"lmax", s.l_max ? ordered_json(*s.l_max) : ordered_json(nullptr)},
                     {"strict", s.strict}};

  ordered_json profile = ordered_json::array();
  for (const auto& qp : report.profiles) {
    for (const auto& row : qp.rows) {
      profile.push_back({{"q", qp.q},
                         {"l", row.box_size},
                         {"ln_l", row.ln_l},
                         {"n_boxes", row.n_boxes},
                         {"S_q", row.entropy},
                         {"pointwise_ratio", optional_number(row.pointwise_ratio)}});
    }
  }
  doc["profile"] = std::move(profile);

  ordered_json estimates = ordered_json::array();
  for (const auto& e : report.estimates) {
    ordered_json item;
    const auto& est = e.estimate;
    item["q"] = est ? optional_number(est->q) : ordered_json(nullptr);
    item["kind"] = e.kind;
    item["label"] = e.label;
    if (est) {
      item["dimension"] = est->dimension;
      item["slope"] = optional_number(est->slope);
      item["intercept"] = optional_number(est->intercept);
      item["r2"] = optional_number(est->r_squared);
      item["mode"] = std::string(to_string(est->mode));
      item["fit_lmin"] = est->fit_range.min;
      item["fit_lmax"] = est->fit_range.max;
      if (!est->pointwise_values.empty()) {
        ordered_json pts = ordered_json::array();
        for (const auto& [l, ratio] : est->pointwise_values) {
          pts.push_back({{"l", l}, {"ratio", ratio}});
        }
        item["pointwise"] = std::move(pts);
      }
    } else {
      item["dimension"] = nullptr;
      item["error"] = e.error;
    }
    estimates.push_back(std::move(item));
  }
  doc["estimates"] = std::move(estimates);
  return doc.dump(2) + "\n";
}

namespace {

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string g6(const std::optional<double>& v) { return v ? g6(*v) : ""; }

}  // namespace

std::string to_csv(const AnalysisReport& report) {
  std::ostringstream out;
  const bool many = report.profiles.size() > 1;
  for (std::size_t i = 0; i < report.profiles.size(); ++i) {
    const auto& qp = report.profiles[i];
    if (i > 0) out << '\n';
    if (many) out << "# q=" << g6(qp.q) << '\n';
    out << "l,ln_l,n_boxes,S_q,pointwise_ratio\n";
    for (const auto& row : qp.rows) {
      out << row.box_size << ',' << g6(row.ln_l) << ',' << row.n_boxes << ','
          << g6(row.entropy) << ',' << g6(row.pointwise_ratio) << '\n';
    }
  }
  out << "\n# estimates\n"
      << "q,kind,mode,dimension,slope,intercept,r2\n";
  for (const auto& e : report.estimates) {
    if (!e.estimate) {
      out << ',' << e.kind << ",,,,,\n";
      continue;
    }
    const auto& est = *e.estimate;
    out << g6(est.q) << ',' << e.kind << ',' << to_string(est.mode) << ','
        << g6(est.dimension) << ',' << g6(est.slope) << ','
        << g6(est.intercept) << ',' << g6(est.r_squared) << '\n';
  }
  return out.str();
}

}  // namespace netdim
