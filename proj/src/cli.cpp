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

#include "netdim/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netdim/box_cover.hpp"
#include "netdim/errors.hpp"
#include "netdim/netgen.hpp"
#include "netdim/report.hpp"

namespace netdim {
namespace {

struct CommonOptions {
  std::string file;
  std::string format = "auto";
  int trials = kDefaultTrials;
  std::uint64_t seed = 42;
  bool strict = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("file", opts.file, "Network file")->required();
  cmd->add_option("--format", opts.format, "auto, edgelist or pajek")
      ->check(CLI::IsMember({"auto", "edgelist", "pajek"}));
  cmd->add_option("--trials", opts.trials, "Greedy orderings per box size")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "Seed of the random node orders");
  cmd->add_flag("--strict", opts.strict,
                "Fail on disconnected input instead of using the largest "
                "component");
  cmd->add_option("--out", opts.out_path, "Write results to this file");
}

// Writes to --out when given, else to `out`. Returns false if the file
// cannot be opened.
bool emit(const std::string& text, const std::string& path, std::ostream& out,
          std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "netdim: cannot write " << path << "\n";
    return false;
  }
  file << text;
  return static_cast<bool>(file);
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-') {
    throw ArgumentError(std::string("invalid ") + what + " '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

GeneratorSpec generator_spec(const std::string& model,
                             const std::vector<std::string>& params,
                             std::uint64_t seed) {
  GeneratorSpec spec;
  spec.model = parse_graph_model(model);
  spec.seed = seed;
  auto expect = [&](std::size_t count, const char* usage) {
    if (params.size() != count) {
      throw ArgumentError(model + " expects parameters: " + usage);
    }
  };
  switch (spec.model) {
    case GraphModel::kGrid:
      if (params.size() == 1) {
        const auto x = params[0].find_first_of("xX");
        if (x == std::string::npos) {
          throw ArgumentError("grid expects ROWSxCOLS or ROWS COLS");
        }
        spec.rows = parse_count(params[0].substr(0, x), "rows");
        spec.cols = parse_count(params[0].substr(x + 1), "cols");
      } else {
        expect(2, "ROWS COLS");
        spec.rows = parse_count(params[0], "rows");
        spec.cols = parse_count(params[1], "cols");
      }
      break;
    case GraphModel::kErRandom: {
      expect(2, "N P");
      spec.n = parse_count(params[0], "node count");
      std::size_t pos = 0;
      try {
        spec.probability = std::stod(params[1], &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != params[1].size()) {
        throw ArgumentError("invalid probability '" + params[1] + "'");
      }
      break;
    }
    default:
      expect(1, "N");
      spec.n = parse_count(params[0], "node count");
  }
  return spec;
}

std::string edge_list_text(const Graph& g, const std::string& header) {
  std::ostringstream text;
  text << "# " << header << '\n';
  for (const auto& [u, v] : g.edges()) {
    text << g.label(u) << ' ' << g.label(v) << '\n';
  }
  return text.str();
}

void report_diagnostics(const AnalysisReport& report, std::ostream& err) {
  for (const auto& d : report.diagnostics) err << "netdim: warning: " << d << '\n';
  for (const auto& e : report.estimates) {
    if (!e.error.empty()) err << "netdim: " << e.label << ": " << e.error << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fractal, information and Tsallis information dimensions of "
               "complex networks",
               "netdim"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string output = "json";
  std::string mode = "slope";
  double q = 1.0;
  std::vector<double> q_list = kDefaultQList;
  int l_min = 1;
  std::optional<int> l_max;
  int box_size = 0;
  bool dump_boxes = false;
  std::string model;
  std::vector<std::string> params;
  std::uint64_t gen_seed = 42;
  std::string gen_out;

  auto add_analysis = [&](CLI::App* cmd) {
    add_common(cmd, common);
    cmd->add_option("--mode", mode, "slope or pointwise")
        ->check(CLI::IsMember({"slope", "pointwise"}));
    cmd->add_option("--lmin", l_min, "Smallest box size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--lmax", l_max, "Largest box size (default diameter+1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("-o", output, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Full pipeline for one q");
  add_analysis(analyze_cmd);
  analyze_cmd->add_option("--q", q, "Entropic index q");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Tsallis dimensions over a list of q values");
  add_analysis(sweep_cmd);
  sweep_cmd->add_option("--q-list", q_list, "Comma-separated q values")
      ->delimiter(',');

  CLI::App* cover_cmd = app.add_subcommand("cover", "Box covering at one size");
  add_common(cover_cmd, common);
  cover_cmd->add_option("l_B", box_size, "Box size")->required();
  cover_cmd->add_flag("--dump-boxes", dump_boxes, "Print box membership");

  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  generate_cmd
      ->add_option("model", model,
                   "path, cycle, grid, star, complete or er_random")
      ->required();
  generate_cmd->add_option("params", params, "N | ROWS COLS | ROWSxCOLS | N P")
      ->required();
  generate_cmd->add_option("--seed", gen_seed, "Seed for er_random");
  generate_cmd->add_option("--out", gen_out, "Write the edge list here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate_cmd->parsed()) {
      const GeneratorSpec spec = generator_spec(model, params, gen_seed);
      const Graph g = generate(spec);
      std::ostringstream header;
      header << "netdim generate " << model;
      for (const auto& p : params) header << ' ' << p;
      if (spec.model == GraphModel::kErRandom) header << " --seed " << gen_seed;
      if (!emit(edge_list_text(g, header.str()), gen_out, out, err)) {
        return kExitInput;
      }
      (gen_out.empty() ? err : out)
          << "nodes: " << g.node_count() << ", edges: " << g.edge_count()
          << '\n';
      return kExitOk;
    }

    std::string resolved;
    Graph graph;
    try {
      graph = load_graph(common.file, common.format, &resolved);
    } catch (const ParseError& e) {
      err << "netdim: " << e.what() << '\n';
      return kExitInput;
    }

    if (cover_cmd->parsed()) {
      if (box_size < 1) throw ArgumentError("l_B must be >= 1");
      if (!is_connected(graph)) {
        if (common.strict) {
          throw DisconnectedError("graph is disconnected (--strict)");
        }
        graph = largest_connected_component(graph);
        err << "netdim: warning: graph is disconnected; covering the largest "
               "component ("
            << graph.node_count() << " nodes)\n";
      }
      const BoxCovering covering = box_cover(
          all_pairs_distances(graph), box_size, common.trials, common.seed);
      std::ostringstream text;
      text << "N_B = " << covering.box_count() << '\n';
      if (dump_boxes) {
        for (std::size_t b = 0; b < covering.boxes.size(); ++b) {
          text << "box " << b << ':';
          for (NodeId v : covering.boxes[b]) text << ' ' << graph.label(v);
          text << '\n';
        }
      }
      return emit(text.str(), common.out_path, out, err) ? kExitOk : kExitInput;
    }

    AnalysisSettings settings;
    settings.q_list = analyze_cmd->parsed() ? std::vector<double>{q} : q_list;
    if (settings.q_list.empty()) throw ArgumentError("--q-list is empty");
    for (double v : settings.q_list) {
      if (!std::isfinite(v)) throw ArgumentError("q values must be finite");
    }
    settings.trials = common.trials;
    settings.seed = common.seed;
    settings.mode = parse_fit_mode(mode);
    settings.l_min = l_min;
    settings.l_max = l_max;
    settings.strict = common.strict;

    InputInfo input;
    input.file = common.file;
    input.format = resolved;
    const AnalysisReport report = analyze(graph, input, settings);
    report_diagnostics(report, err);
    const std::string text =
        output == "csv" ? to_csv(report) : to_json(report);
    if (!emit(text, common.out_path, out, err)) return kExitInput;
    return report.has_errors() ? kExitAnalysis : kExitOk;
  } catch (const ArgumentError& e) {
    err << "netdim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "netdim: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "netdim: " << e.what() << '\n';
    return kExitAnalysis;
  }
}

}  // namespace netdim
