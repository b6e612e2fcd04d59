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

#include "netdim/netgen.hpp"

#include <string>
#include <utility>
#include <vector>

#include "netdim/errors.hpp"
#include "netdim/random.hpp"

namespace netdim {

std::string_view to_string(GraphModel model) {
  switch (model) {
    case GraphModel::kPath: return "path";
    case GraphModel::kCycle: return "cycle";
    case GraphModel::kGrid: return "grid";
    case GraphModel::kStar: return "star";
    case GraphModel::kComplete: return "complete";
    case GraphModel::kErRandom: return "er_random";
  }
  return "unknown";
}

GraphModel parse_graph_model(std::string_view text) {
  for (auto m : {GraphModel::kPath, GraphModel::kCycle, GraphModel::kGrid,
                 GraphModel::kStar, GraphModel::kComplete,
                 GraphModel::kErRandom}) {
    if (to_string(m) == text) return m;
  }
  throw ArgumentError("unknown model '" + std::string(text) + "'");
}

namespace {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

Graph labelled(std::size_t n, const EdgeList& edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph::from_edges(n, edges, std::move(labels));
}

NodeId id(std::size_t i) { return static_cast<NodeId>(i); }

Graph er_random(std::size_t n, double p, std::uint64_t seed) {
  constexpr int kMaxAttempts = 100;
  Engine engine(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    EdgeList edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uniform_unit(engine) < p) edges.emplace_back(id(i), id(j));
      }
    }
    Graph g = labelled(n, edges);
    if (is_connected(g)) return g;
  }
  throw GenerationError("er_random(n=" + std::to_string(n) +
                        ", p=" + std::to_string(p) +
                        ") stayed disconnected after 100 attempts");
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  if (spec.model == GraphModel::kGrid) {
    if (spec.rows == 0 || spec.cols == 0) {
      throw ArgumentError("grid needs positive rows and cols");
    }
  } else if (spec.n == 0) {
    throw ArgumentError(std::string(to_string(spec.model)) +
                        " needs a positive node count");
  }

  const std::size_t n = spec.n;
  EdgeList edges;
  switch (spec.model) {
    case GraphModel::kPath:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(id(i), id(i + 1));
      return labelled(n, edges);
    case GraphModel::kCycle:
      if (n < 3) throw ArgumentError("cycle needs at least 3 nodes");
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(id(i), id((i + 1) % n));
      return labelled(n, edges);
    case GraphModel::kGrid: {
      const std::size_t rows = spec.rows;
      const std::size_t cols = spec.cols;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const std::size_t v = r * cols + c;
          if (c + 1 < cols) edges.emplace_back(id(v), id(v + 1));
          if (r + 1 < rows) edges.emplace_back(id(v), id(v + cols));
        }
      }
      return labelled(rows * cols, edges);
    }
    case GraphModel::kStar:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(id(0), id(i));
      return labelled(n, edges);
    case GraphModel::kComplete:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(id(i), id(j));
      return labelled(n, edges);
    case GraphModel::kErRandom:
      if (!(spec.probability > 0.0 && spec.probability <= 1.0)) {
        throw ArgumentError("er_random probability must lie in (0, 1]");
      }
      return er_random(n, spec.probability, spec.seed);
  }
  throw ArgumentError("unknown model");
}

}  // namespace netdim
