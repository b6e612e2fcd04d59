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
#include <string_view>

#include "netdim/graph.hpp"

namespace netdim {

enum class GraphModel { kPath, kCycle, kGrid, kStar, kComplete, kErRandom };

std::string_view to_string(GraphModel model);
// Accepts path, cycle, grid, star, complete, er_random.
GraphModel parse_graph_model(std::string_view text);

// `n` is the node count for every model except grid, which uses rows x cols.
// `probability` and `seed` apply to er_random only.
struct GeneratorSpec {
  GraphModel model = GraphModel::kPath;
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double probability = 0.0;
  std::uint64_t seed = 42;
};

// Builds the graph with labels v0..v(n-1). Grid node (r, c) is r * cols + c;
// the star centre is v0.
//
// er_random is G(n, p): each pair i < j, in row-major order, is kept when
// uniform_unit(engine) < p, with a single std::mt19937_64 seeded by `seed`.
// Disconnected draws are discarded and the same engine keeps drawing, up to
// 100 attempts, after which GenerationError is thrown.
//
// Throws ArgumentError for zero sizes, a cycle shorter than 3, or p outside
// (0, 1].
Graph generate(const GeneratorSpec& spec);

}  // namespace netdim
