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

// Test-only generators and oracles. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "netdim/graph.hpp"

namespace netdim::testing {

inline std::vector<std::pair<NodeId, NodeId>> random_edges(std::size_t n,
                                                           double p,
                                                           std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(NodeId(i), NodeId(j));
  return edges;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  return Graph::from_edges(n, random_edges(n, p, rng));
}

// Random spanning tree plus Bernoulli(p) extra edges, so always connected.
inline Graph random_connected_graph(std::size_t n, double p,
                                    std::mt19937_64& rng) {
  auto edges = random_edges(n, p, rng);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.emplace_back(NodeId(parent(rng)), NodeId(v));
  }
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(NodeId(i), NodeId(i + 1));
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(NodeId(i), NodeId(j));
  return Graph::from_edges(n, edges);
}

// Floyd-Warshall on the raw edge set; -1 marks unreachable pairs.
inline std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.node_count();
  const long inf = static_cast<long>(n) + 1;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[std::size_t(u)][std::size_t(v)] = d[std::size_t(v)][std::size_t(u)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Size of a minimum box covering by plain enumeration of restricted growth
// strings (every set partition), no pruning. Use for n <= 9.
inline std::size_t min_boxes_by_enumeration(
    const std::vector<std::vector<long>>& d, long box_size) {
  const std::size_t n = d.size();
  if (n == 0) return 0;
  std::vector<int> a(n, 0);
  std::size_t best = n;
  while (true) {
    int blocks = 0;
    for (int x : a) blocks = std::max(blocks, x + 1);
    if (static_cast<std::size_t>(blocks) < best) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          if (a[i] == a[j] && d[i][j] >= box_size) ok = false;
      if (ok) best = static_cast<std::size_t>(blocks);
    }
    // Next restricted growth string: a[i] <= 1 + max(a[0..i-1]).
    std::size_t i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (std::size_t k = 0; k < i; ++k) prefix_max = std::max(prefix_max, a[k]);
      if (a[i] <= prefix_max) {
        ++a[i];
        for (std::size_t k = i + 1; k < n; ++k) a[k] = 0;
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return best;
}

}  // namespace netdim::testing
