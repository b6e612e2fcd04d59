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

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netdim {

using NodeId = std::int32_t;
using Hops = std::int32_t;

// Distance to a node in another component. Any real distance is at most
// node_count - 1, so this never collides with a diameter.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

// Undirected, unweighted simple graph over dense ids 0..node_count()-1.
// Neighbor lists are sorted and free of self-loops and duplicates; labels
// carry the identifiers from the input file and are used only for output.
class Graph {
 public:
  Graph() = default;

  // Builds a normalized graph: edges are symmetrized, duplicates collapsed,
  // self-loops dropped. `labels` may be empty, in which case ids are used.
  // Throws ArgumentError when an endpoint is out of range or the label count
  // does not match.
  static Graph from_edges(std::size_t node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::vector<NodeId>>& adjacency() const {
    return adjacency_;
  }

  const std::string& label(NodeId v) const {
    return labels_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_edge(NodeId u, NodeId v) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// All-pairs hop counts, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Hops> dist);

  std::size_t size() const { return n_; }
  Hops at(NodeId i, NodeId j) const {
    return dist_[static_cast<std::size_t>(i) * n_ +
                 static_cast<std::size_t>(j)];
  }
  std::span<const Hops> row(NodeId i) const {
    return std::span<const Hops>(dist_).subspan(
        static_cast<std::size_t>(i) * n_, n_);
  }
  // Largest finite entry; 0 for graphs with fewer than two nodes.
  Hops diameter() const { return diameter_; }

 private:
  std::size_t n_ = 0;
  std::vector<Hops> dist_;
  Hops diameter_ = 0;
};

// Whitespace-separated "u v" pairs, one per line; '#' starts a comment line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Pajek subset: "*Vertices N", optional vertex lines with quoted labels,
// then "*Edges" / "*Arcs" pair lines. Arcs are symmetrized, columns after
// the pair (weights) are ignored, '%' lines are comments.
Graph parse_pajek(std::istream& in);
Graph parse_pajek(const std::string& text);

// Hop counts from `source`; unreachable nodes get kUnreachable.
std::vector<Hops> bfs_distances(const Graph& graph, NodeId source);

// Repeated BFS, one row per node, rows computed concurrently. Throws
// DisconnectedError when some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& graph);

bool is_connected(const Graph& graph);

// Induced subgraph on the largest component with ids renumbered in their
// original order. On ties the component holding the smallest id wins.
Graph largest_connected_component(const Graph& graph);

}  // namespace netdim
