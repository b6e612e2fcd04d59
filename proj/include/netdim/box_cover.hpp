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
#include <optional>
#include <span>
#include <vector>

#include "netdim/graph.hpp"

namespace netdim {

inline constexpr int kDefaultTrials = 10;

// Partition of the nodes into boxes of box size `box_size`: any two nodes in
// a box are fewer than `box_size` hops apart.
struct BoxCovering {
  int box_size = 1;
  std::vector<std::vector<NodeId>> boxes;  // members ascending
  std::vector<int> box_of;                 // node -> index into boxes
  int trials_used = 0;
  std::uint64_t seed = 0;

  std::size_t box_count() const { return boxes.size(); }
  std::vector<std::size_t> box_sizes() const;
};

// One covering per box size in [box_sizes.front(), box_sizes.back()].
struct CoveringProfile {
  std::vector<BoxCovering> coverings;  // box_size strictly increasing
  std::size_t node_count = 0;
  int max_box_size = 1;                // diameter + 1
  std::vector<int> repaired;           // box sizes that reused the previous covering

  std::vector<std::size_t> box_counts() const;
};

// Complement-style graph whose proper colorings are exactly the valid box
// coverings: i ~ j iff dist(i, j) >= box_size.
Graph auxiliary_graph(const DistanceMatrix& dist, int box_size);

// Greedy coloring in the given visiting order. Each node takes the smallest
// color not used by an already-colored neighbor. Throws ArgumentError when
// `order` is not a permutation of the node ids.
std::vector<int> greedy_coloring(const Graph& graph,
                                 std::span<const NodeId> order);

// Best of `trials` greedy colorings of the auxiliary graph under random node
// orders. Trial t shuffles with trial_seed(seed, box_size, t); the fewest
// boxes wins, earliest trial on ties.
BoxCovering box_cover(const DistanceMatrix& dist, int box_size, int trials,
                      std::uint64_t seed);

// Turns a coloring into a covering: color c becomes box c.
BoxCovering covering_from_colors(std::span<const int> colors, int box_size);

// Minimum covering by exhaustive search. Refuses more than 12 nodes.
BoxCovering brute_force_cover(const DistanceMatrix& dist, int box_size);

// True when the boxes partition all nodes, box_of agrees with them, and every
// intra-box distance is below box_size.
bool is_valid_covering(const BoxCovering& covering, const DistanceMatrix& dist);

// Coverings for every box size in [min_box, max_box]; max_box defaults to
// diameter + 1. Where greedy does worse than at the previous size, the
// previous covering is carried forward (it stays valid at larger sizes) and
// the size is listed in `repaired`. Box sizes are computed concurrently.
CoveringProfile covering_profile(const DistanceMatrix& dist, int min_box,
                                 std::optional<int> max_box, int trials,
                                 std::uint64_t seed);
CoveringProfile covering_profile(const Graph& graph, int min_box,
                                 std::optional<int> max_box, int trials,
                                 std::uint64_t seed);

}  // namespace netdim
