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

#include "netdim/box_cover.hpp"

#include <algorithm>
#include <string>

#include "netdim/errors.hpp"
#include "netdim/parallel.hpp"
#include "netdim/random.hpp"

namespace netdim {

std::vector<std::size_t> BoxCovering::box_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(boxes.size());
  for (const auto& box : boxes) sizes.push_back(box.size());
  return sizes;
}

std::vector<std::size_t> CoveringProfile::box_counts() const {
  std::vector<std::size_t> counts;
  counts.reserve(coverings.size());
  for (const auto& c : coverings) counts.push_back(c.box_count());
  return counts;
}

namespace {

void check_box_size(int box_size) {
  if (box_size < 1) {
    throw ArgumentError("box size must be >= 1, got " +
                        std::to_string(box_size));
  }
}

}  // namespace

Graph auxiliary_graph(const DistanceMatrix& dist, int box_size) {
  check_box_size(box_size);
  const auto n = static_cast<NodeId>(dist.size());
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i) {
    const auto row = dist.row(i);
    for (NodeId j = i + 1; j < n; ++j) {
      if (row[static_cast<std::size_t>(j)] >= box_size) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(dist.size(), edges);
}

std::vector<int> greedy_coloring(const Graph& graph,
                                 std::span<const NodeId> order) {
  const std::size_t n = graph.node_count();
  if (order.size() != n) {
    throw ArgumentError("order has " + std::to_string(order.size()) +
                        " entries for " + std::to_string(n) + " nodes");
  }
  std::vector<char> seen(n, 0);
  for (NodeId v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n ||
        seen[static_cast<std::size_t>(v)]) {
      throw ArgumentError("order is not a permutation of the node ids");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<int> color(n, -1);
  // taken[c] == stamp marks color c as used by a neighbor of the current node.
  std::vector<std::size_t> taken(n + 1, 0);
  std::size_t stamp = 0;
  for (NodeId v : order) {
    ++stamp;
    for (NodeId u : graph.neighbors(v)) {
      const int c = color[static_cast<std::size_t>(u)];
      if (c >= 0) taken[static_cast<std::size_t>(c)] = stamp;
    }
    int c = 0;
    while (taken[static_cast<std::size_t>(c)] == stamp) ++c;
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

BoxCovering covering_from_colors(std::span<const int> colors, int box_size) {
  BoxCovering covering;
  covering.box_size = box_size;
  covering.box_of.assign(colors.begin(), colors.end());
  const int count =
      colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  covering.boxes.resize(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < colors.size(); ++v) {
    covering.boxes[static_cast<std::size_t>(colors[v])].push_back(
        static_cast<NodeId>(v));
  }
  return covering;
}

BoxCovering box_cover(const DistanceMatrix& dist, int box_size, int trials,
                      std::uint64_t seed) {
  check_box_size(box_size);
  if (trials < 1) {
    throw ArgumentError("trials must be >= 1, got " + std::to_string(trials));
  }
  const Graph aux = auxiliary_graph(dist, box_size);
  std::vector<int> best;
  int best_count = 0;
  for (int t = 0; t < trials; ++t) {
    Engine engine(trial_seed(seed, static_cast<std::uint64_t>(box_size),
                             static_cast<std::uint64_t>(t)));
    const auto order = random_permutation(dist.size(), engine);
    auto colors = greedy_coloring(aux, order);
    const int count =
        colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    if (t == 0 || count < best_count) {
      best = std::move(colors);
      best_count = count;
    }
  }
  BoxCovering covering = covering_from_colors(best, box_size);
  covering.trials_used = trials;
  covering.seed = seed;
  return covering;
}

namespace {

class ExactCoverSearch {
 public:
  ExactCoverSearch(const DistanceMatrix& dist, int box_size)
      : dist_(dist), box_size_(box_size), assignment_(dist.size(), -1) {}

  std::vector<int> run() {
    const std::size_t n = dist_.size();
    best_count_ = static_cast<int>(n);
    best_.resize(n);
    for (std::size_t v = 0; v < n; ++v) best_[v] = static_cast<int>(v);
    extend(0, 0);
    return best_;
  }

 private:
  // Restricted-growth assignment: node v joins an open box or opens box
  // `open`, so every set partition is visited once.
  void extend(std::size_t v, int open) {
    if (open >= best_count_) return;
    if (v == dist_.size()) {
      best_count_ = open;
      best_ = assignment_;
      return;
    }
    for (int b = 0; b < open; ++b) {
      if (fits(v, b)) {
        assignment_[v] = b;
        extend(v + 1, open);
      }
    }
    assignment_[v] = open;
    extend(v + 1, open + 1);
    assignment_[v] = -1;
  }

  bool fits(std::size_t v, int box) const {
    for (std::size_t u = 0; u < v; ++u) {
      if (assignment_[u] == box &&
          dist_.at(static_cast<NodeId>(u), static_cast<NodeId>(v)) >= box_size_)
        return false;
    }
    return true;
  }

  const DistanceMatrix& dist_;
  int box_size_;
  std::vector<int> assignment_;
  std::vector<int> best_;
  int best_count_ = 0;
};

}  // namespace

BoxCovering brute_force_cover(const DistanceMatrix& dist, int box_size) {
  check_box_size(box_size);
  if (dist.size() > 12) {
    throw SizeError("exhaustive covering limited to 12 nodes, got " +
                    std::to_string(dist.size()));
  }
  const auto colors = ExactCoverSearch(dist, box_size).run();
  BoxCovering covering = covering_from_colors(colors, box_size);
  covering.trials_used = 1;
  return covering;
}

bool is_valid_covering(const BoxCovering& covering,
                       const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  if (covering.box_of.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t b = 0; b < covering.boxes.size(); ++b) {
    const auto& box = covering.boxes[b];
    if (box.empty()) return false;
    for (NodeId v : box) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
      const auto idx = static_cast<std::size_t>(v);
      if (seen[idx] || covering.box_of[idx] != static_cast<int>(b)) return false;
      seen[idx] = 1;
      for (NodeId u : box) {
        if (dist.at(u, v) >= covering.box_size) return false;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

CoveringProfile covering_profile(const DistanceMatrix& dist, int min_box,
                                 std::optional<int> max_box, int trials,
                                 std::uint64_t seed) {
  check_box_size(min_box);
  const int top = max_box.value_or(dist.diameter() + 1);
  if (min_box > top) {
    throw ArgumentError("l_min " + std::to_string(min_box) +
                        " exceeds l_max " + std::to_string(top));
  }
  if (trials < 1) {
    throw ArgumentError("trials must be >= 1, got " + std::to_string(trials));
  }

  CoveringProfile profile;
  profile.node_count = dist.size();
  profile.max_box_size = dist.diameter() + 1;
  profile.coverings.resize(static_cast<std::size_t>(top - min_box + 1));
  parallel_for(profile.coverings.size(), [&](std::size_t k) {
    profile.coverings[k] =
        box_cover(dist, min_box + static_cast<int>(k), trials, seed);
  });

  for (std::size_t k = 1; k < profile.coverings.size(); ++k) {
    const auto& prev = profile.coverings[k - 1];
    auto& cur = profile.coverings[k];
    if (cur.box_count() > prev.box_count()) {
      const int size = cur.box_size;
      cur = prev;
      cur.box_size = size;
      profile.repaired.push_back(size);
    }
  }
  return profile;
}

CoveringProfile covering_profile(const Graph& graph, int min_box,
                                 std::optional<int> max_box, int trials,
                                 std::uint64_t seed) {
  return covering_profile(all_pairs_distances(graph), min_box, max_box, trials,
                          seed);
}

}  // namespace netdim
