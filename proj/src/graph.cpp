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

#include "netdim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "netdim/errors.hpp"
#include "netdim/parallel.hpp"

namespace netdim {

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw ArgumentError("label count " + std::to_string(labels.size()) +
                        " does not match node count " +
                        std::to_string(node_count));
  }
  const auto n = static_cast<NodeId>(node_count);
  Graph g;
  g.adjacency_.resize(node_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ArgumentError("edge (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") out of range");
    }
    if (u == v) continue;
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    nbrs.shrink_to_fit();
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;

  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
      labels.push_back(std::to_string(i));
    }
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (static_cast<NodeId>(u) < v) out.emplace_back(static_cast<NodeId>(u), v);
    }
  }
  return out;
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Hops> dist)
    : n_(n), dist_(std::move(dist)) {
  if (dist_.size() != n_ * n_) {
    throw ArgumentError("distance matrix has " + std::to_string(dist_.size()) +
                        " entries, expected " + std::to_string(n_ * n_));
  }
  for (Hops d : dist_) {
    if (d != kUnreachable) diameter_ = std::max(diameter_, d);
  }
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool parse_int(std::string_view token, long long& value) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto intern = [&](std::string_view token) {
    auto [it, inserted] =
        ids.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto tokens = split_ws(content);
    if (tokens.size() != 2) {
      throw ParseError("expected 2 node tokens, found " +
                           std::to_string(tokens.size()),
                       line_no);
    }
    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw ParseError("no edges");
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph parse_pajek(std::istream& in) {
  enum class Section { kPreamble, kVertices, kPairs };
  Section section = Section::kPreamble;
  long long n = -1;
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto vertex_index = [&](std::string_view token, std::size_t line_no) {
    long long idx = 0;
    if (!parse_int(token, idx)) {
      throw ParseError("invalid vertex index '" + std::string(token) + "'",
                       line_no);
    }
    if (idx < 1 || idx > n) {
      throw ParseError("vertex index " + std::to_string(idx) +
                           " outside 1.." + std::to_string(n),
                       line_no);
    }
    return static_cast<NodeId>(idx - 1);
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '%') continue;

    if (content.front() == '*') {
      const auto tokens = split_ws(content);
      const std::string keyword = lower(tokens[0]);
      if (keyword == "*vertices") {
        if (n >= 0) throw ParseError("duplicate *Vertices header", line_no);
        long long count = 0;
        if (tokens.size() < 2 || !parse_int(tokens[1], count) || count < 0) {
          throw ParseError("*Vertices needs a non-negative count", line_no);
        }
        n = count;
        labels.resize(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i) {
          labels[static_cast<std::size_t>(i)] = std::to_string(i + 1);
        }
        section = Section::kVertices;
      } else if (keyword == "*edges" || keyword == "*arcs") {
        if (n < 0) throw ParseError("missing *Vertices header", line_no);
        section = Section::kPairs;
      } else {
        throw ParseError("unsupported section " + std::string(tokens[0]),
                         line_no);
      }
      continue;
    }

    switch (section) {
      case Section::kPreamble:
        throw ParseError("missing *Vertices header", line_no);
      case Section::kVertices: {
        const auto tokens = split_ws(content);
        const NodeId v = vertex_index(tokens[0], line_no);
        std::string_view rest = trim(content.substr(tokens[0].size()));
        if (rest.empty()) break;
        std::string_view label;
        if (rest.front() == '"') {
          const auto close = rest.find('"', 1);
          if (close == std::string_view::npos) {
            throw ParseError("unterminated vertex label", line_no);
          }
          label = rest.substr(1, close - 1);
        } else {
          label = split_ws(rest)[0];
        }
        labels[static_cast<std::size_t>(v)] = std::string(label);
        break;
      }
      case Section::kPairs: {
        const auto tokens = split_ws(content);
        if (tokens.size() < 2) {
          throw ParseError("expected a vertex pair", line_no);
        }
        edges.emplace_back(vertex_index(tokens[0], line_no),
                           vertex_index(tokens[1], line_no));
        break;
      }
    }
  }
  if (n < 0) throw ParseError("missing *Vertices header");
  return Graph::from_edges(static_cast<std::size_t>(n), edges,
                           std::move(labels));
}

Graph parse_pajek(const std::string& text) {
  std::istringstream in(text);
  return parse_pajek(in);
}

std::vector<Hops> bfs_distances(const Graph& graph, NodeId source) {
  const auto n = graph.node_count();
  if (source < 0 || static_cast<std::size_t>(source) >= n) {
    throw ArgumentError("BFS source " + std::to_string(source) +
                        " out of range for " + std::to_string(n) + " nodes");
  }
  std::vector<Hops> dist(n, kUnreachable);
  std::vector<NodeId> frontier{source};
  std::vector<NodeId> next;
  dist[static_cast<std::size_t>(source)] = 0;
  for (Hops depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId v : graph.neighbors(u)) {
        auto& d = dist[static_cast<std::size_t>(v)];
        if (d == kUnreachable) {
          d = depth;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<Hops> dist(n * n);
  parallel_for(n, [&](std::size_t i) {
    const auto row = bfs_distances(graph, static_cast<NodeId>(i));
    std::copy(row.begin(), row.end(), dist.begin() + static_cast<std::ptrdiff_t>(i * n));
  });
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw DisconnectedError(
        "graph is disconnected; reduce it with largest_connected_component "
        "first");
  }
  return DistanceMatrix(n, std::move(dist));
}

namespace {

// Component index per node, components numbered by their smallest member.
std::vector<int> component_ids(const Graph& graph, int& count) {
  const std::size_t n = graph.node_count();
  std::vector<int> comp(n, -1);
  count = 0;
  std::deque<NodeId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    queue.push_back(static_cast<NodeId>(s));
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : graph.neighbors(u)) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = count;
          queue.push_back(v);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

bool is_connected(const Graph& graph) {
  int count = 0;
  component_ids(graph, count);
  return count <= 1;
}

Graph largest_connected_component(const Graph& graph) {
  int count = 0;
  const auto comp = component_ids(graph, count);
  if (count <= 1) return graph;

  std::vector<std::size_t> sizes(static_cast<std::size_t>(count), 0);
  for (int c : comp) ++sizes[static_cast<std::size_t>(c)];
  // max_element returns the first maximum, i.e. the lowest-numbered one.
  const int best = static_cast<int>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<NodeId> new_id(graph.node_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (comp[v] == best) {
      new_id[v] = static_cast<NodeId>(labels.size());
      labels.push_back(graph.label(static_cast<NodeId>(v)));
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& [u, v] : graph.edges()) {
    if (comp[static_cast<std::size_t>(u)] == best) {
      edges.emplace_back(new_id[static_cast<std::size_t>(u)],
                         new_id[static_cast<std::size_t>(v)]);
    }
  }
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace netdim
