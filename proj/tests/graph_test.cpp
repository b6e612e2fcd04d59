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

#include <gtest/gtest.h>

#include <random>

#include "netdim/errors.hpp"
#include "test_util.hpp"

namespace netdim {
namespace {

void ExpectNormalized(const Graph& g) {
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const auto nbrs = g.neighbors(NodeId(i));
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      EXPECT_NE(nbrs[k], NodeId(i)) << "self-loop at " << i;
      if (k > 0) EXPECT_LT(nbrs[k - 1], nbrs[k]) << "unsorted or duplicate";
      EXPECT_TRUE(g.has_edge(nbrs[k], NodeId(i))) << "asymmetric";
    }
  }
}

TEST(ParseEdgeListTest, BuildsGraphWithLabelsInFirstAppearanceOrder) {
  const Graph g = parse_edge_list("a b\nb c");
  ExpectNormalized(g);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(ParseEdgeListTest, DropsSelfLoops) {
  const Graph g = parse_edge_list("1 1\n1 2");
  ExpectNormalized(g);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeListTest, CollapsesDuplicates) {
  const Graph g = parse_edge_list("1 2\n2 1\n1 2");
  ExpectNormalized(g);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseEdgeListTest, SkipsCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# header\n\n  a\tb  \n   # indented\nb c\n");
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(ParseEdgeListTest, RejectsMalformedLineWithLineNumber) {
  try {
    parse_edge_list("a b\nb c d\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("a\n"), ParseError);
}

TEST(ParseEdgeListTest, EmptyInputHasNoEdges) {
  try {
    parse_edge_list("# only a comment\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("no edges"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(ParsePajekTest, Path) {
  const Graph g = parse_pajek("*Vertices 3\n*Edges\n1 2\n2 3");
  ExpectNormalized(g);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}}));
}

TEST(ParsePajekTest, ArcsAreSymmetrized) {
  const Graph g = parse_pajek("*Vertices 2\n*Arcs\n1 2\n2 1");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParsePajekTest, KeepsIsolatedVertices) {
  const Graph g = parse_pajek("*Vertices 4\n*Edges\n1 2");
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.neighbors(3).empty());
}

TEST(ParsePajekTest, ReadsQuotedLabelsAndIgnoresWeights) {
  const Graph g = parse_pajek(
      "% USAir-style\n*vertices 3\n1 \"Atlanta GA\" 0.1 0.2 0.5\n"
      "2 \"Boston\"\n*EDGES\n1 2 0.25\n2 3 1\n1 3\n");
  EXPECT_EQ(g.label(0), "Atlanta GA");
  EXPECT_EQ(g.label(1), "Boston");
  EXPECT_EQ(g.label(2), "3");
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(ParsePajekTest, Errors) {
  EXPECT_THROW(parse_pajek("*Edges\n1 2\n"), ParseError);
  EXPECT_THROW(parse_pajek("1 2\n"), ParseError);
  EXPECT_THROW(parse_pajek(""), ParseError);
  EXPECT_THROW(parse_pajek("*Vertices 2\n*Edges\n1 3\n"), ParseError);
  EXPECT_THROW(parse_pajek("*Vertices 2\n*Edges\n0 1\n"), ParseError);
  EXPECT_THROW(parse_pajek("*Vertices 2\n*Edges\n1\n"), ParseError);
  try {
    parse_pajek("*Vertices 2\n*Edges\n1 2\n2 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(BfsDistancesTest, Examples) {
  EXPECT_EQ(bfs_distances(testing::path_graph(3), 0), (std::vector<Hops>{0, 1, 2}));
  EXPECT_EQ(bfs_distances(testing::path_graph(1), 0), (std::vector<Hops>{0}));
  const Graph two = Graph::from_edges(2, {});
  EXPECT_EQ(bfs_distances(two, 0), (std::vector<Hops>{0, kUnreachable}));
}

TEST(BfsDistancesTest, SourceOutOfRange) {
  EXPECT_THROW(bfs_distances(testing::path_graph(3), 3), ArgumentError);
  EXPECT_THROW(bfs_distances(testing::path_graph(3), -1), ArgumentError);
}

TEST(BfsDistancesTest, DistanceOneExactlyOnNeighbors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(20, 0.15, rng);
    for (NodeId s = 0; s < 20; ++s) {
      const auto d = bfs_distances(g, s);
      for (NodeId v = 0; v < 20; ++v) {
        EXPECT_EQ(d[std::size_t(v)] == 1, g.has_edge(s, v));
      }
    }
  }
}

TEST(AllPairsDistancesTest, Examples) {
  const auto p3 = all_pairs_distances(testing::path_graph(3));
  EXPECT_EQ(p3.at(0, 2), 2);
  EXPECT_EQ(p3.diameter(), 2);

  const auto k4 = all_pairs_distances(testing::complete_graph(4));
  for (NodeId i = 0; i < 4; ++i)
    for (NodeId j = 0; j < 4; ++j) EXPECT_EQ(k4.at(i, j), i == j ? 0 : 1);
  EXPECT_EQ(k4.diameter(), 1);

  const Graph c6 = Graph::from_edges(
      6, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  EXPECT_EQ(all_pairs_distances(c6).diameter(), 3);
}

TEST(AllPairsDistancesTest, RejectsDisconnected) {
  EXPECT_THROW(all_pairs_distances(Graph::from_edges(2, {})), DisconnectedError);
}

TEST(AllPairsDistancesTest, PathDiameter) {
  for (std::size_t n = 2; n <= 20; ++n) {
    EXPECT_EQ(all_pairs_distances(testing::path_graph(n)).diameter(), Hops(n - 1));
  }
}

TEST(AllPairsDistancesTest, MatchesFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const Graph g = testing::random_connected_graph(n, 0.05, rng);
    const auto oracle = testing::floyd_warshall(g);
    const auto dist = all_pairs_distances(g);
    long diameter = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(dist.at(NodeId(i), NodeId(j)), oracle[i][j]);
        diameter = std::max(diameter, oracle[i][j]);
        EXPECT_EQ(dist.at(NodeId(i), NodeId(j)), dist.at(NodeId(j), NodeId(i)));
        EXPECT_EQ(dist.at(NodeId(i), NodeId(j)) == 1, g.has_edge(NodeId(i), NodeId(j)));
      }
    }
    EXPECT_EQ(dist.diameter(), diameter);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          ASSERT_LE(dist.at(NodeId(i), NodeId(k)),
                    dist.at(NodeId(i), NodeId(j)) + dist.at(NodeId(j), NodeId(k)));
  }
}

TEST(LargestComponentTest, ConnectedGraphIsUnchanged) {
  const Graph g = parse_edge_list("a b\nb c\nc a\n");
  EXPECT_EQ(largest_connected_component(g), g);
}

TEST(LargestComponentTest, PicksLargerComponentAndKeepsLabels) {
  const Graph g = parse_edge_list("x y\np q\nq r\n");
  const Graph lcc = largest_connected_component(g);
  EXPECT_EQ(lcc.node_count(), 3u);
  EXPECT_EQ(lcc.labels(), (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_EQ(lcc.edge_count(), 2u);
  ExpectNormalized(lcc);
}

TEST(LargestComponentTest, EdgelessGraphGivesSingleNode) {
  const Graph lcc = largest_connected_component(Graph::from_edges(5, {}));
  EXPECT_EQ(lcc.node_count(), 1u);
  EXPECT_EQ(lcc.label(0), "0");
}

TEST(LargestComponentTest, TiesGoToSmallestId) {
  const Graph g = parse_pajek("*Vertices 4\n*Edges\n3 4\n1 2\n");
  const Graph lcc = largest_connected_component(g);
  EXPECT_EQ(lcc.labels(), (std::vector<std::string>{"1", "2"}));
}

TEST(GraphTest, FromEdgesValidates) {
  const std::vector<std::pair<NodeId, NodeId>> bad = {{0, 5}};
  EXPECT_THROW(Graph::from_edges(2, bad), ArgumentError);
  EXPECT_THROW(Graph::from_edges(2, {}, {"only one"}), ArgumentError);
}

}  // namespace
}  // namespace netdim
