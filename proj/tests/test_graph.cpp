#include <gtest/gtest.h>

#include <vector>

#include "proxrem/errors.hpp"
#include "proxrem/families.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/oracle.hpp"
#include "support.hpp"

using namespace proxrem;

TEST(ParseGraph, HeaderedPath) {
  const auto g = parse_graph("3 2\n0 1\n1 2");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseGraph, DuplicateEdgesCollapse) {
  const auto g = parse_graph("0 1\n1 0");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.size(), 1u);
}

TEST(ParseGraph, SelfLoopIsRejected) { EXPECT_THROW(parse_graph("0 0"), ValidationError); }

TEST(ParseGraph, CommentsAndBlankLines) {
  const auto g = parse_graph("# a comment\n\n3 2   # header\n0 1\n\n  1 2  \n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(ParseGraph, MalformedLineReportsLineNumber) {
  try {
    parse_graph("0 1\n1 2\n2 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_graph("# c\n0 1 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_graph("0 -1\n"), ParseError);
}

TEST(ParseGraph, IdBeyondDeclaredOrder) { EXPECT_THROW(parse_graph("3 2\n0 1\n1 3\n"), ValidationError); }

TEST(ParseGraph, EmptyDocument) { EXPECT_THROW(parse_graph("# nothing\n\n"), ValidationError); }

TEST(ParseGraph, IsolatedVerticesViaHeader) {
  const auto g = parse_graph("5 1\n0 1\n");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_FALSE(is_connected(g));
}

TEST(ParseGraph, RoundTripsThroughRender) {
  for (const auto& g : random_graph_corpus(60, 20, 11)) EXPECT_EQ(parse_graph(render_graph(g)), g);
  EXPECT_EQ(render_graph(parse_graph("1 2\n0 2\n")), "3 2\n0 2\n1 2\n");
}

TEST(DegreeStats, Examples) {
  EXPECT_EQ(degree_stats(path_graph(4)).min_degree, 1u);
  EXPECT_EQ(degree_stats(path_graph(4)).max_degree, 2u);
  EXPECT_EQ(degree_stats(complete_graph(5)).min_degree, 4u);
  EXPECT_EQ(degree_stats(complete_graph(5)).max_degree, 4u);
  EXPECT_EQ(degree_stats(star_graph(6)).min_degree, 1u);
  EXPECT_EQ(degree_stats(star_graph(6)).max_degree, 6u);
  EXPECT_THROW(degree_stats(Graph(0)), DomainError);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(path_graph(5)));
  EXPECT_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Distances, Examples) {
  EXPECT_EQ(all_pairs_distances(cycle_graph(4))(0, 2), 2);
  EXPECT_EQ(all_pairs_distances(path_graph(6))(0, 5), 5);
  const auto k4 = all_pairs_distances(complete_graph(4));
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(k4(u, v), u == v ? 0 : 1);
}

TEST(Distances, DisconnectedPairsAreInfinite) {
  const auto d = all_pairs_distances(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(d(0, 2), DistanceMatrix::kInfinity);
  EXPECT_FALSE(d.all_finite());
}

TEST(Distances, MatchFloydWarshallOnSmallGraphs) {
  for (const auto& g : random_graph_corpus(300, 9, 2024)) {
    const auto d = all_pairs_distances(g);
    const auto ref = reference::floyd_warshall(g);
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = 0; v < g.order(); ++v) {
        ASSERT_EQ(d(u, v), ref[u][v]) << render_graph(g);
        ASSERT_EQ(d(u, v), d(v, u));
        ASSERT_EQ(d(u, v) == 1, g.adjacent(u, v));
      }
  }
}

TEST(Distances, ParallelEqualsSequential) {
  for (const auto& g : random_graph_corpus(20, 60, 99)) {
    const auto a = all_pairs_distances(g, 1);
    const auto b = all_pairs_distances(g, 8);
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = 0; v < g.order(); ++v) ASSERT_EQ(a(u, v), b(u, v));
  }
}

TEST(SetDistance, Examples) {
  const std::vector<VertexId> b01{0, 1};
  EXPECT_EQ(set_distance(path_graph(5), 4, b01), 3u);
  EXPECT_EQ(set_distance(path_graph(5), 1, b01), 0u);
  const std::vector<VertexId> b0{0};
  EXPECT_EQ(set_distance(cycle_graph(6), 3, b0), 3u);
  EXPECT_THROW(set_distance(path_graph(3), 0, std::vector<VertexId>{}), DomainError);
}

TEST(Graph, FromEdgesValidates) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), ValidationError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), ValidationError);
  const auto g = Graph::from_edges(4, {{3, 0}, {2, 0}, {1, 0}});
  const auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(max_degree_vertex(path_graph(5)), 1u);
}
