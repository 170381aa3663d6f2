#include <gtest/gtest.h>

#include "proxrem/errors.hpp"
#include "proxrem/families.hpp"
#include "proxrem/invariants.hpp"
#include "proxrem/oracle.hpp"
#include "support.hpp"

using namespace proxrem;

TEST(Transmission, Examples) {
  const auto p4 = path_graph(4);
  EXPECT_EQ(transmission(p4, all_pairs_distances(p4), 0), 6);
  const auto k5 = complete_graph(5);
  EXPECT_EQ(transmission(k5, all_pairs_distances(k5), 2), 4);
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(transmission(c5, all_pairs_distances(c5), 3), 6);
}

TEST(Transmission, DisconnectedThrows) {
  const auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(transmission(g, all_pairs_distances(g), 0), DomainError);
}

TEST(InvariantSummary, PathAndCycleExamples) {
  EXPECT_EQ(invariant_summary(path_graph(5)).proximity, Rational(3, 2));
  EXPECT_EQ(invariant_summary(path_graph(6)).proximity, Rational(9, 5));
  EXPECT_EQ(invariant_summary(path_graph(4)).remoteness, Rational(2));
  const auto c4 = invariant_summary(cycle_graph(4));
  EXPECT_EQ(c4.proximity, Rational(4, 3));
  EXPECT_EQ(c4.remoteness, Rational(4, 3));
}

TEST(InvariantSummary, MedianAndAntimedianSets) {
  const auto s = invariant_summary(path_graph(4));
  EXPECT_EQ(s.median, (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(s.antimedian, (std::vector<VertexId>{0, 3}));
  EXPECT_EQ(s.radius, 2u);
  EXPECT_EQ(s.diameter, 3u);
  const auto star = invariant_summary(star_graph(5));
  EXPECT_EQ(star.median, (std::vector<VertexId>{0}));
  EXPECT_EQ(star.proximity, Rational(1));
  EXPECT_EQ(star.remoteness, Rational(9, 5));
}

TEST(InvariantSummary, RejectsTrivialAndDisconnected) {
  EXPECT_THROW(invariant_summary(Graph(1)), DomainError);
  EXPECT_THROW(invariant_summary(Graph::from_edges(3, {{0, 1}})), DomainError);
}

TEST(InvariantSummary, MatchesReferenceOnRandomGraphs) {
  for (const auto& g : random_graph_corpus(200, 14, 5)) {
    const auto s = invariant_summary(g);
    const auto ref = reference::reference_transmissions(g);
    const auto n = static_cast<std::int64_t>(g.order());
    ASSERT_EQ(s.transmission, ref);
    for (VertexId v = 0; v < g.order(); ++v)
      ASSERT_EQ(Rational(n - 1) * s.average_distance[v], Rational(s.transmission[v]));
    const auto [lo, hi] = std::minmax_element(ref.begin(), ref.end());
    EXPECT_EQ(s.proximity, Rational(*lo, n - 1));
    EXPECT_EQ(s.remoteness, Rational(*hi, n - 1));
    EXPECT_LE(Rational(1), s.proximity);
    EXPECT_LE(s.proximity, s.remoteness);
  }
}

TEST(ClassicalBounds, Examples) {
  EXPECT_EQ(classical_bounds(5, 1).proximity_by_order, Rational(3, 2));
  EXPECT_EQ(classical_bounds(20, 3).remoteness_by_min_degree, Rational(11));
  EXPECT_EQ(classical_bounds(2, 1).remoteness_by_order, Rational(1));
  EXPECT_EQ(proximity_order_bound(6), Rational(9, 5));
  EXPECT_EQ(proximity_min_degree_bound(20, 3), Rational(15, 4) + Rational(3));
}

TEST(ClassicalBounds, RangeChecks) {
  EXPECT_THROW(classical_bounds(1, 1), DomainError);
  EXPECT_THROW(classical_bounds(5, 0), DomainError);
  EXPECT_THROW(classical_bounds(5, 5), DomainError);
}

TEST(ClassicalBounds, HoldOnRandomGraphs) {
  for (const auto& g : random_graph_corpus(150, 40, 17)) {
    const auto s = invariant_summary(g);
    const auto n = static_cast<std::int64_t>(g.order());
    const auto b = classical_bounds(n, static_cast<std::int64_t>(degree_stats(g).min_degree));
    EXPECT_LE(s.remoteness, b.remoteness_by_order);
    EXPECT_LE(s.proximity, b.proximity_by_order);
    EXPECT_LE(s.remoteness, b.remoteness_by_min_degree);
    EXPECT_LE(s.proximity, b.proximity_by_min_degree);
  }
}

TEST(SpanningTree, InvariantsDoNotDecreaseUnderEdgeDeletion) {
  // BFS tree from vertex 0 as an arbitrary spanning tree.
  for (const auto& g : random_graph_corpus(80, 25, 23)) {
    std::vector<Edge> tree_edges;
    std::vector<char> seen(g.order(), 0);
    std::vector<VertexId> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto w : g.neighbors(queue[i]))
        if (!seen[w]) {
          seen[w] = 1;
          tree_edges.emplace_back(queue[i], w);
          queue.push_back(w);
        }
    const auto t = Graph::from_edges(g.order(), tree_edges);
    const auto sg = invariant_summary(g), st = invariant_summary(t);
    EXPECT_LE(sg.proximity, st.proximity);
    EXPECT_LE(sg.remoteness, st.remoteness);
  }
}
