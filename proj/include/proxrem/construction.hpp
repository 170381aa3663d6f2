#pragma once

// Spanning-tree construction behind the max-degree proximity/remoteness
// bounds, and exact certification of every inequality used to derive them.
//
// Pipeline for a connected graph G with minimum degree δ and maximum degree Δ:
//   1. centers B = b0, b1, ...: b0 is the lowest-index vertex of degree Δ;
//      each next center is the lowest-index vertex at distance exactly 3
//      from the current centers, until every vertex is within distance 2.
//   2. T' is the union of the stars S(b) plus one connecting edge per new
//      center; every vertex outside T' is hung on a T'-neighbour, giving T.
//   3. every vertex moves its unit weight to its nearest center in T, giving
//      weights c on B with c(b) >= deg_G(b) + 1 and c(B) = n.
//   4. F is the graph on B joining centers at T-distance at most 3; w0 is a
//      c-median of F and c' adds the residue q to w0 so that n + q - (Δ+1)
//      is a multiple of δ + 1.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "proxrem/errors.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/invariants.hpp"
#include "proxrem/rational.hpp"
#include "proxrem/weighted.hpp"

namespace proxrem {

struct ConstructionTrace {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<VertexId> centers;           // B in selection order; centers[0] = b0
  std::vector<Edge> connecting_edges;      // one per center after b0, (x in T_j, y in S(b))
  Graph tree;                              // spanning tree T
  std::vector<VertexId> tree_parent;       // T rooted at b0; the root is its own parent
  std::vector<VertexId> nearest_center;    // v -> v_B, nearest center in T (lowest id on ties)
  WeightFunction contracted;               // c, indexed by position in `centers`
  Graph auxiliary;                         // F, vertices are positions in `centers`
  std::int64_t q = 0;
  WeightFunction adjusted;                 // c' = c + q at w0
  std::size_t median_position = 0;         // position of w0 in `centers`

  VertexId root() const { return centers.front(); }
  VertexId median() const { return centers[median_position]; }

  /// Position of each center in `centers`, or npos for non-centers.
  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> pos(tree.order(), npos);
    for (std::size_t i = 0; i < centers.size(); ++i) pos[centers[i]] = i;
    return pos;
  }

  /// c spread back over V(T): c(b) on centers, 0 elsewhere.
  WeightFunction contracted_on_tree() const { return spread(contracted); }
  WeightFunction adjusted_on_tree() const { return spread(adjusted); }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  WeightFunction spread(const WeightFunction& on_centers) const {
    std::vector<Rational> w(tree.order());
    for (std::size_t i = 0; i < centers.size(); ++i) w[centers[i]] = on_centers[static_cast<VertexId>(i)];
    return WeightFunction(std::move(w));
  }
};

/// Smallest q in [0, δ] with n - (Δ+1) + q divisible by δ + 1.
inline std::int64_t q_adjustment(std::int64_t n, std::int64_t max_degree, std::int64_t min_degree) {
  if (min_degree < 0 || max_degree < min_degree || max_degree > n - 1)
    throw DomainError("need 0 <= delta <= Delta <= n-1");
  const std::int64_t modulus = min_degree + 1;
  const std::int64_t residue = (n - max_degree - 1) % modulus;
  return residue == 0 ? 0 : modulus - residue;
}

namespace detail {

struct CenterGrowth {
  std::vector<VertexId> centers;
  std::vector<Edge> connecting_edges;
  std::vector<Edge> tree_edges;
  std::vector<char> in_core;  // membership in T'
};

inline CenterGrowth grow_centers(const Graph& g) {
  const auto n = g.order();
  CenterGrowth out;
  out.in_core.assign(n, 0);

  auto add_star = [&](VertexId b) {
    out.centers.push_back(b);
    out.in_core[b] = 1;
    for (VertexId y : g.neighbors(b)) {
      if (out.in_core[y])
        throw std::logic_error("neighbour " + std::to_string(y) + " of new center " +
                               std::to_string(b) + " is already in the tree");
      out.in_core[y] = 1;
      out.tree_edges.emplace_back(b, y);
    }
  };

  auto dist = bfs_distances(g, max_degree_vertex(g));
  add_star(max_degree_vertex(g));

  for (;;) {
    auto next = std::find(dist.begin(), dist.end(), 3u);
    if (next == dist.end()) break;
    const auto b = static_cast<VertexId>(next - dist.begin());

    // Lexicographically smallest (x, y) with x in T_j and y a neighbour of b.
    std::optional<Edge> link;
    for (VertexId x = 0; x < n && !link; ++x) {
      if (!out.in_core[x]) continue;
      for (VertexId y : g.neighbors(x)) {
        if (g.adjacent(b, y)) {
          link = Edge{x, y};
          break;
        }
      }
    }
    if (!link) throw std::logic_error("no edge joins the tree to the star of a new center");
    add_star(b);
    out.connecting_edges.push_back(*link);
    out.tree_edges.push_back(*link);

    // Distances to the center set only shrink; relax from b.
    std::vector<VertexId> queue{b};
    dist[b] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (VertexId w : g.neighbors(u)) {
        if (dist[u] + 1 < dist[w]) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  if (*std::max_element(dist.begin(), dist.end()) > 2)
    throw std::logic_error("center growth stopped with a vertex farther than 2 from the centers");
  return out;
}

}  // namespace detail

/// Nearest center in T for every vertex (lowest id on ties), and the contracted
/// weights c(b) = |{v : v_B = b}| indexed by center position.
struct Contraction {
  std::vector<VertexId> nearest_center;
  WeightFunction weights;
};

inline Contraction contract_weights(std::span<const VertexId> centers, const DistanceMatrix& tree_distances) {
  const auto n = tree_distances.order();
  std::vector<std::size_t> by_id(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(), [&](auto a, auto b) { return centers[a] < centers[b]; });

  Contraction out;
  out.nearest_center.resize(n);
  std::vector<std::int64_t> counts(centers.size(), 0);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t best = by_id.front();
    for (std::size_t i : by_id)
      if (tree_distances(v, centers[i]) < tree_distances(v, centers[best])) best = i;
    out.nearest_center[v] = centers[best];
    ++counts[best];
  }
  std::vector<Rational> w(counts.begin(), counts.end());
  out.weights = WeightFunction(std::move(w));
  return out;
}

/// F: centers joined when their T-distance is at most 3. Vertex i is centers[i].
inline Graph auxiliary_graph(std::span<const VertexId> centers, const DistanceMatrix& tree_distances) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < centers.size(); ++i)
    for (VertexId j = i + 1; j < centers.size(); ++j)
      if (tree_distances(centers[i], centers[j]) <= 3) edges.emplace_back(i, j);
  return Graph::from_edges(centers.size(), edges);
}

inline ConstructionTrace build_construction(const Graph& g, unsigned jobs = 1) {
  const auto n = g.order();
  if (n < 2) throw DomainError("construction needs at least two vertices");
  if (!is_connected(g)) throw DomainError("graph is not connected");

  ConstructionTrace t;
  const auto stats = degree_stats(g);
  t.min_degree = stats.min_degree;
  t.max_degree = stats.max_degree;

  auto growth = detail::grow_centers(g);
  t.centers = std::move(growth.centers);
  t.connecting_edges = std::move(growth.connecting_edges);
  auto edges = std::move(growth.tree_edges);
  for (VertexId v = 0; v < n; ++v) {
    if (growth.in_core[v]) continue;
    auto nbrs = g.neighbors(v);
    auto anchor = std::find_if(nbrs.begin(), nbrs.end(), [&](VertexId u) { return growth.in_core[u] != 0; });
    if (anchor == nbrs.end())
      throw std::logic_error("vertex " + std::to_string(v) + " has no neighbour in the core tree");
    edges.emplace_back(*anchor, v);
  }
  t.tree = Graph::from_edges(n, edges);
  if (!is_tree(t.tree)) throw std::logic_error("construction did not produce a spanning tree");

  t.tree_parent.assign(n, t.root());
  {
    std::vector<VertexId> queue{t.root()};
    std::vector<char> seen(n, 0);
    seen[t.root()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : t.tree.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          t.tree_parent[w] = queue[head];
          queue.push_back(w);
        }
      }
    }
  }

  const auto tree_d = all_pairs_distances(t.tree, jobs);
  auto contraction = contract_weights(t.centers, tree_d);
  t.nearest_center = std::move(contraction.nearest_center);
  t.contracted = std::move(contraction.weights);
  t.auxiliary = auxiliary_graph(t.centers, tree_d);

  const auto aux_d = all_pairs_distances(t.auxiliary);
  auto medians = c_median(aux_d, t.contracted);
  t.median_position = *std::min_element(medians.begin(), medians.end(), [&](auto a, auto b) {
    return t.centers[a] < t.centers[b];
  });

  t.q = q_adjustment(static_cast<std::int64_t>(n), static_cast<std::int64_t>(t.max_degree),
                     static_cast<std::int64_t>(t.min_degree));
  t.adjusted = t.contracted;
  t.adjusted.add(static_cast<VertexId>(t.median_position), t.q);
  return t;
}

// ---------------------------------------------------------------------------
// Certificates

enum class Relation { le, lt, eq };

inline const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::eq: return "==";
  }
  return "?";
}

/// One checked relation `lhs <rel> rhs`, evaluated exactly.
struct ChainLink {
  std::string name;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::le;
  bool holds = false;

  Rational slack() const { return rhs - lhs; }
};

inline ChainLink make_link(std::string name, Rational lhs, Rational rhs, Relation rel = Relation::le) {
  bool ok = rel == Relation::le ? lhs <= rhs : rel == Relation::lt ? lhs < rhs : lhs == rhs;
  return {std::move(name), lhs, rhs, rel, ok};
}

inline bool all_hold(std::span<const ChainLink> links) {
  return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.holds; });
}

/// Structural invariants of a trace, each as an exact relation.
inline std::vector<ChainLink> check_trace_invariants(const Graph& g, const ConstructionTrace& t,
                                                     unsigned jobs = 1) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto delta = static_cast<std::int64_t>(t.min_degree);
  const auto Delta = static_cast<std::int64_t>(t.max_degree);
  std::vector<ChainLink> out;

  out.push_back(make_link("tree is spanning", static_cast<std::int64_t>(is_tree(t.tree) && t.tree.order() == g.order()), 1,
                          Relation::eq));
  std::int64_t foreign_edges = 0;
  for (auto [u, v] : t.tree.edges())
    if (!g.adjacent(u, v)) ++foreign_edges;
  out.push_back(make_link("tree edges are graph edges", foreign_edges, 0, Relation::eq));

  std::int64_t far = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    far = std::max<std::int64_t>(far, static_cast<std::int64_t>(set_distance(g, v, t.centers)));
  out.push_back(make_link("max graph distance to centers", far, 2));

  const auto tree_d = all_pairs_distances(t.tree, jobs);
  std::int64_t far_tree = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    far_tree = std::max<std::int64_t>(far_tree, tree_d(v, t.nearest_center[v]));
  out.push_back(make_link("max tree distance to assigned center", far_tree, 2));

  out.push_back(make_link("tree degree of root equals max degree",
                          static_cast<std::int64_t>(t.tree.degree(t.root())), Delta, Relation::eq));
  out.push_back(make_link("graph degree of root equals max degree",
                          static_cast<std::int64_t>(g.degree(t.root())), Delta, Relation::eq));

  std::int64_t orphan_centers = 0;
  for (std::size_t i = 1; i < t.centers.size(); ++i) {
    bool linked = false;
    for (std::size_t j = 0; j < i && !linked; ++j) linked = tree_d(t.centers[i], t.centers[j]) == 3;
    if (!linked) ++orphan_centers;
  }
  out.push_back(make_link("each later center at tree distance 3 from an earlier one", orphan_centers, 0,
                          Relation::eq));

  out.push_back(make_link("auxiliary graph connected", static_cast<std::int64_t>(is_connected(t.auxiliary)), 1,
                          Relation::eq));

  Rational worst_excess = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < t.centers.size(); ++i) {
    const auto floor = static_cast<std::int64_t>(g.degree(t.centers[i])) + 1;
    worst_excess = min(worst_excess, t.contracted[static_cast<VertexId>(i)] - floor);
  }
  out.push_back(make_link("min over centers of c(b) - deg(b) - 1", 0, worst_excess));
  out.push_back(make_link("c(root) >= max degree + 1", Delta + 1, t.contracted[0]));
  out.push_back(make_link("total contracted weight", t.contracted.total(), n, Relation::eq));

  out.push_back(make_link("q >= 0", 0, t.q));
  out.push_back(make_link("q <= min degree", t.q, delta));
  out.push_back(make_link("(n + q - max degree - 1) mod (min degree + 1)", (n + t.q - Delta - 1) % (delta + 1), 0,
                          Relation::eq));
  out.push_back(make_link("adjusted total weight", t.adjusted.total(), n + t.q, Relation::eq));
  return out;
}

}  // namespace proxrem
