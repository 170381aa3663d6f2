#pragma once

// Simple undirected graphs, the edge-list text format, and BFS distances.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxrem/errors.hpp"
#include "proxrem/parallel.hpp"

namespace proxrem {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of the given order.
  explicit Graph(std::size_t order) : adj_(order) {}

  /// Builds a graph from an edge list. Duplicate edges (in either orientation)
  /// collapse; self-loops and out-of-range endpoints throw ValidationError.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (auto [u, v] : edges) {
      if (u >= order || v >= order)
        throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") references a vertex outside 0.." + std::to_string(order - 1));
      if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      g.size_ += nbrs.size();
    }
    g.size_ /= 2;
    return g;
  }

  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  bool adjacent(VertexId u, VertexId v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (VertexId u = 0; u < adj_.size(); ++u)
      for (VertexId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t size_ = 0;
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

inline DegreeStats degree_stats(const Graph& g) {
  if (g.empty()) throw DomainError("degree statistics of an empty graph");
  DegreeStats s{g.degree(0), g.degree(0)};
  for (VertexId v = 1; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

/// Lowest-index vertex of maximum degree.
inline VertexId max_degree_vertex(const Graph& g) {
  if (g.empty()) throw DomainError("max-degree vertex of an empty graph");
  VertexId best = 0;
  for (VertexId v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

/// Hop distances from `source`; unreachable vertices get `unreachable`.
template <class Dist = std::uint32_t>
std::vector<Dist> bfs_distances(const Graph& g, VertexId source,
                                Dist unreachable = std::numeric_limits<Dist>::max()) {
  std::vector<Dist> dist(g.order(), unreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == unreachable) {
        dist[w] = static_cast<Dist>(dist[u] + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](auto d) { return d == std::numeric_limits<std::uint32_t>::max(); });
}

/// Dense n x n hop-distance matrix with a dedicated sentinel for unreachable pairs.
class DistanceMatrix {
 public:
  using value_type = std::uint16_t;
  static constexpr value_type kInfinity = std::numeric_limits<value_type>::max();
  /// Largest order whose distances are guaranteed to fit below the sentinel.
  static constexpr std::size_t kMaxOrder = kInfinity - 1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t order)
      : order_(order), data_(order * order, kInfinity) {}

  std::size_t order() const noexcept { return order_; }

  value_type operator()(VertexId u, VertexId v) const { return data_[u * order_ + v]; }
  value_type& operator()(VertexId u, VertexId v) { return data_[u * order_ + v]; }

  std::span<const value_type> row(VertexId u) const {
    return {data_.data() + u * order_, order_};
  }
  std::span<value_type> row(VertexId u) { return {data_.data() + u * order_, order_}; }

  bool all_finite() const {
    return std::find(data_.begin(), data_.end(), kInfinity) == data_.end();
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<value_type> data_;
};

/// One BFS per source; rows are independent, so sources may be processed in parallel.
inline DistanceMatrix all_pairs_distances(const Graph& g, unsigned jobs = 1) {
  if (g.order() > DistanceMatrix::kMaxOrder)
    throw DomainError("graph order " + std::to_string(g.order()) +
                      " exceeds the distance matrix limit");
  DistanceMatrix d(g.order());
  parallel_for(g.order(), jobs, [&](std::size_t s) {
    auto dist = bfs_distances<DistanceMatrix::value_type>(g, static_cast<VertexId>(s),
                                                          DistanceMatrix::kInfinity);
    std::copy(dist.begin(), dist.end(), d.row(static_cast<VertexId>(s)).begin());
  });
  return d;
}

/// Distance from v to the nearest member of `set`.
inline std::size_t set_distance(const Graph& g, VertexId v, std::span<const VertexId> set) {
  if (set.empty()) throw DomainError("distance to an empty vertex set");
  auto dist = bfs_distances(g, v);
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (VertexId b : set) best = std::min(best, dist[b]);
  if (best == std::numeric_limits<std::uint32_t>::max())
    throw DomainError("vertex set unreachable from vertex " + std::to_string(v));
  return best;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Splits a data line into whitespace-separated nonnegative integers.
inline std::vector<std::uint64_t> read_integers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    std::uint64_t value = 0;
    auto token = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses the edge-list format: one "u v" pair per line, '#' comments and blank
/// lines ignored. The first data line is an "n m" header when n >= 1 and m
/// equals the number of remaining data lines; otherwise every line is an edge
/// and the order is one more than the largest vertex id.
inline Graph parse_graph(std::string_view text) {
  struct Row {
    std::size_t line_no;
    std::uint64_t a, b;
  };
  std::vector<Row> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line_no;
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto ints = detail::read_integers(line, line_no);
    if (ints.size() != 2)
      throw ParseError(line_no, "expected two integers, found " + std::to_string(ints.size()));
    rows.push_back({line_no, ints[0], ints[1]});
  }
  if (rows.empty()) throw ValidationError("edge list contains no data lines");

  constexpr std::uint64_t kMaxId = std::numeric_limits<VertexId>::max() - 1;
  std::size_t first_edge = 0;
  std::uint64_t order = 0;
  const bool has_header = rows[0].a >= 1 && rows[0].b == rows.size() - 1;
  if (has_header) {
    order = rows[0].a;
    first_edge = 1;
    if (order > kMaxId) throw ValidationError("declared order is too large");
  }
  std::vector<Edge> edges;
  edges.reserve(rows.size());
  std::uint64_t max_id = 0;
  for (std::size_t i = first_edge; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.a == r.b)
      throw ValidationError("line " + std::to_string(r.line_no) + ": self-loop at vertex " +
                            std::to_string(r.a));
    if (has_header && (r.a >= order || r.b >= order))
      throw ValidationError("line " + std::to_string(r.line_no) + ": vertex id exceeds declared order " +
                            std::to_string(order));
    if (r.a > kMaxId || r.b > kMaxId)
      throw ValidationError("line " + std::to_string(r.line_no) + ": vertex id too large");
    max_id = std::max({max_id, r.a, r.b});
    edges.emplace_back(static_cast<VertexId>(r.a), static_cast<VertexId>(r.b));
  }
  if (!has_header) order = max_id + 1;
  return Graph::from_edges(static_cast<std::size_t>(order), edges);
}

/// Renders the header line "n m" followed by edges (u < v) in lexicographic order.
inline std::string render_graph(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace proxrem
