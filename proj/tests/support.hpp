#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond the Graph container and Rational.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "proxrem/graph.hpp"
#include "proxrem/rational.hpp"

namespace proxrem::reference {

inline constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;

/// Floyd–Warshall over the adjacency predicate.
inline std::vector<std::vector<std::int64_t>> floyd_warshall(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kUnreached));
  for (VertexId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (VertexId v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::int64_t> reference_transmissions(const Graph& g) {
  const auto d = floyd_warshall(g);
  std::vector<std::int64_t> sigma(g.order(), 0);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v) sigma[u] += d[u][v];
  return sigma;
}

/// σ_c(v) for every v, by Floyd–Warshall distances.
inline std::vector<Rational> reference_weighted_distances(const Graph& g, const std::vector<Rational>& c) {
  const auto d = floyd_warshall(g);
  std::vector<Rational> out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v) out[u] += c[v] * Rational(d[u][v]);
  return out;
}

inline std::vector<VertexId> argmin_set(const std::vector<Rational>& values) {
  const auto best = *std::min_element(values.begin(), values.end());
  std::vector<VertexId> out;
  for (VertexId v = 0; v < values.size(); ++v)
    if (values[v] == best) out.push_back(v);
  return out;
}

/// Branch weight by deleting v and flood-filling each remaining component.
inline Rational reference_branch_weight(const Graph& tree, const std::vector<Rational>& c, VertexId v) {
  const auto n = tree.order();
  std::vector<char> seen(n, 0);
  seen[v] = 1;
  Rational best;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Rational weight;
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      weight += c[x];
      for (auto y : tree.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    best = max(best, weight);
  }
  return best;
}

}  // namespace proxrem::reference
