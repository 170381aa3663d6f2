#pragma once

// Standard graph families used throughout the tests and the CLI.

#include <vector>

#include "proxrem/errors.hpp"
#include "proxrem/graph.hpp"

namespace proxrem {

inline Graph path_graph(std::size_t n) {
  if (n == 0) throw DomainError("path of order 0");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  if (n == 0) throw DomainError("complete graph of order 0");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// K_{1,leaves}: vertex 0 is the center.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace proxrem
