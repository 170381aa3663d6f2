#pragma once

// Unweighted distance invariants: transmission, average distance of a vertex,
// proximity, remoteness, median, and the order / minimum-degree bounds.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "proxrem/errors.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/rational.hpp"

namespace proxrem {

/// Sum of distances from v to every other vertex.
inline std::int64_t transmission(const DistanceMatrix& d, VertexId v) {
  std::int64_t total = 0;
  for (auto x : d.row(v)) {
    if (x == DistanceMatrix::kInfinity) throw DomainError("transmission of a disconnected graph");
    total += x;
  }
  return total;
}

inline std::int64_t transmission(const Graph& g, const DistanceMatrix& d, VertexId v) {
  if (d.order() != g.order()) throw DomainError("distance matrix does not match the graph");
  return transmission(d, v);
}

struct InvariantSummary {
  std::vector<std::int64_t> transmission;
  std::vector<Rational> average_distance;
  Rational proximity;
  Rational remoteness;
  std::vector<VertexId> median;      // argmin of the average distance
  std::vector<VertexId> antimedian;  // argmax of the average distance
  std::size_t radius = 0;
  std::size_t diameter = 0;
};

inline InvariantSummary invariant_summary(const Graph& g, const DistanceMatrix& d) {
  const auto n = g.order();
  if (n < 2) throw DomainError("proximity and remoteness need at least two vertices");
  if (d.order() != n) throw DomainError("distance matrix does not match the graph");
  if (!d.all_finite()) throw DomainError("graph is not connected");

  InvariantSummary s;
  s.transmission.resize(n);
  s.average_distance.resize(n);
  std::size_t radius = n;
  std::size_t diameter = 0;
  for (VertexId v = 0; v < n; ++v) {
    s.transmission[v] = transmission(d, v);
    s.average_distance[v] = Rational(s.transmission[v], static_cast<std::int64_t>(n - 1));
    auto row = d.row(v);
    std::size_t ecc = *std::max_element(row.begin(), row.end());
    radius = std::min(radius, ecc);
    diameter = std::max(diameter, ecc);
  }
  auto [lo, hi] = std::minmax_element(s.transmission.begin(), s.transmission.end());
  for (VertexId v = 0; v < n; ++v) {
    if (s.transmission[v] == *lo) s.median.push_back(v);
    if (s.transmission[v] == *hi) s.antimedian.push_back(v);
  }
  s.proximity = s.average_distance[s.median.front()];
  s.remoteness = s.average_distance[s.antimedian.front()];
  s.radius = radius;
  s.diameter = diameter;
  return s;
}

inline InvariantSummary invariant_summary(const Graph& g, unsigned jobs = 1) {
  return invariant_summary(g, all_pairs_distances(g, jobs));
}

/// ρ ≤ n/2, tight exactly for paths.
inline Rational remoteness_order_bound(std::int64_t n) { return Rational(n, 2); }

/// π ≤ (n+1)/4 for odd n and (n+1)/4 + 1/(4(n-1)) for even n; tight for paths and cycles.
inline Rational proximity_order_bound(std::int64_t n) {
  Rational base(n + 1, 4);
  if (n % 2 == 1) return base;
  return base + Rational(1, 4 * (n - 1));
}

inline Rational remoteness_min_degree_bound(std::int64_t n, std::int64_t delta) {
  return Rational(3 * n, 2 * (delta + 1)) + Rational(7, 2);
}

inline Rational proximity_min_degree_bound(std::int64_t n, std::int64_t delta) {
  return Rational(3 * n, 4 * (delta + 1)) + 3;
}

struct ClassicalBounds {
  Rational remoteness_by_order;
  Rational proximity_by_order;
  Rational remoteness_by_min_degree;
  Rational proximity_by_min_degree;
};

inline ClassicalBounds classical_bounds(std::int64_t n, std::int64_t min_degree) {
  if (n < 2) throw DomainError("classical bounds need n >= 2");
  if (min_degree < 1 || min_degree > n - 1)
    throw DomainError("minimum degree must lie in 1..n-1");
  return {remoteness_order_bound(n), proximity_order_bound(n),
          remoteness_min_degree_bound(n, min_degree), proximity_min_degree_bound(n, min_degree)};
}

}  // namespace proxrem
