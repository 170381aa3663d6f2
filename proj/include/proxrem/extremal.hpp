#pragma once

// Sequential sums of complete graphs and the near-extremal family
//   K_δ + K_1 + [K_1 + K_{δ-1} + K_1]^{k-1} + K_1 + K_{Δ-1},  k = (n-Δ)/(δ+1),
// together with the gap between its proximity/remoteness and the max-degree bounds.

#include <cstdint>
#include <string>
#include <vector>

#include "proxrem/bounds.hpp"
#include "proxrem/errors.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/invariants.hpp"
#include "proxrem/rational.hpp"

namespace proxrem {

/// Block sizes of a sequential sum of complete graphs, left to right.
struct SequentialSumSpec {
  std::vector<std::size_t> blocks;
};

/// Disjoint complete blocks, every vertex of block i joined to every vertex of
/// block i+1. Vertices are numbered block by block.
inline Graph sequential_sum(const SequentialSumSpec& spec) {
  if (spec.blocks.empty()) throw DomainError("sequential sum of no blocks");
  std::vector<std::size_t> start;
  std::size_t n = 0;
  for (auto size : spec.blocks) {
    if (size == 0) throw DomainError("sequential sum block of size 0");
    start.push_back(n);
    n += size;
  }
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    const auto lo = start[b], hi = start[b] + spec.blocks[b];
    for (auto u = lo; u < hi; ++u)
      for (auto v = u + 1; v < hi; ++v) edges.emplace_back(u, v);
    if (b + 1 < spec.blocks.size()) {
      const auto nlo = hi, nhi = hi + spec.blocks[b + 1];
      for (auto u = lo; u < hi; ++u)
        for (auto v = nlo; v < nhi; ++v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

class ExtremalParams {
 public:
  /// Requires 3 <= δ < Δ < n and δ + 1 dividing n - Δ.
  static ExtremalParams make(std::int64_t n, std::int64_t min_degree, std::int64_t max_degree) {
    if (min_degree < 3) throw DomainError("the extremal family needs min degree >= 3");
    if (!(min_degree < max_degree)) throw DomainError("the extremal family needs delta < Delta");
    if (!(max_degree < n)) throw DomainError("the extremal family needs Delta < n");
    if ((n - max_degree) % (min_degree + 1) != 0)
      throw DomainError("n - Delta = " + std::to_string(n - max_degree) + " is not a multiple of delta + 1 = " +
                        std::to_string(min_degree + 1) + "; nearest valid n: " +
                        std::to_string(nearest_valid_order(n, min_degree, max_degree)));
    ExtremalParams p;
    p.n_ = n;
    p.delta_ = min_degree;
    p.Delta_ = max_degree;
    return p;
  }

  /// Closest order n' > Δ with δ + 1 dividing n' - Δ (the smaller one on ties).
  static std::int64_t nearest_valid_order(std::int64_t n, std::int64_t min_degree, std::int64_t max_degree) {
    const std::int64_t m = min_degree + 1;
    const std::int64_t r = ((n - max_degree) % m + m) % m;
    std::int64_t down = n - r, up = n - r + m;
    if (down <= max_degree) return up;
    return (n - down <= up - n) ? down : up;
  }

  std::int64_t order() const noexcept { return n_; }
  std::int64_t min_degree() const noexcept { return delta_; }
  std::int64_t max_degree() const noexcept { return Delta_; }
  /// Number of (δ+1)-vertex layers before the final Δ-vertex layer.
  std::int64_t layers() const noexcept { return (n_ - Delta_) / (delta_ + 1); }

 private:
  ExtremalParams() = default;
  std::int64_t n_ = 0, delta_ = 0, Delta_ = 0;
};

inline SequentialSumSpec extremal_blocks(const ExtremalParams& p) {
  const auto delta = static_cast<std::size_t>(p.min_degree());
  SequentialSumSpec spec;
  spec.blocks = {delta, 1};
  for (std::int64_t i = 1; i < p.layers(); ++i) spec.blocks.insert(spec.blocks.end(), {1, delta - 1, 1});
  spec.blocks.insert(spec.blocks.end(), {1, static_cast<std::size_t>(p.max_degree()) - 1});
  return spec;
}

inline Graph extremal_graph(const ExtremalParams& p) { return sequential_sum(extremal_blocks(p)); }

/// Layer index (0-based) of every vertex: layers 0..k-1 hold δ+1 vertices each,
/// layer k holds the final Δ vertices.
inline std::vector<std::size_t> extremal_layers(const ExtremalParams& p) {
  const auto width = static_cast<std::size_t>(p.min_degree() + 1);
  const auto k = static_cast<std::size_t>(p.layers());
  std::vector<std::size_t> layer(static_cast<std::size_t>(p.order()));
  for (std::size_t v = 0; v < layer.size(); ++v) layer[v] = std::min(v / width, k);
  return layer;
}

struct GapRecord {
  std::int64_t n = 0, min_degree = 0, max_degree = 0;
  bool max_degree_at_most_half = false;   // Δ <= n/2
  bool max_degree_at_least_half = false;  // Δ >= n/2
  Rational proximity, proximity_bound, proximity_gap;
  Rational remoteness, remoteness_bound, remoteness_gap;
  bool proximity_gap_ok = false;
  bool remoteness_gap_ok = false;

  /// Label of the proximity gap regime: "small-Delta", "large-Delta" or "both" at Δ = n/2.
  std::string regime() const {
    if (max_degree_at_most_half && max_degree_at_least_half) return "both";
    return max_degree_at_most_half ? "small-Delta" : "large-Delta";
  }
  bool holds() const { return proximity_gap_ok && remoteness_gap_ok; }
};

inline const Rational kSmallDegreeProximityGap{49, 4};
inline const Rational kRemotenessGap{17, 2};
inline Rational large_degree_proximity_gap(std::int64_t min_degree) { return Rational(6 * min_degree) + Rational(5, 2); }

/// Brute-force π and ρ of the family member against the max-degree bounds.
inline GapRecord sharpness_report(const ExtremalParams& p, unsigned jobs = 1) {
  const auto g = extremal_graph(p);
  const auto summary = invariant_summary(g, jobs);
  const auto bounds = theorem_bounds(p.order(), p.min_degree(), p.max_degree());
  GapRecord r;
  r.n = p.order();
  r.min_degree = p.min_degree();
  r.max_degree = p.max_degree();
  r.max_degree_at_most_half = 2 * r.max_degree <= r.n;
  r.max_degree_at_least_half = 2 * r.max_degree >= r.n;
  r.proximity = summary.proximity;
  r.proximity_bound = bounds.proximity;
  r.proximity_gap = bounds.proximity - summary.proximity;
  r.remoteness = summary.remoteness;
  r.remoteness_bound = bounds.remoteness;
  r.remoteness_gap = bounds.remoteness - summary.remoteness;
  r.proximity_gap_ok = true;
  if (r.max_degree_at_most_half) r.proximity_gap_ok = r.proximity_gap_ok && r.proximity_gap < kSmallDegreeProximityGap;
  if (r.max_degree_at_least_half)
    r.proximity_gap_ok = r.proximity_gap_ok && r.proximity_gap < large_degree_proximity_gap(r.min_degree);
  r.remoteness_gap_ok = r.remoteness_gap <= kRemotenessGap;
  return r;
}

/// Every valid (n, Δ) with n in [n_min, n_max] for fixed δ, ordered by n then Δ.
inline std::vector<ExtremalParams> extremal_parameter_grid(std::int64_t min_degree, std::int64_t n_min,
                                                           std::int64_t n_max) {
  std::vector<ExtremalParams> out;
  for (std::int64_t n = n_min; n <= n_max; ++n)
    for (std::int64_t Delta = min_degree + 1; Delta < n; ++Delta)
      if ((n - Delta) % (min_degree + 1) == 0) out.push_back(ExtremalParams::make(n, min_degree, Delta));
  return out;
}

inline std::vector<GapRecord> sharpness_sweep(std::int64_t min_degree, std::int64_t n_min, std::int64_t n_max,
                                              unsigned jobs = 1) {
  const auto grid = extremal_parameter_grid(min_degree, n_min, n_max);
  std::vector<GapRecord> out(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) { out[i] = sharpness_report(grid[i]); });
  return out;
}

}  // namespace proxrem
