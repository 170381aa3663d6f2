#pragma once

// Brute-force machinery that is independent of the closed forms it checks:
// labeled-tree enumeration through Prüfer sequences, exhaustive integer-weight
// sweeps against the weighted-median bounds, seeded random graph corpora, and
// corpus-wide bound checking.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "proxrem/bounds.hpp"
#include "proxrem/errors.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/invariants.hpp"
#include "proxrem/parallel.hpp"
#include "proxrem/rational.hpp"
#include "proxrem/weighted.hpp"

namespace proxrem {

// ---------------------------------------------------------------------------
// Prüfer sequences

using PrueferCode = std::vector<VertexId>;

inline constexpr std::size_t kMaxEnumeratedOrder = 8;

constexpr std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Cayley's formula m^(m-2), with 1 for m <= 2.
constexpr std::uint64_t labeled_tree_count(std::size_t m) { return m <= 2 ? 1 : ipow(m, m - 2); }

/// The index-th sequence of length m-2 over 0..m-1 in lexicographic order.
inline PrueferCode prufer_sequence(std::size_t m, std::uint64_t index) {
  PrueferCode code(m <= 2 ? 0 : m - 2);
  for (std::size_t i = code.size(); i-- > 0;) {
    code[i] = static_cast<VertexId>(index % m);
    index /= m;
  }
  return code;
}

inline Graph prufer_decode(std::size_t m, const PrueferCode& code) {
  if (m == 0) throw DomainError("tree of order 0");
  if (code.size() != (m <= 2 ? 0 : m - 2)) throw DomainError("Pruefer code length must be m - 2");
  if (m == 1) return Graph(1);
  std::vector<std::size_t> degree(m, 1);
  for (VertexId x : code) {
    if (x >= m) throw DomainError("Pruefer code entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(m - 1);
  for (VertexId x : code) {
    VertexId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  VertexId a = 0;
  while (degree[a] != 1) ++a;
  VertexId b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return Graph::from_edges(m, edges);
}

inline PrueferCode prufer_encode(const Graph& tree) {
  if (!is_tree(tree)) throw DomainError("Pruefer encoding needs a tree");
  const auto m = tree.order();
  if (m <= 2) return {};
  std::vector<std::size_t> degree(m);
  std::vector<char> removed(m, 0);
  for (VertexId v = 0; v < m; ++v) degree[v] = tree.degree(v);
  PrueferCode code;
  code.reserve(m - 2);
  for (std::size_t step = 0; step + 2 < m; ++step) {
    VertexId leaf = 0;
    while (removed[leaf] || degree[leaf] != 1) ++leaf;
    removed[leaf] = 1;
    for (VertexId w : tree.neighbors(leaf)) {
      if (!removed[w]) {
        code.push_back(w);
        --degree[w];
        break;
      }
    }
  }
  return code;
}

inline std::string prufer_string(const PrueferCode& code) {
  std::string s = "[";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(code[i]);
  }
  return s + "]";
}

/// Calls fn(index, code, tree) for every labeled tree on m vertices, in code order.
template <class Fn>
void for_each_tree(std::size_t m, Fn&& fn) {
  if (m < 1 || m > kMaxEnumeratedOrder) throw DomainError("tree enumeration supports 1 <= m <= 8");
  const auto count = labeled_tree_count(m);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto code = prufer_sequence(m, i);
    fn(i, code, prufer_decode(m, code));
  }
}

inline std::vector<Graph> enumerate_trees(std::size_t m) {
  std::vector<Graph> out;
  out.reserve(labeled_tree_count(std::clamp<std::size_t>(m, 1, kMaxEnumeratedOrder)));
  for_each_tree(m, [&](std::uint64_t, const PrueferCode&, Graph t) { out.push_back(std::move(t)); });
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic sampling

/// Uniform integer in [0, bound) from the raw 64-bit stream; no dependence on
/// the standard library's distribution implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// G(n, p) conditioned on connectivity by rejection.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    auto g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw DomainError("no connected sample for n = " + std::to_string(n));
}

/// Edge probability for corpus sampling: between the connectivity threshold
/// ln(n)/n and 0.9, skewed toward sparse graphs.
inline double corpus_edge_probability(std::mt19937_64& rng, std::size_t n) {
  const double lo = n <= 2 ? 1.0 : std::min(0.9, std::log(static_cast<double>(n)) / static_cast<double>(n));
  const double u = uniform_unit(rng);
  return lo + (0.9 - lo) * u * u;
}

inline constexpr std::uint64_t kDefaultSeed = 20220210;

/// `count` connected graphs with orders uniform in [2, max_order].
inline std::vector<Graph> random_graph_corpus(std::size_t count, std::size_t max_order, std::uint64_t seed) {
  if (max_order < 2) throw DomainError("random corpus needs max order >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = 2 + static_cast<std::size_t>(uniform_below(rng, max_order - 1));
    out.push_back(random_connected_graph(rng, n, corpus_edge_probability(rng, n)));
  }
  return out;
}

/// Uniform labeled tree on `order` vertices.
inline Graph random_tree(std::mt19937_64& rng, std::size_t order) {
  PrueferCode code(order <= 2 ? 0 : order - 2);
  for (auto& x : code) x = static_cast<VertexId>(uniform_below(rng, order));
  return prufer_decode(order, code);
}

/// Nonnegative rationals p/q with p in [0, 20] and q in [1, 6].
inline WeightFunction random_rational_weights(std::mt19937_64& rng, std::size_t order) {
  std::vector<Rational> w(order);
  for (auto& x : w)
    x = Rational(static_cast<std::int64_t>(uniform_below(rng, 21)), static_cast<std::int64_t>(1 + uniform_below(rng, 6)));
  return WeightFunction(std::move(w));
}

// ---------------------------------------------------------------------------
// Exhaustive sweep of the weighted-median bounds (k = 1, integer weights)

inline constexpr std::size_t kLemmaSweepMaxWeight = 9;
inline constexpr std::size_t kLemmaSweepMaxOrder = 7;
inline constexpr std::uint64_t kInstanceBudget = 100'000'000;

constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of (tree, weight vector) pairs the sweep visits.
constexpr std::uint64_t lemma_sweep_weightings(std::size_t max_weight, std::size_t max_order) {
  std::uint64_t total = 0;
  for (std::size_t m = 1; m <= max_order; ++m)
    for (std::size_t N = m; N <= max_weight; ++N) total += labeled_tree_count(m) * binomial(N - 1, m - 1);
  return total;
}

/// Number of (tree, weights, heavy vertex, L) instances: each weighting
/// contributes Σ_h (c(h) - 1) = N - m choices.
constexpr std::uint64_t lemma_sweep_instances(std::size_t max_weight, std::size_t max_order) {
  std::uint64_t total = 0;
  for (std::size_t m = 1; m <= max_order; ++m)
    for (std::size_t N = m; N <= max_weight; ++N)
      total += labeled_tree_count(m) * binomial(N - 1, m - 1) * (N - m);
  return total;
}

static_assert(lemma_sweep_instances(kLemmaSweepMaxWeight, kLemmaSweepMaxOrder) < kInstanceBudget,
              "default lemma sweep exceeds the instance budget");

/// Observations for one (N, L) pair.
struct LemmaCell {
  std::int64_t total_weight = 0;  // N
  std::int64_t heavy_weight = 0;  // L
  std::uint64_t instances = 0;
  Rational max_median_distance;   // largest σ_c at a c-median
  Rational max_any_distance;      // largest σ_c over all vertices
  Rational proximity_bound;
  Rational remoteness_bound;

  bool heavy_majority() const { return 2 * heavy_weight > total_weight; }
};

struct LemmaViolation {
  std::string kind;  // "median" or "any-vertex"
  std::size_t order = 0;
  PrueferCode code;
  std::vector<std::int64_t> weights;
  VertexId vertex = 0;
  std::int64_t heavy_weight = 0;
  Rational value;
  Rational bound;
};

struct LemmaSweepReport {
  std::size_t max_weight = 0;
  std::size_t max_order = 0;
  std::uint64_t trees = 0;
  std::uint64_t weightings = 0;
  std::uint64_t instances = 0;
  std::vector<LemmaCell> cells;  // ordered by (N, L)
  std::vector<LemmaViolation> violations;

  bool holds() const { return violations.empty(); }
};

/// One weighting of one enumerated tree, with its extreme weighted distances.
struct LemmaObservation {
  std::size_t order = 0;
  std::uint64_t tree_index = 0;
  PrueferCode code;
  std::int64_t total = 0;
  std::vector<std::int64_t> weights;
  Rational median_distance;  // σ_c at a c-median
  Rational max_distance;     // largest σ_c
  VertexId median_vertex = 0;
  VertexId far_vertex = 0;
};

namespace detail {

/// Visits every composition of `total` into `parts` positive integers, lexicographically.
template <class Fn>
void for_each_composition(std::size_t total, std::size_t parts, Fn&& fn) {
  if (parts == 0 || total < parts) return;
  std::vector<std::int64_t> c(parts, 0);
  auto fill = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i + 1 == parts) {
      c[i] = remaining;
      fn(static_cast<const std::vector<std::int64_t>&>(c));
      return;
    }
    const auto rest = static_cast<std::int64_t>(parts - i - 1);
    for (std::int64_t x = 1; x + rest <= remaining; ++x) {
      c[i] = x;
      self(self, i + 1, remaining - x);
    }
  };
  fill(fill, 0, static_cast<std::int64_t>(total));
}

/// Calls fn for every weighting of the index-th tree of order m with total weight m..max_weight.
template <class Fn>
void sweep_tree(std::size_t m, std::uint64_t index, std::size_t max_weight, Fn&& fn) {
  LemmaObservation o;
  o.order = m;
  o.tree_index = index;
  o.code = prufer_sequence(m, index);
  const auto d = all_pairs_distances(prufer_decode(m, o.code));
  for (std::size_t N = m; N <= max_weight; ++N) {
    o.total = static_cast<std::int64_t>(N);
    for_each_composition(N, m, [&](const std::vector<std::int64_t>& w) {
      o.weights = w;
      const WeightFunction c(std::vector<Rational>(w.begin(), w.end()));
      const auto sigma = weighted_distances(d, c);
      const auto [lo_it, hi_it] = std::minmax_element(sigma.begin(), sigma.end());
      o.median_vertex = static_cast<VertexId>(lo_it - sigma.begin());
      o.far_vertex = static_cast<VertexId>(hi_it - sigma.begin());
      o.median_distance = *lo_it;
      o.max_distance = *hi_it;
      fn(static_cast<const LemmaObservation&>(o));
    });
  }
}

struct SweepShard {
  std::uint64_t trees = 0, weightings = 0, instances = 0;
  // cells indexed [N][L]
  std::vector<std::vector<LemmaCell>> cells;
  std::vector<LemmaViolation> violations;
};

inline constexpr std::size_t kMaxRecordedViolations = 32;

}  // namespace detail

inline LemmaSweepReport lemma_sweep(std::size_t max_weight, std::size_t max_order, unsigned jobs = 1) {
  if (max_weight > kLemmaSweepMaxWeight || max_order > kLemmaSweepMaxOrder || max_weight < 1 || max_order < 1)
    throw DomainError("lemma sweep range exceeds the budget (max weight <= 9, max order <= 7)");

  struct Unit {
    std::size_t order;
    std::uint64_t index;
  };
  std::vector<Unit> units;
  for (std::size_t m = 1; m <= std::min(max_order, max_weight); ++m)
    for (std::uint64_t i = 0; i < labeled_tree_count(m); ++i) units.push_back({m, i});

  const std::size_t shard_count = std::min<std::size_t>(units.size(), 256);
  std::vector<detail::SweepShard> shards(shard_count);
  parallel_for(shard_count, jobs, [&](std::size_t s) {
    auto& shard = shards[s];
    shard.cells.assign(max_weight + 1, std::vector<LemmaCell>(max_weight + 1));
    const auto lo = units.size() * s / shard_count, hi = units.size() * (s + 1) / shard_count;
    for (auto u = lo; u < hi; ++u) {
      ++shard.trees;
      detail::sweep_tree(units[u].order, units[u].index, max_weight, [&](const LemmaObservation& o) {
        ++shard.weightings;
        const auto top = *std::max_element(o.weights.begin(), o.weights.end());
        for (std::int64_t L = 2; L <= top; ++L) {
          // every designated vertex with weight >= L is a separate instance
          const auto heavy = std::count_if(o.weights.begin(), o.weights.end(), [&](auto x) { return x >= L; });
          shard.instances += static_cast<std::uint64_t>(heavy);
          auto& cell = shard.cells[static_cast<std::size_t>(o.total)][static_cast<std::size_t>(L)];
          cell.instances += static_cast<std::uint64_t>(heavy);
          cell.max_median_distance = max(cell.max_median_distance, o.median_distance);
          cell.max_any_distance = max(cell.max_any_distance, o.max_distance);
          const auto params = LemmaParams::make(o.total, 1, L);
          const auto pb = lemma_proximity_bound(params);
          const auto rb = lemma_remoteness_bound(params);
          auto record = [&](const char* kind, VertexId v, const Rational& value, const Rational& bound) {
            if (shard.violations.size() < detail::kMaxRecordedViolations)
              shard.violations.push_back({kind, o.order, o.code, o.weights, v, L, value, bound});
          };
          if (o.median_distance > pb) record("median", o.median_vertex, o.median_distance, pb);
          if (o.max_distance > rb) record("any-vertex", o.far_vertex, o.max_distance, rb);
        }
      });
    }
  });

  LemmaSweepReport r;
  r.max_weight = max_weight;
  r.max_order = max_order;
  std::vector<std::vector<LemmaCell>> cells(max_weight + 1, std::vector<LemmaCell>(max_weight + 1));
  for (auto& shard : shards) {
    r.trees += shard.trees;
    r.weightings += shard.weightings;
    r.instances += shard.instances;
    for (std::size_t N = 0; N <= max_weight; ++N)
      for (std::size_t L = 0; L <= max_weight; ++L) {
        auto& dst = cells[N][L];
        const auto& src = shard.cells[N][L];
        dst.instances += src.instances;
        dst.max_median_distance = max(dst.max_median_distance, src.max_median_distance);
        dst.max_any_distance = max(dst.max_any_distance, src.max_any_distance);
      }
    for (auto& v : shard.violations)
      if (r.violations.size() < detail::kMaxRecordedViolations) r.violations.push_back(std::move(v));
  }
  for (std::size_t N = 1; N <= max_weight; ++N)
    for (std::size_t L = 2; L <= N; ++L) {
      auto cell = cells[N][L];
      if (cell.instances == 0) continue;
      cell.total_weight = static_cast<std::int64_t>(N);
      cell.heavy_weight = static_cast<std::int64_t>(L);
      const auto params = LemmaParams::make(cell.total_weight, 1, cell.heavy_weight);
      cell.proximity_bound = lemma_proximity_bound(params);
      cell.remoteness_bound = lemma_remoteness_bound(params);
      r.cells.push_back(cell);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Corpus-wide bound checking

enum class Sampler { exhaustive_trees, random };

struct BoundCheckOptions {
  Sampler sampler = Sampler::exhaustive_trees;
  std::size_t max_order = 7;   // trees: every order 2..max_order; random: orders in [2, max_order]
  std::size_t samples = 500;   // random only
  std::uint64_t seed = kDefaultSeed;
  bool with_chain = true;
  unsigned jobs = 1;
};

struct BoundSlack {
  std::string name;
  Rational min_slack;
  std::size_t argmin = 0;  // corpus index of the tightest graph
};

struct BoundCheckFailure {
  std::size_t index = 0;
  std::string check;
  std::string detail;
  std::string graph;  // edge-list dump
};

struct BoundCheckReport {
  Sampler sampler = Sampler::exhaustive_trees;
  std::size_t max_order = 0;
  std::uint64_t seed = 0;
  std::size_t graphs = 0;
  std::vector<BoundSlack> slacks;
  std::size_t chain_links_checked = 0;
  std::size_t remoteness_order_equalities = 0;          // graphs with ρ = n/2
  std::size_t remoteness_order_equalities_non_path = 0;  // ... that are not paths
  std::size_t paths_not_attaining_remoteness_order = 0;
  std::size_t proximity_order_equalities = 0;
  std::size_t proximity_order_equalities_non_path_cycle = 0;
  std::vector<BoundCheckFailure> failures;

  bool holds() const {
    return failures.empty() && remoteness_order_equalities_non_path == 0 &&
           paths_not_attaining_remoteness_order == 0 && proximity_order_equalities_non_path_cycle == 0;
  }
};

inline bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  return g.order() == 1 || degree_stats(g).max_degree <= 2;
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  const auto s = degree_stats(g);
  return s.min_degree == 2 && s.max_degree == 2;
}

inline std::vector<Graph> bound_check_corpus(const BoundCheckOptions& o) {
  if (o.sampler == Sampler::exhaustive_trees) {
    if (o.max_order < 2 || o.max_order > kMaxEnumeratedOrder)
      throw DomainError("exhaustive tree check supports orders 2..8");
    std::vector<Graph> out;
    for (std::size_t m = 2; m <= o.max_order; ++m)
      for_each_tree(m, [&](std::uint64_t, const PrueferCode&, Graph t) { out.push_back(std::move(t)); });
    return out;
  }
  return random_graph_corpus(o.samples, o.max_order, o.seed);
}

inline BoundCheckReport exhaustive_bound_check(const std::vector<Graph>& corpus, const BoundCheckOptions& o) {
  std::vector<BoundReport> reports(corpus.size());
  parallel_for(corpus.size(), o.jobs, [&](std::size_t i) { reports[i] = bound_report(corpus[i], o.with_chain); });

  BoundCheckReport r;
  r.sampler = o.sampler;
  r.max_order = o.max_order;
  r.seed = o.seed;
  r.graphs = corpus.size();
  auto fail = [&](std::size_t i, std::string check, std::string detail) {
    r.failures.push_back({i, std::move(check), std::move(detail), render_graph(corpus[i])});
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& rep = reports[i];
    const auto& g = corpus[i];
    for (std::size_t b = 0; b < rep.bounds.size(); ++b) {
      const auto& check = rep.bounds[b];
      if (r.slacks.size() <= b) r.slacks.push_back({check.name, check.slack(), i});
      else if (check.slack() < r.slacks[b].min_slack) r.slacks[b] = {check.name, check.slack(), i};
      if (!check.holds) fail(i, check.name, check.actual.str() + " > " + check.bound.str());
    }
    for (const auto* chain : {&rep.trace_invariants, &rep.proximity_chain, &rep.remoteness_chain})
      for (const auto& link : *chain) {
        ++r.chain_links_checked;
        if (!link.holds)
          fail(i, link.name, link.lhs.str() + " " + relation_symbol(link.relation) + " " + link.rhs.str() + " fails");
      }
    const auto n = static_cast<std::int64_t>(g.order());
    const bool path = is_path_graph(g);
    if (rep.remoteness == remoteness_order_bound(n)) {
      ++r.remoteness_order_equalities;
      if (!path) ++r.remoteness_order_equalities_non_path;
    } else if (path) {
      ++r.paths_not_attaining_remoteness_order;
    }
    if (rep.proximity == proximity_order_bound(n)) {
      ++r.proximity_order_equalities;
      if (!path && !is_cycle_graph(g)) ++r.proximity_order_equalities_non_path_cycle;
    }
  }
  return r;
}

inline BoundCheckReport exhaustive_bound_check(const BoundCheckOptions& o) {
  return exhaustive_bound_check(bound_check_corpus(o), o);
}

}  // namespace proxrem
