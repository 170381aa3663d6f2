#pragma once

// Closed-form max-degree bounds on proximity and remoteness, exact
// certification of the inequality chains that prove them on a concrete
// construction trace, and a per-graph report of every applicable bound.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "proxrem/construction.hpp"
#include "proxrem/errors.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/invariants.hpp"
#include "proxrem/rational.hpp"
#include "proxrem/weighted.hpp"

namespace proxrem {

enum class DegreeRegime { large_max_degree, small_max_degree };

inline const char* regime_name(DegreeRegime r) {
  return r == DegreeRegime::large_max_degree ? "large-Delta" : "small-Delta";
}

/// Δ > n/2 - 1 selects the large-Δ proximity formula.
inline DegreeRegime degree_regime(std::int64_t n, std::int64_t max_degree) {
  return 2 * max_degree + 2 > n ? DegreeRegime::large_max_degree : DegreeRegime::small_max_degree;
}

struct TheoremBounds {
  Rational proximity;
  Rational remoteness;
  DegreeRegime regime;
};

inline Rational proximity_max_degree_bound(std::int64_t n, std::int64_t delta, std::int64_t Delta) {
  const std::int64_t denom = (n - 1) * (delta + 1);
  if (degree_regime(n, Delta) == DegreeRegime::large_max_degree)
    return Rational(3 * (n - Delta) * (n - Delta), 2 * denom) + Rational(13, 2);
  return Rational(3 * (n * n - 2 * Delta * Delta), 4 * denom) + Rational(35, 4);
}

inline Rational remoteness_max_degree_bound(std::int64_t n, std::int64_t delta, std::int64_t Delta) {
  return Rational(3 * (n * n - Delta * Delta), 2 * (n - 1) * (delta + 1)) + 7;
}

inline TheoremBounds theorem_bounds(std::int64_t n, std::int64_t delta, std::int64_t Delta) {
  if (n < 2 || delta < 1 || Delta < delta || Delta > n - 1)
    throw DomainError("need n >= 2 and 1 <= delta <= Delta <= n-1");
  return {proximity_max_degree_bound(n, delta, Delta), remoteness_max_degree_bound(n, delta, Delta),
          degree_regime(n, Delta)};
}

namespace detail {

struct ChainContext {
  std::int64_t n, delta, Delta;
  DistanceMatrix graph_d, tree_d, aux_d;
  WeightFunction c_tree;  // c spread over V(T)
  InvariantSummary graph_summary, tree_summary;
  std::vector<std::size_t> position;

  ChainContext(const Graph& g, const ConstructionTrace& t, unsigned jobs)
      : n(static_cast<std::int64_t>(g.order())),
        delta(static_cast<std::int64_t>(t.min_degree)),
        Delta(static_cast<std::int64_t>(t.max_degree)),
        graph_d(all_pairs_distances(g, jobs)),
        tree_d(all_pairs_distances(t.tree, jobs)),
        aux_d(all_pairs_distances(t.auxiliary)),
        c_tree(t.contracted_on_tree()),
        graph_summary(invariant_summary(g, graph_d)),
        tree_summary(invariant_summary(t.tree, tree_d)),
        position(t.positions()) {}
};

}  // namespace detail

inline std::vector<ChainLink> certify_proximity_chain(const Graph& g, const ConstructionTrace& t,
                                                      unsigned jobs = 1) {
  const detail::ChainContext ctx(g, t, jobs);
  const auto [n, delta, Delta] = std::tuple{ctx.n, ctx.delta, ctx.Delta};
  const auto w0 = t.median();
  const auto w0_aux = static_cast<VertexId>(t.median_position);
  const Rational N = n + t.q, L = Delta + 1, k = delta + 1;
  std::vector<ChainLink> out;

  const Rational sigma_tree = transmission(ctx.tree_d, w0);
  const Rational sigma_c_tree = weighted_distance(ctx.tree_d, ctx.c_tree, w0);
  const Rational sigma_c_aux = weighted_distance(ctx.aux_d, t.contracted, w0_aux);
  const Rational sigma_adj_aux = weighted_distance(ctx.aux_d, t.adjusted, w0_aux);
  auto adj_all = weighted_distances(ctx.aux_d, t.adjusted);
  const Rational min_adj = *std::min_element(adj_all.begin(), adj_all.end());

  out.push_back(make_link("sigma(w0,T) <= sigma_c(w0,T) + 2(n-1)", sigma_tree, sigma_c_tree + 2 * (n - 1)));
  out.push_back(make_link("sigma_c(w0,T) <= 3 sigma_c(w0,F)", sigma_c_tree, sigma_c_aux * 3));
  out.push_back(make_link("sigma_c(w0,F) <= sigma_c'(w0,F)", sigma_c_aux, sigma_adj_aux));
  out.push_back(make_link("w0 is a c'-median of F", sigma_adj_aux, min_adj, Relation::eq));

  const bool heavy = L * 2 > N;
  const Rational lemma = heavy ? heavy_median_formula(N, L, k) : light_median_formula(N, L, k);
  out.push_back(make_link(std::string("sigma_c'(w0,F) <= ") + (heavy ? "heavy" : "light") +
                              " median bound at (n+q, Delta+1, delta+1)",
                          sigma_adj_aux, lemma));

  // Regime decided by Δ+1 > n/2 instead of by N = n+q. Checked on the actual value:
  // the formula-level step f2 <= f1 fails when |N - 2L| < 2 sqrt(kL).
  const bool heavy_merged = L * 2 > Rational(n);
  auto regime_formula = [&](const Rational& total) {
    return heavy_merged ? heavy_median_formula(total, L, k) : light_median_formula(total, L, k);
  };
  const Rational at_q = regime_formula(N);
  out.push_back(make_link(std::string("sigma_c'(w0,F) <= ") + (heavy_merged ? "heavy" : "light") +
                              " median bound at n+q, regime by Delta+1 > n/2",
                          sigma_adj_aux, at_q));
  const Rational merged = regime_formula(Rational(n + delta));
  out.push_back(make_link("regime bound at n+q <= merged bound at n+delta", at_q, merged));

  const auto regime = degree_regime(n, Delta);
  const Rational case_bound =
      regime == DegreeRegime::large_max_degree
          ? Rational((n - Delta) * (n - Delta), 2 * (delta + 1)) + Rational(3 * (n - 1), 2)
          : Rational(n * n - 2 * Delta * Delta, 4 * (delta + 1)) + Rational(9 * (n - 1), 4);
  out.push_back(make_link(std::string("merged bound <= ") + regime_name(regime) + " bound on sigma_c(w0,F)",
                          merged, case_bound));

  const Rational theorem = proximity_max_degree_bound(n, delta, Delta);
  const Rational assembled = case_bound * 3 + 2 * (n - 1);
  out.push_back(make_link("3 * case bound + 2(n-1) == (n-1) * proximity bound", assembled, theorem * (n - 1),
                          Relation::eq));
  out.push_back(make_link("sigma(w0,T) <= (n-1) * proximity bound", sigma_tree, theorem * (n - 1)));

  out.push_back(make_link("pi(G) <= pi(T)", ctx.graph_summary.proximity, ctx.tree_summary.proximity));
  out.push_back(make_link("pi(T) <= sigma(w0,T)/(n-1)", ctx.tree_summary.proximity, sigma_tree / (n - 1)));
  out.push_back(make_link("sigma(w0,T)/(n-1) <= proximity bound", sigma_tree / (n - 1), theorem));
  return out;
}

inline std::vector<ChainLink> certify_remoteness_chain(const Graph& g, const ConstructionTrace& t,
                                                       unsigned jobs = 1) {
  const detail::ChainContext ctx(g, t, jobs);
  const auto [n, delta, Delta] = std::tuple{ctx.n, ctx.delta, ctx.Delta};
  const Rational N = n + t.q, L = Delta + 1, k = delta + 1;
  std::vector<ChainLink> out;

  const VertexId u = ctx.tree_summary.antimedian.front();
  const VertexId u_b = t.nearest_center[u];
  const auto u_b_aux = static_cast<VertexId>(ctx.position[u_b]);

  const Rational sigma_u = transmission(ctx.tree_d, u);
  const Rational sigma_ub = transmission(ctx.tree_d, u_b);
  const Rational sigma_c_tree = weighted_distance(ctx.tree_d, ctx.c_tree, u_b);
  const Rational sigma_c_aux = weighted_distance(ctx.aux_d, t.contracted, u_b_aux);
  const Rational sigma_adj_aux = weighted_distance(ctx.aux_d, t.adjusted, u_b_aux);

  out.push_back(make_link("d_T(u,u_B) <= 2", static_cast<std::int64_t>(ctx.tree_d(u, u_b)), 2));
  out.push_back(make_link("sigma(u,T) <= sigma(u_B,T) + 2(n-1)", sigma_u, sigma_ub + 2 * (n - 1)));
  out.push_back(make_link("sigma(u_B,T) <= sigma_c(u_B,T) + 2(n-1)", sigma_ub, sigma_c_tree + 2 * (n - 1)));
  out.push_back(make_link("sigma_c(u_B,T) <= 3 sigma_c(u_B,F)", sigma_c_tree, sigma_c_aux * 3));
  out.push_back(make_link("sigma_c(u_B,F) <= sigma_c'(u_B,F)", sigma_c_aux, sigma_adj_aux));

  const Rational lemma = any_vertex_formula(N, L, k);
  out.push_back(make_link("sigma_c'(u_B,F) <= any-vertex bound at (n+q, Delta+1, delta+1)", sigma_adj_aux, lemma));
  const Rational raised = any_vertex_formula(Rational(n + delta), L, k);
  out.push_back(make_link("any-vertex bound at n+q <= at n+delta", lemma, raised));
  const Rational case_bound = Rational(n * n - Delta * Delta, 2 * (delta + 1)) + (n - 1);
  out.push_back(make_link("bound at n+delta < (n^2-Delta^2)/(2(delta+1)) + n-1", raised, case_bound, Relation::lt));

  const Rational corollary = remoteness_max_degree_bound(n, delta, Delta);
  const Rational assembled = case_bound * 3 + 4 * (n - 1);
  out.push_back(make_link("3 * case bound + 4(n-1) == (n-1) * remoteness bound", assembled, corollary * (n - 1),
                          Relation::eq));
  out.push_back(make_link("sigma(u,T) <= (n-1) * remoteness bound", sigma_u, corollary * (n - 1)));

  out.push_back(make_link("rho(G) <= rho(T)", ctx.graph_summary.remoteness, ctx.tree_summary.remoteness));
  out.push_back(make_link("rho(T) <= remoteness bound", ctx.tree_summary.remoteness, corollary));
  return out;
}

/// One bound evaluated against the actual invariant value.
struct BoundCheck {
  std::string name;
  Rational actual;
  Rational bound;
  bool holds = false;

  Rational slack() const { return bound - actual; }
};

struct BoundReport {
  std::int64_t order = 0;
  std::int64_t min_degree = 0;
  std::int64_t max_degree = 0;
  DegreeRegime regime = DegreeRegime::small_max_degree;
  Rational proximity;
  Rational remoteness;
  std::vector<BoundCheck> bounds;
  std::vector<ChainLink> trace_invariants;  // empty unless the chain was requested
  std::vector<ChainLink> proximity_chain;
  std::vector<ChainLink> remoteness_chain;

  bool holds() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.holds; }) &&
           all_hold(trace_invariants) && all_hold(proximity_chain) && all_hold(remoteness_chain);
  }
};

inline BoundCheck make_bound_check(std::string name, Rational actual, Rational bound) {
  return {std::move(name), actual, bound, actual <= bound};
}

/// Evaluates every applicable bound on a connected graph; with_chain also builds
/// the construction trace and certifies both inequality chains on it.
inline BoundReport bound_report(const Graph& g, const InvariantSummary& summary, bool with_chain, unsigned jobs = 1) {
  const auto stats = degree_stats(g);
  BoundReport r;
  r.order = static_cast<std::int64_t>(g.order());
  r.min_degree = static_cast<std::int64_t>(stats.min_degree);
  r.max_degree = static_cast<std::int64_t>(stats.max_degree);
  r.regime = degree_regime(r.order, r.max_degree);
  r.proximity = summary.proximity;
  r.remoteness = summary.remoteness;

  const auto classical = classical_bounds(r.order, r.min_degree);
  const auto theorem = theorem_bounds(r.order, r.min_degree, r.max_degree);
  r.bounds.push_back(make_bound_check("remoteness_order", r.remoteness, classical.remoteness_by_order));
  r.bounds.push_back(make_bound_check("proximity_order", r.proximity, classical.proximity_by_order));
  r.bounds.push_back(make_bound_check("remoteness_min_degree", r.remoteness, classical.remoteness_by_min_degree));
  r.bounds.push_back(make_bound_check("proximity_min_degree", r.proximity, classical.proximity_by_min_degree));
  r.bounds.push_back(make_bound_check("proximity_max_degree", r.proximity, theorem.proximity));
  r.bounds.push_back(make_bound_check("remoteness_max_degree", r.remoteness, theorem.remoteness));

  if (with_chain) {
    const auto trace = build_construction(g, jobs);
    r.trace_invariants = check_trace_invariants(g, trace, jobs);
    r.proximity_chain = certify_proximity_chain(g, trace, jobs);
    r.remoteness_chain = certify_remoteness_chain(g, trace, jobs);
  }
  return r;
}

inline BoundReport bound_report(const Graph& g, bool with_chain, unsigned jobs = 1) {
  if (g.order() < 2) throw DomainError("bounds need at least two vertices");
  if (!is_connected(g)) throw DomainError("graph is not connected");
  return bound_report(g, invariant_summary(g, jobs), with_chain, jobs);
}

}  // namespace proxrem
