#pragma once

// JSON and CSV serialization of reports. Rationals are always "p/q" strings.

#include <algorithm>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "proxrem/bounds.hpp"
#include "proxrem/construction.hpp"
#include "proxrem/extremal.hpp"
#include "proxrem/invariants.hpp"
#include "proxrem/oracle.hpp"

namespace proxrem {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

inline Json rationals_json(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.str());
  return a;
}

inline Json to_json(const InvariantSummary& s) {
  Json j;
  j["proximity"] = s.proximity.str();
  j["remoteness"] = s.remoteness.str();
  j["median"] = s.median;
  j["antimedian"] = s.antimedian;
  j["radius"] = s.radius;
  j["diameter"] = s.diameter;
  j["transmission"] = s.transmission;
  j["average_distance"] = rationals_json(s.average_distance);
  return j;
}

inline Json to_json(const ChainLink& l) {
  Json j;
  j["name"] = l.name;
  j["lhs"] = l.lhs.str();
  j["relation"] = relation_symbol(l.relation);
  j["rhs"] = l.rhs.str();
  j["slack"] = l.slack().str();
  j["holds"] = l.holds;
  return j;
}

inline Json to_json(const std::vector<ChainLink>& links) {
  Json a = Json::array();
  for (const auto& l : links) a.push_back(to_json(l));
  return a;
}

inline Json to_json(const BoundCheck& b) {
  Json j;
  j["name"] = b.name;
  j["actual"] = b.actual.str();
  j["bound"] = b.bound.str();
  j["slack"] = b.slack().str();
  j["holds"] = b.holds;
  return j;
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["order"] = r.order;
  j["min_degree"] = r.min_degree;
  j["max_degree"] = r.max_degree;
  j["regime"] = regime_name(r.regime);
  j["proximity"] = r.proximity.str();
  j["remoteness"] = r.remoteness.str();
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  j["bounds"] = std::move(bounds);
  if (!r.proximity_chain.empty() || !r.remoteness_chain.empty()) {
    j["chain"]["trace_invariants"] = to_json(r.trace_invariants);
    j["chain"]["proximity"] = to_json(r.proximity_chain);
    j["chain"]["remoteness"] = to_json(r.remoteness_chain);
  }
  j["holds"] = r.holds();
  return j;
}

/// Golden-file form of a construction trace.
inline Json to_json(const ConstructionTrace& t) {
  Json j;
  j["centers"] = t.centers;
  Json links = Json::array();
  for (auto [x, y] : t.connecting_edges) links.push_back({x, y});
  j["connecting_edges"] = std::move(links);
  j["parent"] = t.tree_parent;
  j["assignment"] = t.nearest_center;
  j["contracted"] = rationals_json(t.contracted.values());
  Json aux = Json::array();
  for (auto [a, b] : t.auxiliary.edges()) aux.push_back({a, b});
  j["auxiliary_edges"] = std::move(aux);
  j["q"] = t.q;
  j["median"] = t.median();
  j["adjusted"] = rationals_json(t.adjusted.values());
  return j;
}

inline Json to_json(const LemmaSweepReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["max_weight"] = r.max_weight;
  j["max_order"] = r.max_order;
  j["trees"] = r.trees;
  j["weightings"] = r.weightings;
  j["instances"] = r.instances;
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json cj;
    cj["N"] = c.total_weight;
    cj["L"] = c.heavy_weight;
    cj["instances"] = c.instances;
    cj["max_median_distance"] = c.max_median_distance.str();
    cj["proximity_bound"] = c.proximity_bound.str();
    cj["max_any_distance"] = c.max_any_distance.str();
    cj["remoteness_bound"] = c.remoteness_bound.str();
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json vj;
    vj["kind"] = v.kind;
    vj["order"] = v.order;
    vj["pruefer"] = v.code;
    vj["weights"] = v.weights;
    vj["vertex"] = v.vertex;
    vj["L"] = v.heavy_weight;
    vj["value"] = v.value.str();
    vj["bound"] = v.bound.str();
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  j["holds"] = r.holds();
  return j;
}

inline void write_lemma_csv(std::ostream& os, const LemmaSweepReport& r) {
  os << "N,L,instances,max_median_distance,proximity_bound,median_slack,max_any_distance,remoteness_bound,"
        "any_slack\n";
  for (const auto& c : r.cells)
    os << c.total_weight << ',' << c.heavy_weight << ',' << c.instances << ',' << c.max_median_distance << ','
       << c.proximity_bound << ',' << (c.proximity_bound - c.max_median_distance) << ',' << c.max_any_distance
       << ',' << c.remoteness_bound << ',' << (c.remoteness_bound - c.max_any_distance) << '\n';
}

/// One row per (tree, weighting, L); the designated vertex does not change σ_c or the bounds.
inline void write_lemma_instances_csv(std::ostream& os, std::size_t max_weight, std::size_t max_order) {
  os << "order,tree_index,pruefer,weights,N,L,median_distance,proximity_bound,proximity_slack,max_distance,"
        "remoteness_bound,remoteness_slack\n";
  for (std::size_t m = 1; m <= std::min(max_order, max_weight); ++m)
    for (std::uint64_t i = 0; i < labeled_tree_count(m); ++i)
      detail::sweep_tree(m, i, max_weight, [&](const LemmaObservation& o) {
        std::string weights;
        for (auto w : o.weights) weights += (weights.empty() ? "" : " ") + std::to_string(w);
        const auto top = *std::max_element(o.weights.begin(), o.weights.end());
        for (std::int64_t L = 2; L <= top; ++L) {
          const auto p = LemmaParams::make(o.total, 1, L);
          const auto pb = lemma_proximity_bound(p), rb = lemma_remoteness_bound(p);
          os << o.order << ',' << o.tree_index << ',' << prufer_string(o.code) << ',' << weights << ',' << o.total
             << ',' << L << ',' << o.median_distance << ',' << pb << ',' << (pb - o.median_distance) << ','
             << o.max_distance << ',' << rb << ',' << (rb - o.max_distance) << '\n';
        }
      });
}

inline Json to_json(const BoundCheckReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["sampler"] = r.sampler == Sampler::random ? "random" : "exhaustive-trees";
  j["max_order"] = r.max_order;
  if (r.sampler == Sampler::random) j["seed"] = r.seed;
  j["graphs"] = r.graphs;
  j["chain_links_checked"] = r.chain_links_checked;
  Json slacks = Json::array();
  for (const auto& s : r.slacks) {
    Json sj;
    sj["name"] = s.name;
    sj["min_slack"] = s.min_slack.str();
    sj["argmin"] = s.argmin;
    slacks.push_back(std::move(sj));
  }
  j["slacks"] = std::move(slacks);
  j["remoteness_order_equalities"] = r.remoteness_order_equalities;
  j["remoteness_order_equalities_non_path"] = r.remoteness_order_equalities_non_path;
  j["paths_not_attaining_remoteness_order"] = r.paths_not_attaining_remoteness_order;
  j["proximity_order_equalities"] = r.proximity_order_equalities;
  j["proximity_order_equalities_non_path_cycle"] = r.proximity_order_equalities_non_path_cycle;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json fj;
    fj["index"] = f.index;
    fj["check"] = f.check;
    fj["detail"] = f.detail;
    fj["graph"] = f.graph;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["holds"] = r.holds();
  return j;
}

inline constexpr const char* kGapCsvHeader = "n,delta,Delta,case,pi,pi_bound,gap_pi,rho,rho_bound,gap_rho,holds";

inline void write_gap_row(std::ostream& os, const GapRecord& g) {
  os << g.n << ',' << g.min_degree << ',' << g.max_degree << ',' << g.regime() << ',' << g.proximity << ','
     << g.proximity_bound << ',' << g.proximity_gap << ',' << g.remoteness << ',' << g.remoteness_bound << ','
     << g.remoteness_gap << ',' << (g.holds() ? "true" : "false") << '\n';
}

}  // namespace proxrem
