// Acceptance gate: one PASS/FAIL line per criterion, each with its runtime limit.
// Usage: acceptance [--jobs N]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "proxrem/proxrem.hpp"
#include "proxrem/report.hpp"

using namespace proxrem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<Graph> acceptance_corpus() {
  auto corpus = random_graph_corpus(500, 60, kDefaultSeed);
  for (std::size_t m = 2; m <= 7; ++m)
    for_each_tree(m, [&](std::uint64_t, const PrueferCode&, Graph t) { corpus.push_back(std::move(t)); });
  return corpus;
}

Outcome path_cycle_exactness() {
  Outcome o;
  for (std::int64_t n = 2; n <= 100; ++n) {
    const auto p = invariant_summary(path_graph(static_cast<std::size_t>(n)));
    o.require(p.remoteness == Rational(n, 2), "rho(P_" + std::to_string(n) + ") = " + p.remoteness.str());
    o.require(p.proximity == proximity_order_bound(n), "pi(P_" + std::to_string(n) + ") = " + p.proximity.str());
    if (n >= 3) {
      const auto c = invariant_summary(cycle_graph(static_cast<std::size_t>(n)));
      o.require(c.proximity == proximity_order_bound(n), "pi(C_" + std::to_string(n) + ") = " + c.proximity.str());
    }
  }
  return o;
}

Outcome lemma_oracle(unsigned jobs, std::string* serialized) {
  Outcome o;
  const auto r = lemma_sweep(kLemmaSweepMaxWeight, kLemmaSweepMaxOrder, jobs);
  o.require(r.holds(), std::to_string(r.violations.size()) + " violation(s)");
  o.require(r.instances == lemma_sweep_instances(kLemmaSweepMaxWeight, kLemmaSweepMaxOrder),
            "instance count differs from the closed form");
  std::size_t heavy_cells = 0;
  for (const auto& c : r.cells) {
    if (!c.heavy_majority()) continue;
    ++heavy_cells;
    const auto gap = c.total_weight - c.heavy_weight;
    const Rational expected(gap * (gap + 1), 2);
    o.require(c.max_median_distance == expected, "N=" + std::to_string(c.total_weight) + " L=" +
                                                     std::to_string(c.heavy_weight) + ": observed " +
                                                     c.max_median_distance.str() + ", expected " + expected.str());
  }
  o.require(heavy_cells > 0, "no cells with L > N/2");
  if (o.ok) o.detail = std::to_string(r.instances) + " instances, " + std::to_string(heavy_cells) + " tight cells";
  if (serialized) *serialized = to_json(r).dump();
  return o;
}

Outcome witness_tightness() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  int checked = 0;
  while (checked < 50) {
    // k = a/b, light count m, heavy weight L = k + extra/b with extra > 0.
    const Rational k(static_cast<std::int64_t>(1 + uniform_below(rng, 6)),
                     static_cast<std::int64_t>(1 + uniform_below(rng, 4)));
    const auto m = static_cast<std::int64_t>(uniform_below(rng, 12));
    const Rational L = k + Rational(static_cast<std::int64_t>(1 + uniform_below(rng, 60)),
                                    static_cast<std::int64_t>(1 + uniform_below(rng, 4)));
    const Rational N = L + Rational(m) * k;
    const auto p = LemmaParams::make(N, k, L);
    const auto tag = "N=" + N.str() + " L=" + L.str() + " k=" + k.str();

    const auto rem = extremal_witness_path(p, WitnessMode::remoteness);
    const auto rem_value = weighted_distance(all_pairs_distances(rem.tree), rem.weights, rem.vertex);
    o.require(rem_value == lemma_remoteness_bound(p), "remoteness witness " + tag + ": " + rem_value.str());
    if (p.heavy_majority()) {
      const auto prox = extremal_witness_path(p, WitnessMode::proximity);
      const auto d = all_pairs_distances(prox.tree);
      const auto value = weighted_distance(d, prox.weights, prox.vertex);
      o.require(value == lemma_proximity_bound(p), "proximity witness " + tag + ": " + value.str());
      const auto median = c_median(d, prox.weights);
      o.require(std::find(median.begin(), median.end(), prox.vertex) != median.end(),
                "proximity witness vertex is not a weighted median: " + tag);
    } else {
      continue;  // only triples valid for both witnesses count
    }
    ++checked;
  }
  return o;
}

struct CorpusResult {
  Outcome chains;
  Outcome domination;
  std::string serialized;
};

Outcome construction_invariants(const std::vector<Graph>& corpus, unsigned jobs, std::string* serialized) {
  Outcome o;
  std::vector<BoundReport> reports(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { reports[i] = bound_report(corpus[i], true); });
  std::size_t links = 0;
  Json all = Json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& r = reports[i];
    for (const auto* chain : {&r.trace_invariants, &r.proximity_chain, &r.remoteness_chain})
      for (const auto& l : *chain) {
        ++links;
        o.require(l.holds, "graph " + std::to_string(i) + ": " + l.name + " (" + l.lhs.str() + " " +
                               relation_symbol(l.relation) + " " + l.rhs.str() + ")");
      }
    o.require(!r.trace_invariants.empty() && !r.proximity_chain.empty() && !r.remoteness_chain.empty(),
              "graph " + std::to_string(i) + ": empty certificate");
    if (serialized) all.push_back(to_json(r));
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(links) + " links";
  if (serialized) *serialized = all.dump();
  return o;
}

Outcome theorem_domination(const std::vector<Graph>& corpus, unsigned jobs) {
  Outcome o;
  std::vector<BoundReport> reports(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t i) { reports[i] = bound_report(corpus[i], false); });
  Rational tightest_pi(1000), tightest_rho(1000);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (const auto& b : reports[i].bounds) {
      if (b.name != "proximity_max_degree" && b.name != "remoteness_max_degree") continue;
      o.require(b.holds, "graph " + std::to_string(i) + ": " + b.name + " " + b.actual.str() + " > " + b.bound.str());
      auto& tightest = b.name == "proximity_max_degree" ? tightest_pi : tightest_rho;
      tightest = min(tightest, b.slack());
    }
  if (o.ok) o.detail = "min slack pi " + tightest_pi.str() + ", rho " + tightest_rho.str();
  return o;
}

Outcome sharpness_gaps(unsigned jobs, std::string* serialized) {
  Outcome o;
  const auto rows = sharpness_sweep(3, 16, 120, jobs);
  Rational worst_small, worst_large, worst_rho;
  std::ostringstream csv;
  csv << kGapCsvHeader << '\n';
  for (const auto& r : rows) {
    write_gap_row(csv, r);
    const auto tag = "(n=" + std::to_string(r.n) + ", Delta=" + std::to_string(r.max_degree) + ")";
    if (r.max_degree_at_most_half) {
      o.require(r.proximity_gap < kSmallDegreeProximityGap, "gap_pi " + r.proximity_gap.str() + " at " + tag);
      worst_small = max(worst_small, r.proximity_gap);
    }
    if (r.max_degree_at_least_half) {
      o.require(r.proximity_gap < large_degree_proximity_gap(3), "gap_pi " + r.proximity_gap.str() + " at " + tag);
      worst_large = max(worst_large, r.proximity_gap);
    }
    o.require(r.remoteness_gap <= kRemotenessGap, "gap_rho " + r.remoteness_gap.str() + " at " + tag);
    worst_rho = max(worst_rho, r.remoteness_gap);
  }
  o.require(!rows.empty(), "empty sweep");
  if (o.ok) {
    std::ostringstream d;
    d << rows.size() << " graphs, max gap_pi " << worst_small << " (Delta<=n/2), " << worst_large
      << " (Delta>=n/2), max gap_rho " << worst_rho;
    o.detail = d.str();
  }
  if (serialized) *serialized = csv.str();
  return o;
}

Outcome branch_weight_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 1000; ++i) {
    const auto n = 1 + static_cast<std::size_t>(uniform_below(rng, 12));
    const auto t = random_tree(rng, n);
    const auto c = random_rational_weights(rng, n);
    o.require(median_by_branch_weight(t, c) == c_median(all_pairs_distances(t), c),
              "tree " + std::to_string(i) + ": sets differ");
  }
  return o;
}

Outcome determinism(const std::vector<Graph>& corpus, unsigned jobs) {
  Outcome o;
  std::string a, b;
  lemma_oracle(1, &a);
  lemma_oracle(jobs, &b);
  o.require(a == b, "lemma sweep reports differ");
  construction_invariants(corpus, 1, &a);
  construction_invariants(corpus, jobs, &b);
  o.require(a == b, "construction reports differ");
  sharpness_gaps(1, &a);
  sharpness_gaps(jobs, &b);
  o.require(a == b, "sharpness reports differ");
  BoundCheckOptions opt;
  opt.sampler = Sampler::random;
  opt.samples = 500;
  opt.max_order = 60;
  opt.jobs = 1;
  a = to_json(exhaustive_bound_check(opt)).dump();
  opt.jobs = jobs;
  b = to_json(exhaustive_bound_check(opt)).dump();
  o.require(a == b, "bound-check reports differ");
  if (o.ok) o.detail = "--jobs 1 vs --jobs " + std::to_string(jobs);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--jobs" && i + 1 < argc) {
      jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
    } else {
      std::cerr << "usage: acceptance [--jobs N]\n";
      return 2;
    }
  }

  const auto corpus = acceptance_corpus();
  const std::vector<Criterion> criteria{
      {1, "path/cycle exactness", 5, path_cycle_exactness},
      {2, "weighted-median lemma oracle", 300, [&] { return lemma_oracle(jobs, nullptr); }},
      {3, "witness path tightness", 1, witness_tightness},
      {4, "construction invariants and chains", 120, [&] { return construction_invariants(corpus, jobs, nullptr); }},
      {5, "max-degree bound domination", 60, [&] { return theorem_domination(corpus, jobs); }},
      {6, "sharpness gaps (delta=3, 16<=n<=120)", 180, [&] { return sharpness_gaps(jobs, nullptr); }},
      {7, "branch-weight median equivalence", 30, branch_weight_equivalence},
      {8, "determinism across --jobs", 600, [&] { return determinism(corpus, 8); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << std::fixed
              << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << c.limit_seconds << " s)";
    if (!in_time) std::cout << " over time limit";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed")
            << " (jobs " << jobs << ")\n";
  return failures == 0 ? 0 : 1;
}
