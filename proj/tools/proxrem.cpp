// proxrem: command-line front end.
// Exit codes: 0 success, 1 a checked claim failed (counterexample), 2 usage or input error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "proxrem/proxrem.hpp"
#include "proxrem/report.hpp"

namespace fs = std::filesystem;
using namespace proxrem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitInput = 2;

/// Input or usage problem; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_connected_graph(const std::string& path) {
  auto g = parse_graph(read_text(path));
  if (g.order() < 2) throw InputError("graph must have at least 2 vertices");
  if (!is_connected(g)) throw InputError("graph is disconnected");
  return g;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json input_descriptor(const std::string& path, const Graph& g) {
  Json j;
  j["path"] = path;
  j["order"] = g.order();
  j["size"] = g.size();
  const auto s = degree_stats(g);
  j["min_degree"] = s.min_degree;
  j["max_degree"] = s.max_degree;
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string input;
  std::string format = "json";
  std::string weights;
  unsigned jobs = 1;
  bool timings = false;
};

int run_compute(const ComputeArgs& a) {
  Stopwatch clock;
  const auto g = load_connected_graph(a.input);
  const auto d = all_pairs_distances(g, a.jobs);
  const auto s = invariant_summary(g, d);
  std::optional<WeightFunction> c;
  if (!a.weights.empty()) c = parse_weights(read_text(a.weights), g.order());

  if (a.format == "text") {
    auto list = [](const std::vector<VertexId>& v) {
      std::string out;
      for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
      return out;
    };
    std::cout << "order " << g.order() << "\nsize " << g.size() << "\nproximity " << s.proximity << "\nremoteness "
              << s.remoteness << "\nmedian " << list(s.median) << "\nantimedian " << list(s.antimedian)
              << "\nradius " << s.radius << "\ndiameter " << s.diameter << '\n';
    for (VertexId v = 0; v < g.order(); ++v) std::cout << "transmission " << v << ' ' << s.transmission[v] << '\n';
    if (c) {
      const auto sigma = weighted_distances(d, *c);
      for (VertexId v = 0; v < g.order(); ++v) std::cout << "weighted_distance " << v << ' ' << sigma[v] << '\n';
      std::cout << "weighted_median " << list(c_median(d, *c)) << '\n';
    }
    return kExitOk;
  }

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "compute";
  j["input"] = input_descriptor(a.input, g);
  j["invariants"] = to_json(s);
  if (c) {
    Json w;
    w["weights"] = rationals_json(c->values());
    w["total"] = c->total().str();
    w["weighted_distance"] = rationals_json(weighted_distances(d, *c));
    w["weighted_median"] = c_median(d, *c);
    if (is_tree(g)) {
      w["branch_weight"] = rationals_json(branch_weights(g, *c));
      w["median_by_branch_weight"] = median_by_branch_weight(g, *c);
    }
    j["weighted"] = std::move(w);
  }
  if (a.timings) j["timings"]["total_seconds"] = clock.seconds();
  print_json(j);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  bool chain = false;
  bool trace = false;
  unsigned jobs = 1;
  bool timings = false;
};

int run_verify(const VerifyArgs& a) {
  Stopwatch clock;
  const auto g = load_connected_graph(a.input);
  const auto s = invariant_summary(g, a.jobs);
  const auto report = bound_report(g, s, a.chain, a.jobs);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";
  j["input"] = input_descriptor(a.input, g);
  j["invariants"] = to_json(s);
  j["report"] = to_json(report);
  if (a.trace) j["trace"] = to_json(build_construction(g, a.jobs));
  if (a.timings) j["timings"]["total_seconds"] = clock.seconds();
  print_json(j);
  if (!report.holds()) {
    std::cerr << "proxrem: bound check failed\n";
    for (const auto& b : report.bounds)
      if (!b.holds) std::cerr << "  " << b.name << ": " << b.actual << " > " << b.bound << '\n';
    for (const auto* chain : {&report.trace_invariants, &report.proximity_chain, &report.remoteness_chain})
      for (const auto& l : *chain)
        if (!l.holds)
          std::cerr << "  " << l.name << ": " << l.lhs << ' ' << relation_symbol(l.relation) << ' ' << l.rhs
                    << " fails\n";
    return kExitClaimFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ExtremalArgs {
  std::int64_t n = 0, delta = 0, Delta = 0;
  bool sharpness = false;
  bool sweep = false;
  std::int64_t n_min = 16, n_max = 60;
  std::string output;
  unsigned jobs = 1;
};

ExtremalParams extremal_params(std::int64_t n, std::int64_t delta, std::int64_t Delta) {
  try {
    return ExtremalParams::make(n, delta, Delta);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

int run_extremal(const ExtremalArgs& a) {
  if (a.sweep) {
    if (a.delta < 3) throw InputError("--sweep needs --delta >= 3");
    if (a.n_min > a.n_max) throw InputError("--n-min exceeds --n-max");
    const auto rows = sharpness_sweep(a.delta, a.n_min, a.n_max, a.jobs);
    std::ostringstream csv;
    csv << kGapCsvHeader << '\n';
    bool ok = true;
    for (const auto& r : rows) {
      write_gap_row(csv, r);
      ok = ok && r.holds();
    }
    if (a.output.empty()) std::cout << csv.str();
    else write_file(a.output, csv.str());
    if (!ok) std::cerr << "proxrem: a sharpness gap exceeds its constant\n";
    return ok ? kExitOk : kExitClaimFailed;
  }
  const auto p = extremal_params(a.n, a.delta, a.Delta);
  std::string text;
  bool ok = true;
  if (a.sharpness) {
    const auto r = sharpness_report(p, a.jobs);
    std::ostringstream csv;
    csv << kGapCsvHeader << '\n';
    write_gap_row(csv, r);
    text = csv.str();
    ok = r.holds();
  } else {
    text = render_graph(extremal_graph(p));
  }
  if (a.output.empty()) std::cout << text;
  else write_file(a.output, text);
  if (!ok) std::cerr << "proxrem: a sharpness gap exceeds its constant\n";
  return ok ? kExitOk : kExitClaimFailed;
}

// ---------------------------------------------------------------------------

struct LemmaArgs {
  std::size_t max_n = kLemmaSweepMaxWeight;
  std::size_t max_order = kLemmaSweepMaxOrder;
  std::string csv, instances_csv;
  std::string dump_dir = "counterexamples";
  unsigned jobs = 1;
  bool timings = false;
};

int run_lemma_sweep(const LemmaArgs& a) {
  Stopwatch clock;
  if (a.max_n > kLemmaSweepMaxWeight || a.max_order > kLemmaSweepMaxOrder || a.max_n < 1 || a.max_order < 1)
    throw InputError("sweep range exceeds the instance budget (--max-n <= " + std::to_string(kLemmaSweepMaxWeight) +
                     ", --max-order <= " + std::to_string(kLemmaSweepMaxOrder) + ")");
  const auto r = lemma_sweep(a.max_n, a.max_order, a.jobs);
  if (!a.csv.empty()) {
    std::ostringstream os;
    write_lemma_csv(os, r);
    write_file(a.csv, os.str());
  }
  if (!a.instances_csv.empty()) {
    std::ostringstream os;
    write_lemma_instances_csv(os, a.max_n, a.max_order);
    write_file(a.instances_csv, os.str());
  }
  auto j = to_json(r);
  if (a.timings) j["timings"]["total_seconds"] = clock.seconds();
  print_json(j);
  if (r.holds()) return kExitOk;
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    const auto& v = r.violations[i];
    const auto tree = prufer_decode(v.order, v.code);
    const fs::path base = fs::path(a.dump_dir) / ("lemma-" + std::to_string(i));
    write_file(base.string() + ".graph", "# " + v.kind + " bound violated at vertex " + std::to_string(v.vertex) +
                                             " with L = " + std::to_string(v.heavy_weight) + "\n" +
                                             render_graph(tree));
    write_file(base.string() + ".weights",
               render_weights(WeightFunction(std::vector<Rational>(v.weights.begin(), v.weights.end()))));
  }
  std::cerr << "proxrem: " << r.violations.size() << " lemma violation(s); dumps in " << a.dump_dir << '\n';
  return kExitClaimFailed;
}

struct BoundCheckArgs {
  std::size_t trees = 0;
  std::size_t random = 0;
  std::size_t max_n = 60;
  std::uint64_t seed = kDefaultSeed;
  bool no_chain = false;
  std::string csv;
  std::string dump_dir = "counterexamples";
  unsigned jobs = 1;
  bool timings = false;
};

int run_bound_check(const BoundCheckArgs& a) {
  Stopwatch clock;
  BoundCheckOptions o;
  if ((a.trees > 0) == (a.random > 0)) throw InputError("give exactly one of --trees or --random");
  if (a.trees > 0) {
    if (a.trees < 2 || a.trees > kMaxEnumeratedOrder) throw InputError("--trees must be in 2..8");
    o.sampler = Sampler::exhaustive_trees;
    o.max_order = a.trees;
  } else {
    if (a.max_n < 2 || a.max_n > DistanceMatrix::kMaxOrder) throw InputError("--max-n out of range");
    o.sampler = Sampler::random;
    o.samples = a.random;
    o.max_order = a.max_n;
  }
  o.seed = a.seed;
  o.with_chain = !a.no_chain;
  o.jobs = a.jobs;
  const auto r = exhaustive_bound_check(o);
  if (!a.csv.empty()) {
    std::ostringstream os;
    os << "bound,min_slack,argmin\n";
    for (const auto& s : r.slacks) os << s.name << ',' << s.min_slack << ',' << s.argmin << '\n';
    write_file(a.csv, os.str());
  }
  auto j = to_json(r);
  if (a.timings) j["timings"]["total_seconds"] = clock.seconds();
  print_json(j);
  if (r.holds()) return kExitOk;
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const auto& f = r.failures[i];
    write_file(fs::path(a.dump_dir) / ("bound-" + std::to_string(i) + ".graph"),
               "# " + f.check + ": " + f.detail + "\n" + f.graph);
  }
  std::cerr << "proxrem: " << r.failures.size() << " failure(s); dumps in " << a.dump_dir << '\n';
  return kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximity, remoteness and their bounds on connected graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "proxrem 1.0");

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Distance invariants of a graph");
  c->add_option("input", compute.input, "Edge-list file, '-' for stdin")->required();
  c->add_option("--format", compute.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  c->add_option("--weights", compute.weights, "Vertex weight file; adds weighted distances and the weighted median");
  c->add_option("--jobs", compute.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  c->add_flag("--timings", compute.timings, "Include wall-clock timings");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Evaluate every bound; exit 1 if any fails");
  v->add_option("input", verify.input, "Edge-list file, '-' for stdin")->required();
  v->add_flag("--chain", verify.chain, "Add the certified inequality chains of the tree construction");
  v->add_flag("--trace", verify.trace, "Include the construction trace");
  v->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  v->add_flag("--timings", verify.timings, "Include wall-clock timings");

  ExtremalArgs extremal;
  auto* e = app.add_subcommand("extremal", "Generate the near-extremal graph or measure its sharpness gaps");
  e->add_option("--n", extremal.n, "Order");
  e->add_option("--delta", extremal.delta, "Minimum degree")->required();
  e->add_option("--Delta", extremal.Delta, "Maximum degree");
  e->add_flag("--sharpness", extremal.sharpness, "Emit the gap record as CSV instead of the graph");
  e->add_flag("--sweep", extremal.sweep, "Gap CSV for every valid (n, Delta) with n in [--n-min, --n-max]");
  e->add_option("--n-min", extremal.n_min, "Sweep lower order");
  e->add_option("--n-max", extremal.n_max, "Sweep upper order");
  e->add_option("-o,--output", extremal.output, "Write to a file instead of stdout");
  e->add_option("--jobs", extremal.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  auto* o = app.add_subcommand("oracle", "Brute-force checks");
  o->require_subcommand(1);
  LemmaArgs lemma;
  auto* ls = o->add_subcommand("lemma-sweep", "Exhaustive weighted-tree sweep against the weighted-median bounds");
  ls->add_option("--max-n", lemma.max_n, "Largest total weight");
  ls->add_option("--max-order", lemma.max_order, "Largest tree order");
  ls->add_option("--csv", lemma.csv, "Per-(N, L) CSV output path");
  ls->add_option("--instances-csv", lemma.instances_csv, "Per-instance CSV output path");
  ls->add_option("--dump-dir", lemma.dump_dir, "Directory for counterexample dumps");
  ls->add_option("--jobs", lemma.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  ls->add_flag("--timings", lemma.timings, "Include wall-clock timings");
  BoundCheckArgs check;
  auto* bc = o->add_subcommand("bound-check", "Check every bound over all small trees or a seeded random corpus");
  bc->add_option("--trees", check.trees, "All labeled trees of order 2..K");
  bc->add_option("--random", check.random, "Number of random connected graphs");
  bc->add_option("--max-n", check.max_n, "Largest random order");
  bc->add_option("--seed", check.seed, "Random corpus seed");
  bc->add_flag("--no-chain", check.no_chain, "Skip the construction chains");
  bc->add_option("--csv", check.csv, "Per-bound minimum slack CSV output path");
  bc->add_option("--dump-dir", check.dump_dir, "Directory for counterexample dumps");
  bc->add_option("--jobs", check.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  bc->add_flag("--timings", check.timings, "Include wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForVersion& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitInput;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (v->parsed()) return run_verify(verify);
    if (e->parsed()) {
      if (!extremal.sweep && (e->count("--n") == 0 || e->count("--Delta") == 0))
        throw InputError("extremal needs --n and --Delta (or --sweep)");
      return run_extremal(extremal);
    }
    if (ls->parsed()) return run_lemma_sweep(lemma);
    if (bc->parsed()) return run_bound_check(check);
  } catch (const InputError& ex) {
    std::cerr << "proxrem: " << ex.what() << '\n';
    return kExitInput;
  } catch (const ParseError& ex) {
    std::cerr << "proxrem: parse error: " << ex.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& ex) {
    std::cerr << "proxrem: invalid input: " << ex.what() << '\n';
    return kExitInput;
  } catch (const DomainError& ex) {
    std::cerr << "proxrem: " << ex.what() << '\n';
    return kExitInput;
  } catch (const std::exception& ex) {
    std::cerr << "proxrem: internal error: " << ex.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
