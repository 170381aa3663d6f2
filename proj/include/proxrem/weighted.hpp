#pragma once

// Vertex-weighted distances, c-medians, branch weights on trees, and the
// closed-form bounds on the weighted distance of a median (resp. of any
// vertex) for weight functions with a floor k and one heavy vertex L.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "proxrem/errors.hpp"
#include "proxrem/families.hpp"
#include "proxrem/graph.hpp"
#include "proxrem/rational.hpp"

namespace proxrem {

/// Nonnegative exact weights on vertices 0..n-1 with a cached total.
class WeightFunction {
 public:
  WeightFunction() = default;

  explicit WeightFunction(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (std::size_t v = 0; v < weights_.size(); ++v) {
      if (weights_[v] < 0)
        throw ValidationError("negative weight " + weights_[v].str() + " at vertex " +
                              std::to_string(v));
      total_ += weights_[v];
    }
  }

  static WeightFunction uniform(std::size_t n, Rational value = 1) {
    return WeightFunction(std::vector<Rational>(n, value));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](VertexId v) const { return weights_[v]; }
  const Rational& total() const noexcept { return total_; }
  const std::vector<Rational>& values() const noexcept { return weights_; }

  /// Adds `amount` (which may be negative) to the weight of v.
  void add(VertexId v, const Rational& amount) {
    if (weights_[v] + amount < 0) throw ValidationError("weight would become negative");
    weights_[v] += amount;
    total_ += amount;
  }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<Rational> weights_;
  Rational total_;
};

/// Renders one "vertex p/q" line per vertex.
inline std::string render_weights(const WeightFunction& c) {
  std::ostringstream os;
  for (VertexId v = 0; v < c.size(); ++v) os << v << ' ' << c[v].str() << '\n';
  return os.str();
}

/// Parses "vertex p/q" lines; every vertex of 0..order-1 must appear exactly once.
inline WeightFunction parse_weights(std::string_view text, std::size_t order) {
  std::vector<std::optional<Rational>> slots(order);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string vertex_text, weight_text, extra;
    if (!(fields >> vertex_text)) continue;
    if (!(fields >> weight_text) || (fields >> extra))
      throw ParseError(line_no, "expected 'vertex weight'");
    std::size_t vertex = 0;
    try {
      std::size_t used = 0;
      vertex = std::stoul(vertex_text, &used);
      if (used != vertex_text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError(line_no, "invalid vertex id '" + vertex_text + "'");
    }
    Rational w;
    try {
      w = Rational::parse(weight_text);
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    if (vertex >= order) throw ValidationError("weight for vertex outside the graph");
    if (slots[vertex]) throw ValidationError("duplicate weight for vertex " + vertex_text);
    slots[vertex] = w;
  }
  std::vector<Rational> weights;
  weights.reserve(order);
  for (std::size_t v = 0; v < order; ++v) {
    if (!slots[v]) throw ValidationError("missing weight for vertex " + std::to_string(v));
    weights.push_back(*slots[v]);
  }
  return WeightFunction(std::move(weights));
}

/// σ_c(v) = Σ_{w≠v} c(w)·d(v,w).
inline Rational weighted_distance(const DistanceMatrix& d, const WeightFunction& c, VertexId v) {
  if (c.size() != d.order()) throw DomainError("weight function does not cover every vertex");
  Rational total;
  auto row = d.row(v);
  for (VertexId w = 0; w < row.size(); ++w) {
    if (w == v || c[w] == 0) continue;
    if (row[w] == DistanceMatrix::kInfinity) throw DomainError("graph is not connected");
    total += c[w] * static_cast<std::int64_t>(row[w]);
  }
  return total;
}

inline std::vector<Rational> weighted_distances(const DistanceMatrix& d, const WeightFunction& c) {
  std::vector<Rational> out(d.order());
  for (VertexId v = 0; v < d.order(); ++v) out[v] = weighted_distance(d, c, v);
  return out;
}

/// All vertices minimizing σ_c, ascending.
inline std::vector<VertexId> c_median(const DistanceMatrix& d, const WeightFunction& c) {
  auto sigma = weighted_distances(d, c);
  if (sigma.empty()) return {};
  const auto best = *std::min_element(sigma.begin(), sigma.end());
  std::vector<VertexId> out;
  for (VertexId v = 0; v < sigma.size(); ++v)
    if (sigma[v] == best) out.push_back(v);
  return out;
}

inline bool is_tree(const Graph& g) {
  return !g.empty() && g.size() + 1 == g.order() && is_connected(g);
}

/// Branch weight of every vertex: the heaviest component of T - v (0 for K1).
inline std::vector<Rational> branch_weights(const Graph& tree, const WeightFunction& c) {
  if (!is_tree(tree)) throw DomainError("branch weight is defined on trees only");
  if (c.size() != tree.order()) throw DomainError("weight function does not cover every vertex");
  const auto n = tree.order();
  std::vector<VertexId> order;
  std::vector<VertexId> parent(n, 0);
  std::vector<char> seen(n, 0);
  order.reserve(n);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId u = order[head];
    for (VertexId w : tree.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<Rational> subtree(c.values());
  for (std::size_t i = n; i-- > 1;) subtree[parent[order[i]]] += subtree[order[i]];

  std::vector<Rational> bw(n);
  for (std::size_t i = 1; i < n; ++i) {
    VertexId v = order[i];
    bw[v] = c.total() - subtree[v];
    bw[parent[v]] = max(bw[parent[v]], subtree[v]);
  }
  return bw;
}

inline Rational branch_weight(const Graph& tree, const WeightFunction& c, VertexId v) {
  return branch_weights(tree, c)[v];
}

/// Vertices whose branch weight is at most half the total weight.
inline std::vector<VertexId> median_by_branch_weight(const Graph& tree, const WeightFunction& c) {
  auto bw = branch_weights(tree, c);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < bw.size(); ++v)
    if (bw[v] * 2 <= c.total()) out.push_back(v);
  return out;
}

// Closed forms. These take raw (N, L, k) and do not validate; LemmaParams does.

/// Median bound when the heavy vertex outweighs the rest: (N-L)(N-L+k)/(2k).
inline Rational heavy_median_formula(const Rational& N, const Rational& L, const Rational& k) {
  return (N - L) * (N - L + k) / (k * 2);
}

/// Median bound when the heavy vertex is at most half: (N²-2L²)/(4k) + (N+L)/2.
inline Rational light_median_formula(const Rational& N, const Rational& L, const Rational& k) {
  return (N * N - L * L * 2) / (k * 4) + (N + L) / 2;
}

/// Bound on the weighted distance of any vertex: (N-L)(N+L-k)/(2k).
inline Rational any_vertex_formula(const Rational& N, const Rational& L, const Rational& k) {
  return (N - L) * (N + L - k) / (k * 2);
}

/// Parameters (N, k, L) with 0 < k < L <= N and N - L an integer multiple of k.
class LemmaParams {
 public:
  static LemmaParams make(Rational total_weight, Rational min_weight, Rational heavy_weight) {
    if (!(min_weight > 0)) throw DomainError("weight floor k must be positive");
    if (!(min_weight < heavy_weight)) throw DomainError("need k < L");
    if (heavy_weight > total_weight) throw DomainError("need L <= N");
    if (!((total_weight - heavy_weight) / min_weight).is_integer())
      throw DomainError("N - L must be an integer multiple of k");
    LemmaParams p;
    p.total_ = total_weight;
    p.floor_ = min_weight;
    p.heavy_ = heavy_weight;
    return p;
  }

  const Rational& total_weight() const noexcept { return total_; }  // N
  const Rational& min_weight() const noexcept { return floor_; }    // k
  const Rational& heavy_weight() const noexcept { return heavy_; }  // L

  /// (N - L) / k, the number of floor-weight vertices on the extremal path.
  std::int64_t light_count() const { return ((total_ - heavy_) / floor_).num(); }

  bool heavy_majority() const { return heavy_ * 2 > total_; }

 private:
  LemmaParams() = default;
  Rational total_, floor_, heavy_;
};

inline Rational lemma_proximity_bound(const LemmaParams& p) {
  const auto& N = p.total_weight();
  const auto& L = p.heavy_weight();
  const auto& k = p.min_weight();
  return p.heavy_majority() ? heavy_median_formula(N, L, k) : light_median_formula(N, L, k);
}

inline Rational lemma_remoteness_bound(const LemmaParams& p) {
  return any_vertex_formula(p.total_weight(), p.heavy_weight(), p.min_weight());
}

enum class WitnessMode { proximity, remoteness };

struct WeightedWitness {
  Graph tree;
  WeightFunction weights;
  VertexId vertex = 0;
};

/// Path on 1 + (N-L)/k vertices with one vertex of weight L and the rest k.
/// proximity: the heavy vertex is the distinguished end (its σ_c meets the
/// median bound; requires L > N/2). remoteness: the heavy vertex is the far
/// end and the distinguished vertex is the opposite, light end.
inline WeightedWitness extremal_witness_path(const LemmaParams& p, WitnessMode mode) {
  if (mode == WitnessMode::proximity && !p.heavy_majority())
    throw DomainError("the path witness attains the median bound only when L > N/2");
  const auto m = static_cast<std::size_t>(p.light_count()) + 1;
  std::vector<Rational> w(m, p.min_weight());
  WeightedWitness out;
  out.tree = path_graph(m);
  if (mode == WitnessMode::proximity)
    w.front() = p.heavy_weight();
  else
    w.back() = p.heavy_weight();
  out.vertex = 0;
  out.weights = WeightFunction(std::move(w));
  return out;
}

}  // namespace proxrem
