#include "loclab/motzkin.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "loclab/rng.hpp"

namespace loclab {

std::optional<WeightScheme> parse_weight_scheme(std::string_view name) {
  if (name == "classical") return WeightScheme::classical;
  if (name == "avg_local") return WeightScheme::avg_local;
  if (name == "geo_local") return WeightScheme::geo_local;
  if (name == "custom") return WeightScheme::custom;
  return std::nullopt;
}

std::string_view scheme_name(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::classical: return "classical";
    case WeightScheme::avg_local: return "avg_local";
    case WeightScheme::geo_local: return "geo_local";
    case WeightScheme::custom: return "custom";
  }
  return "?";
}

std::vector<double> scheme_weights(const Graph& g, WeightScheme scheme, const CliqueProfile& profile) {
  std::vector<double> w;
  w.reserve(g.size());
  const auto ratio = [&](int v) {
    const double c = profile.c_v[static_cast<std::size_t>(v)];
    return c / (c - 1.0);  // endpoints of an edge have c >= 2
  };
  for (const Edge& e : g.edges()) {
    switch (scheme) {
      case WeightScheme::classical: w.push_back(1.0); break;
      case WeightScheme::avg_local: w.push_back(0.5 * (ratio(e.u) + ratio(e.v))); break;
      case WeightScheme::geo_local: w.push_back(std::sqrt(ratio(e.u) * ratio(e.v))); break;
      case WeightScheme::custom:
        throw std::invalid_argument("custom weights come from a weight file, not from the graph");
    }
  }
  return w;
}

std::vector<double> scheme_weights(const Graph& g, WeightScheme scheme) {
  if (scheme == WeightScheme::classical) return std::vector<double>(g.size(), 1.0);
  return scheme_weights(g, scheme, clique_profile(g));
}

namespace {

constexpr double kSimplexSlack = 1e-9;

void check_weights(const Graph& g, std::span<const double> weights) {
  if (weights.size() != g.size()) {
    throw std::invalid_argument("weight vector length must equal the edge count");
  }
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("edge weights must be nonnegative");
  }
}

// y = W x with W symmetric, w_uv on both off-diagonal entries.
void apply(const Graph& g, std::span<const double> weights, std::span<const double> x, std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto u = static_cast<std::size_t>(edges[i].u);
    const auto v = static_cast<std::size_t>(edges[i].v);
    y[u] += weights[i] * x[v];
    y[v] += weights[i] * x[u];
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Maximal cliques by Bron-Kerbosch with Tomita pivoting, in a fixed order,
// stopping after `limit`.
void maximal_cliques(const Graph& g, VertexMask r, VertexMask p, VertexMask x, int limit,
                     std::vector<VertexMask>& out) {
  if (static_cast<int>(out.size()) >= limit) return;
  if (p == 0) {
    if (x == 0) out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (VertexMask s = p | x; s; s &= s - 1) {
    const int u = std::countr_zero(s);
    const int k = std::popcount(p & g.neighbors(u));
    if (k > best) {
      best = k;
      pivot = u;
    }
  }
  for (VertexMask s = p & ~g.neighbors(pivot); s; s &= s - 1) {
    const int v = std::countr_zero(s);
    maximal_cliques(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), limit, out);
    p &= ~bit(v);
    x |= bit(v);
    if (static_cast<int>(out.size()) >= limit) return;
  }
}

struct Run {
  std::vector<double> x;
  double value = 0.0;
  bool monotone = true;
};

Run replicate(const Graph& g, std::span<const double> weights, std::vector<double> x,
              const SimplexOptions& options) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> y(n);
  apply(g, weights, x, y);
  double value = dot(x, y);
  Run run;
  for (int it = 0; it < options.max_iterations && value > 0.0; ++it) {
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      x[v] *= y[v] / value;
      total += x[v];
    }
    for (double& xv : x) xv /= total;  // only rounding drift
    apply(g, weights, x, y);
    const double next = dot(x, y);
    if (next < value - 1e-12 * std::max(1.0, value)) run.monotone = false;
    const bool done = std::abs(next - value) < options.tolerance;
    value = next;
    if (done) break;
  }
  run.x = std::move(x);
  run.value = value;
  return run;
}

}  // namespace

double quad_form(const Graph& g, std::span<const double> weights, std::span<const double> x) {
  check_weights(g, weights);
  if (x.size() != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("point length must equal the vertex count");
  }
  double sum = 0.0;
  for (double v : x) {
    if (v < -kSimplexSlack) throw std::invalid_argument("point has a negative coordinate");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSimplexSlack) throw std::invalid_argument("point coordinates do not sum to 1");
  double f = 0.0;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    f += 2.0 * weights[i] * x[static_cast<std::size_t>(edges[i].u)] * x[static_cast<std::size_t>(edges[i].v)];
  }
  return f;
}

SimplexResult maximize_simplex(const Graph& g, std::span<const double> weights, const SimplexOptions& options) {
  check_weights(g, weights);
  if (options.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  const int n = g.order();
  const auto N = static_cast<std::size_t>(n);

  // Support: vertices with a positive weight on some incident edge.
  VertexMask live = 0;
  Graph support_graph(n);
  {
    std::vector<Edge> kept;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (weights[i] > 0.0) {
        live |= bit(edges[i].u) | bit(edges[i].v);
        kept.push_back(edges[i]);
      }
    }
    support_graph = Graph::from_edges(n, kept);
  }

  SimplexResult best;
  best.x.assign(N, 0.0);
  best.x[0] = 1.0;
  const auto consider = [&](Run run) {
    ++best.starts;
    best.monotone = best.monotone && run.monotone;
    if (run.value > best.value || (run.value == best.value && run.x < best.x)) {
      best.value = run.value;
      best.x = std::move(run.x);
    }
  };
  if (live == 0) {
    best.starts = 1;
    return best;
  }

  std::vector<VertexMask> cliques;
  maximal_cliques(support_graph, 0, live, 0, options.max_clique_starts, cliques);
  for (VertexMask c : cliques) {
    std::vector<double> x(N, 0.0);
    const double share = 1.0 / std::popcount(c);
    for (VertexMask s = c; s; s &= s - 1) x[static_cast<std::size_t>(std::countr_zero(s))] = share;
    consider(replicate(g, weights, std::move(x), options));
  }

  Rng rng(options.seed);
  for (int k = 0; k < options.restarts; ++k) {
    std::vector<double> x(N, 0.0);
    double total = 0.0;
    for (VertexMask s = live; s; s &= s - 1) {
      const double e = -std::log(rng.uniform_open0());
      x[static_cast<std::size_t>(std::countr_zero(s))] = e;
      total += e;
    }
    for (double& v : x) v /= total;
    consider(replicate(g, weights, std::move(x), options));
  }
  return best;
}

std::vector<double> clique_witness(const Graph& g) {
  const Clique c = max_clique(g);
  std::vector<double> x(static_cast<std::size_t>(g.order()), 0.0);
  for (VertexMask s = c.members; s; s &= s - 1) {
    x[static_cast<std::size_t>(std::countr_zero(s))] = 1.0 / c.size;
  }
  return x;
}

}  // namespace loclab
