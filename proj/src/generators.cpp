#include "loclab/generators.hpp"

#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "loclab/errors.hpp"
#include "loclab/rng.hpp"

namespace loclab {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    require(ec == std::errc{} && ptr == item.data() + item.size() && !item.empty(),
            "bad integer parameter '" + std::string(item) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Graph single_named(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::vector<int> params =
      colon == std::string_view::npos ? std::vector<int>{} : parse_ints(spec.substr(colon + 1));
  const auto arity = [&](std::size_t k) {
    require(params.size() == k, "'" + std::string(name) + "' expects " + std::to_string(k) +
                                    " parameter(s)");
  };

  if (name == "complete" || name == "K") { arity(1); return complete_graph(params[0]); }
  if (name == "empty") { arity(1); return empty_graph(params[0]); }
  if (name == "cycle" || name == "C") { arity(1); return cycle_graph(params[0]); }
  if (name == "path" || name == "P") { arity(1); return path_graph(params[0]); }
  if (name == "kab" || name == "complete_bipartite") {
    arity(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "cmp" || name == "complete_multipartite") {
    require(!params.empty(), "'cmp' needs part sizes");
    return complete_multipartite(params);
  }
  if (name == "petersen") { arity(0); return petersen_graph(); }
  if (name == "diamond") { arity(0); return diamond_graph(); }
  if (name == "bowtie") { arity(0); return bowtie_graph(); }
  if (name == "octahedron") {
    arity(0);
    const int parts[] = {2, 2, 2};
    return complete_multipartite(parts);
  }
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1 && n <= kMaxOrder, "complete graph order must be in [1, 64]");
  std::vector<VertexMask> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = all_vertices(n) & ~bit(v);
  return Graph::from_adjacency(adj);
}

Graph empty_graph(int n) {
  require(n >= 1 && n <= kMaxOrder, "empty graph order must be in [1, 64]");
  return Graph(n);
}

Graph cycle_graph(int n) {
  require(n >= 3 && n <= kMaxOrder, "cycle order must be in [3, 64]");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const int w = (v + 1) % n;
    edges.push_back({std::min(v, w), std::max(v, w)});
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1 && n <= kMaxOrder, "path order must be in [1, 64]");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  require(!part_sizes.empty(), "complete multipartite graph needs at least one part");
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    require(part_sizes[i] >= 1, "part sizes must be positive");
    n += part_sizes[i];
    require(n <= kMaxOrder, "complete multipartite order exceeds 64");
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[i]), static_cast<int>(i));
  }
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) {
        adj[static_cast<std::size_t>(u)] |= bit(v);
      }
    }
  }
  return Graph::from_adjacency(adj);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int a = i, b = (i + 1) % 5;
    edges.push_back({std::min(a, b), std::max(a, b)});
    const int c = 5 + i, d = 5 + (i + 2) % 5;
    edges.push_back({std::min(c, d), std::max(c, d)});
    edges.push_back({i, i + 5});
  }
  return Graph::from_edges(10, edges);
}

Graph diamond_graph() {
  const Edge edges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Graph::from_edges(4, edges);
}

Graph bowtie_graph() {
  const Edge edges[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
  return Graph::from_edges(5, edges);
}

Graph named_graph(std::string_view spec) {
  require(!spec.empty(), "empty graph name");
  const auto plus = spec.find('+');
  if (plus == std::string_view::npos) return single_named(spec);
  return disjoint_union(single_named(spec.substr(0, plus)), named_graph(spec.substr(plus + 1)));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxOrder, "G(n,p) order must be in [1, 64]");
  require(p > 0.0 && p < 1.0, "edge probability must lie in (0, 1)");
  Rng rng(seed);
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) {
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(adj);
}

DenseGraph random_gnp_dense(int n, double p, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxDenseOrder, "G(n,p) order must be in [1, 4096]");
  require(p > 0.0 && p < 1.0, "edge probability must lie in (0, 1)");
  Rng rng(seed);
  DenseGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

LabeledEnumeration::LabeledEnumeration(int n) : n_(n), pairs_(n * (n - 1) / 2) {
  if (n < 1) throw std::invalid_argument("enumeration order must be positive");
  if (n > kMaxBuiltinOrder) {
    throw CapabilityError("built-in enumeration stops at 7 vertices; supply larger graphs as a "
                          "graph6 stream (e.g. from nauty's geng)");
  }
}

Graph LabeledEnumeration::at(std::uint64_t index) const {
  std::vector<VertexMask> adj(static_cast<std::size_t>(n_), 0);
  int k = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v, ++k) {
      if ((index >> k) & 1U) {
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(adj);
}

}  // namespace loclab
