#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "loclab/graph.hpp"

namespace loclab {

struct Clique {
  int size = 0;
  VertexMask members = 0;
};

/// Maximum clique inside `universe` (defaults to all vertices). Branch and
/// bound with greedy colouring bounds over one-word candidate sets.
Clique max_clique(const Graph& g, VertexMask universe);
Clique max_clique(const Graph& g);

/// Maximum clique of a dense graph restricted to `vertices` (all vertices
/// when empty). Returns the witness as sorted vertex ids.
std::vector<int> max_clique(const DenseGraph& g, std::span<const int> vertices = {});

/// c(v) = 1 + omega(G[N(v)]).
std::vector<int> vertex_clique_numbers(const Graph& g);

/// c(uv) = 2 + omega(G[N(u) & N(v)]), aligned with g.edges().
std::vector<int> edge_clique_numbers(const Graph& g);

/// Triangles via neighbour-mask intersections: sum over edges of common
/// neighbours, divided by 3.
std::uint64_t triangle_count(const Graph& g);

/// Sum over v of the number of edges inside N(v); equals 3 t(G).
std::uint64_t neighborhood_edge_sum(const Graph& g);

/// Clique-local quantities. When `exact` is false (a dense profile whose
/// search budget ran out) omega, c_v and c_e are certified lower bounds and
/// the *_upper fields certified upper bounds; otherwise both agree.
struct CliqueProfile {
  int omega = 1;
  std::vector<int> c_v;
  std::vector<int> c_e;  // aligned with the graph's edge list
  std::uint64_t t = 0;
  int tv = 0;  // vertices with c(v) >= 3 (from the lower bounds)
  bool exact = true;
  int omega_upper = 1;
  std::vector<int> c_v_upper;
  std::vector<int> c_e_upper;
};

CliqueProfile clique_profile(const Graph& g);

struct DenseProfileOptions {
  double budget_seconds = 0.0;  // <= 0 means no deadline
};

/// Same quantities for graphs beyond 64 vertices. Greedy witnesses give
/// lower bounds and greedy colourings upper bounds; exact branch and bound
/// inside one neighbourhood (or common neighbourhood) at a time then closes
/// the gaps until the deadline passes.
CliqueProfile clique_profile(const DenseGraph& g, const DenseProfileOptions& options = {});

struct Predicates {
  bool connected = false;
  bool triangle_free = false;
  bool diamond_free = false;
  bool regular = false;
  bool complete = false;
  bool bipartite = false;
  bool complete_multipartite = false;
};

Predicates predicates(const Graph& g);

Predicates predicates(const DenseGraph& g);

}  // namespace loclab
