#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace loclab {

inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxDenseOrder = 4096;

using VertexMask = std::uint64_t;

constexpr VertexMask bit(int v) noexcept { return VertexMask{1} << v; }
constexpr VertexMask all_vertices(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (bit(n) - 1);
}

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 64 vertices. Each vertex's
/// neighbourhood is one machine word; the edge list is kept sorted by (u, v)
/// with u < v. Values are immutable once built.
class Graph {
 public:
  /// Empty graph on n vertices, 1 <= n <= 64.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, duplicates or out-of-range ends.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Adjacency rows must be symmetric and loop-free.
  static Graph from_adjacency(std::span<const VertexMask> rows);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  VertexMask neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const VertexMask> adjacency() const noexcept { return adj_; }
  bool adjacent(int u, int v) const noexcept { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(neighbors(v)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Index of edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const noexcept;

  /// Copy with one extra edge.
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Graph(int n, std::vector<VertexMask> adj);
  void rebuild_edges();

  int n_;
  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);

/// Block-diagonal union; vertices of h are shifted by g.order().
/// Throws std::invalid_argument when the combined order exceeds 64.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Dense bit-matrix adjacency for graphs beyond the 64-vertex word limit
/// (up to 4096 vertices). Row v holds ceil(n/64) words.
class DenseGraph {
 public:
  explicit DenseGraph(int n);
  explicit DenseGraph(const Graph& g);

  int order() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t size() const noexcept { return m_; }

  std::span<const std::uint64_t> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  bool adjacent(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
            (v % 64)) & 1U;
  }
  int degree(int v) const noexcept;

  /// Builder-side mutation; ignores loops and repeated edges.
  void add_edge(int u, int v);

  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  int n_;
  std::size_t words_;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

bool is_connected(const DenseGraph& g);

}  // namespace loclab
