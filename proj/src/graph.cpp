#include "loclab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace loclab {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::vector<VertexMask> adj) : n_(n), adj_(std::move(adj)) { rebuild_edges(); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    auto& row = adj[static_cast<std::size_t>(e.u)];
    if (row & bit(e.v)) throw std::invalid_argument("repeated edge");
    row |= bit(e.v);
    adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return Graph(n, std::move(adj));
}

Graph Graph::from_adjacency(std::span<const VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexMask universe = all_vertices(n);
  for (int v = 0; v < n; ++v) {
    const VertexMask row = rows[static_cast<std::size_t>(v)];
    if (row & ~universe) throw std::invalid_argument("adjacency row has bits beyond order");
    if (row & bit(v)) throw std::invalid_argument("loops are not allowed");
    for (VertexMask rest = row; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (!(rows[static_cast<std::size_t>(u)] & bit(v))) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
  }
  return Graph(n, std::vector<VertexMask>(rows.begin(), rows.end()));
}

void Graph::rebuild_edges() {
  edges_.clear();
  for (int u = 0; u < n_; ++u) {
    for (VertexMask higher = adj_[static_cast<std::size_t>(u)] & ~all_vertices(u + 1); higher;
         higher &= higher - 1) {
      edges_.push_back({u, std::countr_zero(higher)});
    }
  }
}

int Graph::edge_index(int u, int v) const noexcept {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v || !adjacent(u, v)) return -1;
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::invalid_argument("invalid edge");
  }
  std::vector<VertexMask> adj = adj_;
  adj[static_cast<std::size_t>(u)] |= bit(v);
  adj[static_cast<std::size_t>(v)] |= bit(u);
  return Graph(n_, std::move(adj));
}

bool is_connected(const Graph& g) {
  const VertexMask universe = all_vertices(g.order());
  VertexMask seen = bit(0);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == universe;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) {
    throw std::invalid_argument("disjoint union order " + std::to_string(n) + " exceeds 64");
  }
  std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (int v = 0; v < h.order(); ++v) {
    adj[static_cast<std::size_t>(g.order() + v)] = h.neighbors(v) << g.order();
  }
  return Graph::from_adjacency(adj);
}

DenseGraph::DenseGraph(int n)
    : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)) {
  if (n < 1 || n > kMaxDenseOrder) {
    throw std::invalid_argument("dense graph order must be in [1, 4096], got " + std::to_string(n));
  }
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

DenseGraph::DenseGraph(const Graph& g) : DenseGraph(g.order()) {
  for (const Edge& e : g.edges()) add_edge(e.u, e.v);
}

int DenseGraph::degree(int v) const noexcept {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

void DenseGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v || adjacent(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
}

std::vector<Edge> DenseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    const auto r = row(u);
    for (std::size_t w = static_cast<std::size_t>(u + 1) / 64; w < words_; ++w) {
      std::uint64_t word = r[w];
      if (w == static_cast<std::size_t>(u + 1) / 64) {
        const int shift = (u + 1) % 64;
        word &= shift == 0 ? ~std::uint64_t{0} : ~((std::uint64_t{1} << shift) - 1);
      }
      for (; word; word &= word - 1) {
        out.push_back({u, static_cast<int>(w * 64) + std::countr_zero(word)});
      }
    }
  }
  return out;
}

bool is_connected(const DenseGraph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const auto r = g.row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      for (std::uint64_t word = r[w]; word; word &= word - 1) {
        const int u = static_cast<int>(w * 64) + std::countr_zero(word);
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
  }
  return reached == n;
}

}  // namespace loclab
