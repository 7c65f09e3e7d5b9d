#include "loclab/cliques.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <numeric>
#include <optional>

namespace loclab {

namespace {

// ---------------------------------------------------------------------------
// One-word branch and bound.

struct WordSearch {
  std::span<const VertexMask> adj;
  Clique best;
  int stop_at = kMaxOrder + 1;

  void expand(VertexMask clique, int size, VertexMask cand) {
    std::array<int, 64> order{};
    std::array<int, 64> colour{};
    int count = 0;
    VertexMask uncoloured = cand;
    for (int k = 1; uncoloured; ++k) {
      VertexMask q = uncoloured;
      while (q) {
        const int v = std::countr_zero(q);
        q &= ~bit(v) & ~adj[static_cast<std::size_t>(v)];
        uncoloured &= ~bit(v);
        order[static_cast<std::size_t>(count)] = v;
        colour[static_cast<std::size_t>(count)] = k;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + colour[static_cast<std::size_t>(i)] <= best.size || best.size >= stop_at) return;
      const int v = order[static_cast<std::size_t>(i)];
      const VertexMask next = cand & adj[static_cast<std::size_t>(v)];
      if (next == 0) {
        if (size + 1 > best.size) best = {size + 1, clique | bit(v)};
      } else {
        expand(clique | bit(v), size + 1, next);
      }
      cand &= ~bit(v);
    }
  }
};

// ---------------------------------------------------------------------------
// Multi-word sets over a dense graph.

using Words = std::vector<std::uint64_t>;
using Clock = std::chrono::steady_clock;

std::vector<int> members(std::span<const std::uint64_t> set) {
  std::vector<int> out;
  for (std::size_t w = 0; w < set.size(); ++w) {
    for (std::uint64_t word = set[w]; word; word &= word - 1) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(word));
    }
  }
  return out;
}

int count_common(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

Words intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  Words out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

bool empty_set(std::span<const std::uint64_t> a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

// Greedy clique inside `cand`: repeatedly take the candidate with the most
// neighbours among the remaining candidates.
std::vector<int> greedy_clique(const DenseGraph& g, Words cand) {
  std::vector<int> clique;
  while (!empty_set(cand)) {
    int pick = -1;
    int pick_degree = -1;
    for (int v : members(cand)) {
      const int d = count_common(g.row(v), cand);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    clique.push_back(pick);
    const auto r = g.row(pick);
    for (std::size_t w = 0; w < cand.size(); ++w) cand[w] &= r[w];
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// Number of colours used by sequential greedy colouring of `cand`; an upper
// bound on the clique number of G[cand].
int colour_bound(const DenseGraph& g, const Words& cand) {
  Words uncoloured = cand;
  Words q(cand.size());
  int colours = 0;
  while (!empty_set(uncoloured)) {
    ++colours;
    q = uncoloured;
    for (std::size_t w = 0; w < q.size();) {
      if (q[w] == 0) {
        ++w;
        continue;
      }
      const int v = static_cast<int>(w * 64) + std::countr_zero(q[w]);
      const std::uint64_t keep = ~(std::uint64_t{1} << (v % 64));
      q[w] &= keep;
      uncoloured[w] &= keep;
      const auto r = g.row(v);
      for (std::size_t x = w; x < q.size(); ++x) q[x] &= ~r[x];
    }
  }
  return colours;
}

// ---------------------------------------------------------------------------
// Multi-word branch and bound on a local induced subgraph (BBMC style).

class LocalSolver {
 public:
  /// `vertices` must be sorted ascending.
  LocalSolver(const DenseGraph& g, std::span<const int> vertices) {
    const std::size_t k = vertices.size();
    words_ = (k + 63) / 64;

    // Local adjacency in the given order, by bit extraction from the rows.
    std::vector<int> local_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < k; ++i) local_of[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    Words membership(g.words(), 0);
    for (int v : vertices) membership[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::vector<int>> nbrs(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto r = g.row(vertices[i]);
      for (std::size_t w = 0; w < r.size(); ++w) {
        for (std::uint64_t word = r[w] & membership[w]; word; word &= word - 1) {
          nbrs[i].push_back(local_of[w * 64 + static_cast<std::size_t>(std::countr_zero(word))]);
        }
      }
    }

    // Highest local degree gets the lowest index.
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
      return nbrs[static_cast<std::size_t>(a)].size() > nbrs[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> rank(k);
    ids_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      rank[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
      ids_[i] = vertices[static_cast<std::size_t>(perm[i])];
    }
    adj_.assign(k * words_, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const auto ri = static_cast<std::size_t>(rank[i]);
      for (int j : nbrs[i]) {
        const auto rj = static_cast<std::size_t>(rank[static_cast<std::size_t>(j)]);
        adj_[ri * words_ + rj / 64] |= std::uint64_t{1} << (rj % 64);
      }
    }
  }

  /// Searches for a clique larger than `known`, stopping as soon as one of
  /// size `stop_at` is found. Returns false if the deadline passed first.
  bool solve(int known, int stop_at, std::optional<Clock::time_point> deadline = std::nullopt) {
    best_size_ = known;
    stop_at_ = stop_at;
    deadline_ = deadline;
    aborted_ = false;
    nodes_ = 0;
    best_.clear();
    const std::size_t k = ids_.size();
    if (k == 0 || known >= stop_at) return true;
    Words all(words_, 0);
    for (std::size_t i = 0; i < k; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    current_.clear();
    expand(all, 0);
    return !aborted_;
  }

  int best_size() const noexcept { return best_size_; }

  /// Witness of the last improvement in global ids (empty if none).
  std::vector<int> witness() const {
    std::vector<int> out;
    for (int local : best_) out.push_back(ids_[static_cast<std::size_t>(local)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Level {
    Words uncoloured, q, next;
    std::vector<int> order, colour;
  };

  bool out_of_time() {
    if (aborted_) return true;
    if (deadline_ && (++nodes_ & 1023) == 0 && Clock::now() > *deadline_) aborted_ = true;
    return aborted_;
  }

  // levels_ is a deque: growing it keeps references to shallower levels valid.
  void expand(Words& cand, int depth) {
    if (out_of_time()) return;
    while (levels_.size() <= static_cast<std::size_t>(depth)) {
      levels_.push_back({Words(words_), Words(words_), Words(words_), {}, {}});
    }
    Level& lv = levels_[static_cast<std::size_t>(depth)];
    lv.uncoloured = cand;
    lv.order.clear();
    lv.colour.clear();

    const int size = static_cast<int>(current_.size());
    const int min_colour = std::max(1, best_size_ - size + 1);
    int colour = 0;
    for (;;) {
      std::size_t first = 0;
      while (first < words_ && lv.uncoloured[first] == 0) ++first;
      if (first == words_) break;
      ++colour;
      std::copy(lv.uncoloured.begin(), lv.uncoloured.end(), lv.q.begin());
      for (std::size_t w = first; w < words_;) {
        if (lv.q[w] == 0) {
          ++w;
          continue;
        }
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(lv.q[w]));
        const std::uint64_t keep = ~(std::uint64_t{1} << (v % 64));
        lv.q[w] &= keep;
        lv.uncoloured[w] &= keep;
        const std::uint64_t* row = &adj_[v * words_];
        for (std::size_t x = w; x < words_; ++x) lv.q[x] &= ~row[x];
        if (colour >= min_colour) {
          lv.order.push_back(static_cast<int>(v));
          lv.colour.push_back(colour);
        }
      }
    }

    for (std::size_t i = lv.order.size(); i-- > 0;) {
      if (size + lv.colour[i] <= best_size_ || best_size_ >= stop_at_ || aborted_) return;
      const auto v = static_cast<std::size_t>(lv.order[i]);
      const std::uint64_t* row = &adj_[v * words_];
      bool any = false;
      for (std::size_t x = 0; x < words_; ++x) {
        lv.next[x] = cand[x] & row[x];
        any |= lv.next[x] != 0;
      }
      current_.push_back(static_cast<int>(v));
      if (!any) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current_;
        }
      } else {
        expand(lv.next, depth + 1);
      }
      current_.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  std::vector<int> ids_;
  std::size_t words_ = 0;
  Words adj_;
  std::deque<Level> levels_;
  std::vector<int> current_;
  std::vector<int> best_;
  int best_size_ = 0;
  int stop_at_ = 0;
  std::optional<Clock::time_point> deadline_;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Clique max_clique(const Graph& g, VertexMask universe) {
  WordSearch s{g.adjacency(), {}, kMaxOrder + 1};
  universe &= all_vertices(g.order());
  if (universe) s.expand(0, 0, universe);
  return s.best;
}

Clique max_clique(const Graph& g) { return max_clique(g, all_vertices(g.order())); }

std::vector<int> max_clique(const DenseGraph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  if (sorted.empty()) {
    sorted.resize(static_cast<std::size_t>(g.order()));
    std::iota(sorted.begin(), sorted.end(), 0);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  LocalSolver solver(g, sorted);
  solver.solve(0, static_cast<int>(sorted.size()) + 1);
  return solver.witness();
}

std::vector<int> vertex_clique_numbers(const Graph& g) {
  std::vector<int> c(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    c[static_cast<std::size_t>(v)] = 1 + max_clique(g, g.neighbors(v)).size;
  }
  return c;
}

std::vector<int> edge_clique_numbers(const Graph& g) {
  std::vector<int> c;
  c.reserve(g.size());
  for (const Edge& e : g.edges()) c.push_back(2 + max_clique(g, g.neighbors(e.u) & g.neighbors(e.v)).size);
  return c;
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t sum = 0;
  for (const Edge& e : g.edges()) sum += static_cast<std::uint64_t>(std::popcount(g.neighbors(e.u) & g.neighbors(e.v)));
  return sum / 3;
}

std::uint64_t neighborhood_edge_sum(const Graph& g) {
  std::uint64_t sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    const VertexMask nb = g.neighbors(v);
    std::uint64_t twice = 0;
    for (VertexMask rest = nb; rest; rest &= rest - 1) {
      twice += static_cast<std::uint64_t>(std::popcount(g.neighbors(std::countr_zero(rest)) & nb));
    }
    sum += twice / 2;
  }
  return sum;
}

CliqueProfile clique_profile(const Graph& g) {
  CliqueProfile p;
  p.c_v = vertex_clique_numbers(g);
  p.c_e = edge_clique_numbers(g);
  p.omega = *std::max_element(p.c_v.begin(), p.c_v.end());
  p.t = triangle_count(g);
  p.tv = static_cast<int>(std::count_if(p.c_v.begin(), p.c_v.end(), [](int c) { return c >= 3; }));
  p.omega_upper = p.omega;
  p.c_v_upper = p.c_v;
  p.c_e_upper = p.c_e;
  return p;
}

CliqueProfile clique_profile(const DenseGraph& g, const DenseProfileOptions& options) {
  const int n = g.order();
  const auto N = static_cast<std::size_t>(n);
  const std::optional<Clock::time_point> deadline =
      options.budget_seconds > 0
          ? std::optional(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(options.budget_seconds)))
          : std::nullopt;

  CliqueProfile p;
  if (n == 0) return p;
  const std::vector<Edge> edges = g.edges();
  std::vector<int>& lo_v = p.c_v;
  std::vector<int>& hi_v = p.c_v_upper;
  lo_v.assign(N, 1);
  hi_v.assign(N, 1);

  // Lower bounds on c(uv) collected from witness cliques, indexed u * n + v.
  std::vector<std::uint8_t> edge_lb(N * N, 0);
  const auto record = [&](const std::vector<int>& clique) {
    const int s = static_cast<int>(clique.size());
    for (std::size_t i = 0; i < clique.size(); ++i) {
      auto& lv = lo_v[static_cast<std::size_t>(clique[i])];
      lv = std::max(lv, s);
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        auto& slot = edge_lb[static_cast<std::size_t>(clique[i]) * N + static_cast<std::size_t>(clique[j])];
        slot = static_cast<std::uint8_t>(std::max<int>(slot, std::min(s, 255)));
      }
    }
  };
  const auto with = [](std::vector<int> clique, std::initializer_list<int> extra) {
    clique.insert(clique.end(), extra);
    std::sort(clique.begin(), clique.end());
    return clique;
  };

  // Greedy witnesses and colouring bounds per vertex.
  for (int v = 0; v < n; ++v) {
    const auto r = g.row(v);
    const Words nb(r.begin(), r.end());
    if (empty_set(nb)) continue;
    record(with(greedy_clique(g, nb), {v}));
    hi_v[static_cast<std::size_t>(v)] = 1 + colour_bound(g, nb);
  }

  // Exact vertex values while time remains.
  bool vertices_exact = true;
  for (int v = 0; v < n; ++v) {
    const auto V = static_cast<std::size_t>(v);
    if (lo_v[V] >= hi_v[V]) continue;
    if (deadline && Clock::now() > *deadline) {
      vertices_exact = false;
      break;
    }
    const std::vector<int> nb = members(g.row(v));
    LocalSolver solver(g, nb);
    const bool done = solver.solve(lo_v[V] - 1, hi_v[V] - 1, deadline);
    if (solver.best_size() + 1 > lo_v[V]) record(with(solver.witness(), {v}));
    if (done) {
      hi_v[V] = lo_v[V];
    } else {
      vertices_exact = false;
      break;
    }
  }

  // Edges: greedy witness in the common neighbourhood, then exact search.
  p.c_e.reserve(edges.size());
  p.c_e_upper.reserve(edges.size());
  std::uint64_t common_total = 0;
  for (const Edge& e : edges) {
    const Words common = intersect(g.row(e.u), g.row(e.v));
    const int common_size = count_common(g.row(e.u), g.row(e.v));
    common_total += static_cast<std::uint64_t>(common_size);
    const auto slot = static_cast<std::size_t>(e.u) * N + static_cast<std::size_t>(e.v);
    if (edge_lb[slot] < 2) edge_lb[slot] = 2;
    const int upper = std::min({hi_v[static_cast<std::size_t>(e.u)], hi_v[static_cast<std::size_t>(e.v)],
                                2 + common_size});
    if (edge_lb[slot] < upper) record(with(greedy_clique(g, common), {e.u, e.v}));
    p.c_e.push_back(edge_lb[slot]);
    p.c_e_upper.push_back(upper);
  }
  bool edges_exact = true;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const auto slot = static_cast<std::size_t>(e.u) * N + static_cast<std::size_t>(e.v);
    p.c_e[i] = std::max<int>(p.c_e[i], edge_lb[slot]);
    if (p.c_e[i] >= p.c_e_upper[i]) continue;
    if (!edges_exact || (deadline && Clock::now() > *deadline)) {
      edges_exact = false;
      continue;
    }
    const std::vector<int> common = members(intersect(g.row(e.u), g.row(e.v)));
    LocalSolver solver(g, common);
    const bool done = solver.solve(p.c_e[i] - 2, p.c_e_upper[i] - 2, deadline);
    if (solver.best_size() + 2 > p.c_e[i]) {
      record(with(solver.witness(), {e.u, e.v}));
      p.c_e[i] = solver.best_size() + 2;
    }
    if (done) {
      p.c_e_upper[i] = p.c_e[i];
    } else {
      edges_exact = false;
    }
  }

  p.omega = *std::max_element(lo_v.begin(), lo_v.end());
  p.omega_upper = *std::max_element(hi_v.begin(), hi_v.end());
  p.exact = vertices_exact && edges_exact && p.omega == p.omega_upper;
  p.t = common_total / 3;
  p.tv = static_cast<int>(std::count_if(lo_v.begin(), lo_v.end(), [](int c) { return c >= 3; }));
  return p;
}

namespace {

bool bipartite_by_colouring(int n, auto&& neighbours_of) {
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : neighbours_of(v)) {
        auto& su = side[static_cast<std::size_t>(u)];
        if (su == -1) {
          su = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (su == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Predicates predicates(const Graph& g) {
  const int n = g.order();
  const VertexMask universe = all_vertices(n);
  Predicates p;
  p.connected = is_connected(g);
  p.triangle_free = true;
  p.diamond_free = true;
  for (const Edge& e : g.edges()) {
    const int common = std::popcount(g.neighbors(e.u) & g.neighbors(e.v));
    if (common >= 1) p.triangle_free = false;
    if (common >= 2) p.diamond_free = false;
  }
  p.regular = true;
  for (int v = 1; v < n; ++v) p.regular &= g.degree(v) == g.degree(0);
  p.complete = g.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  p.bipartite = bipartite_by_colouring(n, [&](int v) {
    std::vector<int> out;
    for (VertexMask nb = g.neighbors(v); nb; nb &= nb - 1) out.push_back(std::countr_zero(nb));
    return out;
  });
  // Non-adjacency (with v ~ v) must be an equivalence relation.
  p.complete_multipartite = true;
  for (int v = 0; v < n && p.complete_multipartite; ++v) {
    const VertexMask cls = universe & ~g.neighbors(v);
    for (VertexMask rest = cls; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if ((universe & ~g.neighbors(u)) != cls) {
        p.complete_multipartite = false;
        break;
      }
    }
  }
  return p;
}

Predicates predicates(const DenseGraph& g) {
  const int n = g.order();
  Predicates p;
  p.connected = is_connected(g);
  p.triangle_free = true;
  p.diamond_free = true;
  for (const Edge& e : g.edges()) {
    const int common = count_common(g.row(e.u), g.row(e.v));
    if (common >= 1) p.triangle_free = false;
    if (common >= 2) p.diamond_free = false;
  }
  p.regular = true;
  const int d0 = g.degree(0);
  for (int v = 1; v < n; ++v) p.regular &= g.degree(v) == d0;
  p.complete = g.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  p.bipartite = bipartite_by_colouring(n, [&](int v) { return members(g.row(v)); });

  p.complete_multipartite = true;
  const std::size_t words = g.words();
  std::vector<std::uint64_t> cls(words), other(words);
  const auto non_neighbours = [&](int v, std::vector<std::uint64_t>& out) {
    const auto r = g.row(v);
    for (std::size_t w = 0; w < words; ++w) {
      const int lo = static_cast<int>(w * 64);
      const int valid = std::min(64, n - lo);
      const std::uint64_t mask = valid >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << valid) - 1);
      out[w] = ~r[w] & mask;
    }
  };
  for (int v = 0; v < n && p.complete_multipartite; ++v) {
    non_neighbours(v, cls);
    for (int u : members(cls)) {
      non_neighbours(u, other);
      if (other != cls) {
        p.complete_multipartite = false;
        break;
      }
    }
  }
  return p;
}

}  // namespace loclab
