#include "loclab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "loclab/errors.hpp"

namespace loclab {

Spectrum make_spectrum(std::vector<double> descending, double rel_threshold) {
  Spectrum s;
  s.eigenvalues = std::move(descending);
  const double top = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  s.sign_threshold = rel_threshold * std::max(1.0, top);
  for (double x : s.eigenvalues) {
    if (x > s.sign_threshold) {
      s.s_plus += x * x;
      ++s.n_plus;
    } else if (x < -s.sign_threshold) {
      s.s_minus += x * x;
      ++s.n_minus;
    }
  }
  return s;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

SymmetricMatrix adjacency_matrix(const DenseGraph& g) {
  SymmetricMatrix a(g.order());
  for (int u = 0; u < g.order(); ++u) {
    const auto r = g.row(u);
    for (std::size_t w = 0; w < r.size(); ++w) {
      for (std::uint64_t word = r[w]; word; word &= word - 1) {
        a(u, static_cast<int>(w * 64) + std::countr_zero(word)) = 1.0;
      }
    }
  }
  return a;
}

Spectrum spectrum(const Graph& g, double rel_threshold) {
  return make_spectrum(symmetric_eigenvalues(adjacency_matrix(g)), rel_threshold);
}

Spectrum spectrum(const DenseGraph& g, double rel_threshold) {
  return make_spectrum(symmetric_eigenvalues(adjacency_matrix(g)), rel_threshold);
}

std::pair<double, double> square_energies(const Spectrum& s) {
  double plus = 0.0, minus = 0.0;
  for (double x : s.eigenvalues) {
    if (x > s.sign_threshold) plus += x * x;
    else if (x < -s.sign_threshold) minus += x * x;
  }
  return {plus, minus};
}

double power_sum(const Spectrum& s, int p) {
  double total = 0.0;
  for (double x : s.eigenvalues) total += std::pow(x, p);
  return total;
}

namespace {

std::vector<std::uint64_t> next_walks(const Graph& g, const std::vector<std::uint64_t>& prev, int r) {
  std::vector<std::uint64_t> next(prev.size(), 0);
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t sum = 0;
    for (VertexMask nb = g.neighbors(v); nb; nb &= nb - 1) {
      if (__builtin_add_overflow(sum, prev[static_cast<std::size_t>(std::countr_zero(nb))], &sum)) {
        throw OverflowError("walk count with r = " + std::to_string(r) +
                            " overflows 64 bits; use a smaller r");
      }
    }
    next[static_cast<std::size_t>(v)] = sum;
  }
  return next;
}

WalkTable finish(int r, std::vector<std::uint64_t> per_vertex) {
  WalkTable t;
  t.r = r;
  for (std::uint64_t x : per_vertex) {
    if (__builtin_add_overflow(t.total, x, &t.total)) {
      throw OverflowError("total walk count with r = " + std::to_string(r) +
                          " overflows 64 bits; use a smaller r");
    }
  }
  t.per_vertex = std::move(per_vertex);
  return t;
}

}  // namespace

WalkTable walk_counts(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("walk length r must be at least 1");
  std::vector<std::uint64_t> w(static_cast<std::size_t>(g.order()), 1);
  for (int k = 2; k <= r; ++k) w = next_walks(g, w, k);
  return finish(r, std::move(w));
}

std::vector<WalkTable> walk_sequence(const Graph& g, int r_max) {
  std::vector<WalkTable> out;
  if (r_max < 1) return out;
  std::vector<std::uint64_t> w(static_cast<std::size_t>(g.order()), 1);
  try {
    out.push_back(finish(1, w));
    for (int k = 2; k <= r_max; ++k) {
      w = next_walks(g, w, k);
      out.push_back(finish(k, w));
    }
  } catch (const OverflowError&) {
  }
  return out;
}

double weighted_spectral_radius(const Graph& g, std::span<const double> weights) {
  if (weights.size() != g.size()) {
    throw std::invalid_argument("weight vector length must equal the edge count");
  }
  SymmetricMatrix a(g.order());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw std::invalid_argument("edge weights must be nonnegative");
    a.set(g.edges()[i].u, g.edges()[i].v, weights[i]);
  }
  return symmetric_eigenvalues(std::move(a)).front();
}

}  // namespace loclab
