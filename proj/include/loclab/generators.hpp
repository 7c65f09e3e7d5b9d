#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "loclab/graph.hpp"

namespace loclab {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // n >= 1
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> part_sizes);
Graph petersen_graph();
Graph diamond_graph();  // K4 minus an edge
Graph bowtie_graph();   // two triangles sharing one vertex

/// Parses "name[:params]" and '+'-joined disjoint unions, e.g.
/// "complete:4", "cmp:2,2,2", "kab:3,3", "petersen", "cmp:2,2+cmp:3,3".
/// Throws std::invalid_argument on unknown names or bad parameters.
Graph named_graph(std::string_view spec);

/// G(n, p) on at most 64 vertices. Pairs (u, v), u < v, are visited in
/// lexicographic order and each consumes one uniform draw from Rng(seed).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// G(n, p) on up to 4096 vertices, same pair order and draw rule.
DenseGraph random_gnp_dense(int n, double p, std::uint64_t seed);

/// Labeled graphs on n <= 7 vertices indexed by their edge mask: bit k of
/// the index selects the k-th pair in lexicographic (u, v) order.
class LabeledEnumeration {
 public:
  static constexpr int kMaxBuiltinOrder = 7;

  /// Throws CapabilityError for n > 7.
  explicit LabeledEnumeration(int n);

  int order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_; }
  Graph at(std::uint64_t index) const;

 private:
  int n_;
  int pairs_;
};

}  // namespace loclab
