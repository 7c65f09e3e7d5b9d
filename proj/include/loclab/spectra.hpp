#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "loclab/eigen.hpp"
#include "loclab/graph.hpp"

namespace loclab {

inline constexpr double kDefaultSignThreshold = 1e-8;

/// Adjacency spectrum with the square energies derived from it.
struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double sign_threshold = 0.0;      // |lambda| <= threshold counts as zero
  double s_plus = 0.0;
  double s_minus = 0.0;
  int n_plus = 0;
  int n_minus = 0;

  /// 1-based access; eigenvalues past the order read as 0.
  double lambda(int i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) <= eigenvalues.size()
               ? eigenvalues[static_cast<std::size_t>(i) - 1]
               : 0.0;
  }
};

/// Classifies signs with threshold rel_threshold * max(1, lambda_1).
Spectrum make_spectrum(std::vector<double> descending, double rel_threshold = kDefaultSignThreshold);

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix adjacency_matrix(const DenseGraph& g);

Spectrum spectrum(const Graph& g, double rel_threshold = kDefaultSignThreshold);
Spectrum spectrum(const DenseGraph& g, double rel_threshold = kDefaultSignThreshold);

/// (s_plus, s_minus) recomputed from the eigenvalues.
std::pair<double, double> square_energies(const Spectrum& s);

/// Sum of lambda_i^p.
double power_sum(const Spectrum& s, int p);

/// Walk counts with r vertices: per_vertex[v] = (A^{r-1} 1)_v.
struct WalkTable {
  int r = 1;
  std::vector<std::uint64_t> per_vertex;
  std::uint64_t total = 0;
};

/// Exact counts by repeated neighbour sums. Throws OverflowError when a
/// count leaves 64 bits, and std::invalid_argument for r < 1.
WalkTable walk_counts(const Graph& g, int r);

/// Tables for r = 1, 2, ... up to r_max, stopping early (without throwing)
/// at the first r whose counts overflow.
std::vector<WalkTable> walk_sequence(const Graph& g, int r_max);

/// Largest eigenvalue of the weighted adjacency matrix. `weights` is aligned
/// with g.edges(); negative entries throw std::invalid_argument.
double weighted_spectral_radius(const Graph& g, std::span<const double> weights);

}  // namespace loclab
