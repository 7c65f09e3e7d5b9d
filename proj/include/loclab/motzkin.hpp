#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "loclab/cliques.hpp"
#include "loclab/graph.hpp"

namespace loclab {

enum class WeightScheme { classical, avg_local, geo_local, custom };

std::optional<WeightScheme> parse_weight_scheme(std::string_view name);
std::string_view scheme_name(WeightScheme scheme);

/// Edge weights aligned with g.edges(). classical is all ones; avg_local
/// averages c/(c-1) over the two ends; geo_local takes their geometric mean.
/// `custom` is not derivable and throws std::invalid_argument.
std::vector<double> scheme_weights(const Graph& g, WeightScheme scheme, const CliqueProfile& profile);
std::vector<double> scheme_weights(const Graph& g, WeightScheme scheme);

/// F(x) = sum over edges uv of 2 w_uv x_u x_v. Throws std::invalid_argument
/// when x is off the simplex by more than 1e-9 (negative entry or sum).
double quad_form(const Graph& g, std::span<const double> weights, std::span<const double> x);

struct SimplexOptions {
  int restarts = 32;              // Dirichlet(1) interior starts
  int max_clique_starts = 64;     // maximal cliques used as extra starts
  int max_iterations = 10000;
  double tolerance = 1e-12;       // stop when successive values differ less
  std::uint64_t seed = 0x5eed;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int starts = 0;
  bool monotone = true;  // no iteration lowered the objective by > 1e-12
};

/// Replicator dynamics x_v <- x_v (Wx)_v / F(x) from every start; returns the
/// best end point (ties go to the lexicographically smaller x). Vertices with
/// an all-zero weight row never enter the support.
SimplexResult maximize_simplex(const Graph& g, std::span<const double> weights,
                               const SimplexOptions& options = {});

/// Uniform distribution on a maximum clique. For every scheme above this
/// attains 1 - 1/omega (classical) or 1 (avg_local, geo_local) exactly, since
/// every member of a maximum clique has c(v) = omega.
std::vector<double> clique_witness(const Graph& g);

}  // namespace loclab
