#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loclab/cliques.hpp"
#include "loclab/graph.hpp"
#include "loclab/spectra.hpp"

namespace loclab {

enum class CheckKind { theorem, conjecture };

/// Static description of one inequality. Walk entries take a parameter r and
/// are addressed as "walk_nikiforov(3)"; "walk_nikiforov:3" is accepted too.
struct CatalogueEntry {
  std::string_view id;
  CheckKind kind;
  std::string_view anchor;      // literature name of the statement
  std::string_view statement;   // lhs relation rhs, plain text
  std::string_view hypotheses;  // empty when none
  bool strict = false;
  bool walk = false;
};

std::span<const CatalogueEntry> catalogue();

inline constexpr int kMaxWalkR = 10;
inline constexpr int kDefaultWalkR = 6;

struct CheckId {
  const CatalogueEntry* entry = nullptr;
  int r = 0;  // walk entries only
  std::string name() const;
};

/// Throws std::invalid_argument listing the catalogue on an unknown id, or
/// naming the range when r is outside [1, 10].
CheckId parse_check_id(std::string_view text);

/// Expands "all", "theorems", "conjectures" or a comma list. Walk entries
/// given without r expand to r = 1..max_walk_r.
std::vector<CheckId> parse_check_list(std::string_view text, int max_walk_r = kDefaultWalkR);

struct Tolerances {
  double tol = 1e-9;     // holds iff slack >= -tol * max(1, |lhs|, |rhs|)
  double eq_tol = 1e-8;  // equality iff |slack| <= eq_tol * max(1, |lhs|, |rhs|)
};

struct InequalityResult {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;
  bool applicable = true;
  bool equality = false;
  /// False when the clique quantities were only bracketed and the bracket
  /// straddles the boundary; holds is then false but unconfirmed.
  bool certain = true;
  std::string notes;

  bool binding_violation() const noexcept { return applicable && certain && !holds; }
};

/// Everything a check can need, computed once per graph and shared read-only.
struct GraphContext {
  int n = 0;
  std::uint64_t m = 0;
  Spectrum spectrum;
  CliqueProfile profile;
  Predicates predicates;
  std::vector<WalkTable> walks;  // walks[r-1]; stops early on overflow
  std::optional<Graph> graph;    // present for graphs of order <= 64

  static GraphContext build(const Graph& g, int max_walk_r = kMaxWalkR);
  /// Large graphs carry no walk tables; walk checks report not applicable.
  static GraphContext build(const DenseGraph& g, const DenseProfileOptions& options = {});
};

InequalityResult check(const CheckId& id, const GraphContext& ctx, const Tolerances& tol = {});
InequalityResult check(std::string_view id, const GraphContext& ctx, const Tolerances& tol = {});

struct CheckAllOptions {
  int max_walk_r = kDefaultWalkR;
  Tolerances tolerances;
};

/// Every catalogue entry (walk entries for r = 1..max_walk_r), ordered by id.
std::vector<InequalityResult> check_all(const GraphContext& ctx, const CheckAllOptions& options = {});

/// Weighted edge-local spectral Turan bound with weights aligned to
/// g.edges(). Not applicable on disconnected graphs.
InequalityResult weighted_edge_local_check(const Graph& g, std::span<const double> weights,
                                           const Tolerances& tol = {});

/// Reads "u,v,w" lines (header row required). Edges of g missing from the
/// file get weight 1; a listed pair that is not an edge, a duplicate or a
/// negative weight throws ParseError with the byte offset.
std::vector<double> read_weight_csv(std::istream& in, const Graph& g);

/// True iff y is weakly majorized by x: every prefix sum of y sorted
/// descending is at most the matching prefix sum of x. The shorter vector is
/// padded with zeros.
bool weak_majorizes(std::span<const double> x, std::span<const double> y);

/// (sum |x_i|^p)^(1/p).
double p_norm(std::span<const double> x, double p);

}  // namespace loclab
