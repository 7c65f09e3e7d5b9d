#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <string>
#include <vector>

#include "loclab/graph6.hpp"
#include "loclab/inequalities.hpp"

namespace loclab {

/// Where a scan gets its graphs. Every graph carries an index: the line
/// number for graph6 streams, the edge mask for labeled enumeration, and
/// the trial number for random graphs (drawn from stream_seed(seed, trial)).
struct GraphSource {
  enum class Kind { graph6_stream, labeled_enumeration, random };

  Kind kind = Kind::labeled_enumeration;
  std::istream* stream = nullptr;
  std::string label;  // file name or "-" for graph6 streams
  int n = 0;
  std::uint64_t lo = 0;  // enumeration slice [lo, hi)
  std::uint64_t hi = std::numeric_limits<std::uint64_t>::max();
  double p = 0.5;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static GraphSource graph6(std::istream& in, std::string label);
  /// Throws CapabilityError for n > 7; hi is clamped to the graph count.
  static GraphSource enumeration(int n, std::uint64_t lo = 0,
                                 std::uint64_t hi = std::numeric_limits<std::uint64_t>::max());
  /// n <= 64, 0 < p < 1.
  static GraphSource random(int n, double p, std::uint64_t trials, std::uint64_t seed);
};

struct ScanOptions {
  bool connected_only = false;
  bool stop_on_violation = false;
  bool strict = false;  // a malformed graph6 line aborts instead of being recorded
  int top_k = 5;
  int max_walk_r = kDefaultWalkR;
  Tolerances tolerances;
  int workers = 1;
  double budget_seconds = 0.0;  // <= 0: no wall-clock limit
};

struct Violation {
  std::uint64_t index = 0;
  std::string graph6;
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

struct RankedGraph {
  double slack = 0.0;
  std::string graph6;
  std::uint64_t index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Order used for top-k lists and argmins: slack, then graph6, then index.
bool ranks_before(const RankedGraph& a, const RankedGraph& b);

struct CheckSummary {
  std::string id;
  CheckKind kind = CheckKind::theorem;
  std::uint64_t evaluated = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;           // applicable, certain, slack < -tol
  std::uint64_t nonbinding_failures = 0;  // fails but hypotheses unmet
  std::uint64_t inconclusive = 0;
  std::uint64_t equalities = 0;           // applicable and |slack| <= eq_tol
  std::vector<RankedGraph> top_k;         // smallest slack among applicable
};

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

struct ScanReport {
  std::string source;
  std::vector<std::string> checks;
  ScanOptions options;
  std::uint64_t seed = 0;  // echoed for random sources
  std::uint64_t graphs_read = 0;
  std::uint64_t graphs_processed = 0;
  std::uint64_t skipped_disconnected = 0;
  std::vector<CheckSummary> per_check;
  std::vector<Violation> violations;  // in source order
  std::vector<ParseIssue> parse_errors;
  bool stopped_on_violation = false;
  bool partial = false;  // wall-clock budget ran out

  std::uint64_t binding_violations() const;
  /// Smallest-slack graph of one check, or nullptr when nothing applied.
  const RankedGraph* argmin(std::string_view check) const;
};

/// Called once per binding violation, in source order, as chunks complete.
using ViolationSink = std::function<void(const Violation&)>;

/// Evaluates every check on every graph. Work is split over index ranges
/// and merged in order, so the report does not depend on options.workers.
/// Throws std::invalid_argument on an empty check list and ParseError on a
/// malformed line when options.strict is set.
ScanReport scan(GraphSource& source, const std::vector<CheckId>& checks, const ScanOptions& options,
                const ViolationSink& sink = {});

/// The k smallest-slack graphs for one check.
std::vector<RankedGraph> extremal_search(GraphSource& source, const CheckId& check, int k,
                                         const ScanOptions& options = {});

/// Rounds to 12 significant digits so printed reports are byte-stable.
double round12(double x);

/// Summary object; floats rounded with round12. Worker count is left out so
/// reports from different worker counts compare equal.
std::string report_json(const ScanReport& report);
/// One row per check.
std::string report_csv(const ScanReport& report);
std::string violation_json(const Violation& v);

// ---------------------------------------------------------------------------
// Random-graph experiments beyond 64 vertices.

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for one trial
};

struct TrialResult {
  std::uint64_t trial = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double s_plus = 0.0;
  double s_minus = 0.0;
  int omega = 0;
  int omega_upper = 0;
  double mean_cv = 0.0;  // from the certified lower bounds when inexact
  double mean_ce = 0.0;
  bool exact = true;
  double seconds = 0.0;
  std::vector<InequalityResult> checks;
};

struct RandomExperiment {
  int n = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double clique_budget_seconds = 0.0;
  std::vector<TrialResult> results;
  MeanSd lambda1_over_n, lambda2_over_sqrt_n, s_plus_over_n2, s_minus_over_n2, omega, mean_cv, mean_ce;
  std::uint64_t violations = 0;    // certain, applicable
  std::uint64_t inconclusive = 0;
  bool partial = false;            // overall budget ran out before all trials

  std::uint64_t violations_of(std::string_view check) const;
};

struct ExperimentOptions {
  double clique_budget_seconds = 30.0;  // per trial; <= 0 for exact search
  double budget_seconds = 0.0;          // whole run; <= 0 for none
  int workers = 1;
  Tolerances tolerances;
};

/// Checks splus_wilf, vertex_local_splus_wilf and local_bn on each trial.
/// Trial i uses random_gnp_dense(n, p, stream_seed(seed, i)).
RandomExperiment random_experiment(int n, double p, std::uint64_t trials, std::uint64_t seed,
                                   const ExperimentOptions& options = {});

std::string experiment_json(const RandomExperiment& e);

}  // namespace loclab
