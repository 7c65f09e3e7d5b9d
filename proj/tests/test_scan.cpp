#include <doctest.h>

#include <cmath>
#include <sstream>

#include "loclab/errors.hpp"
#include "loclab/generators.hpp"
#include "loclab/graph6.hpp"
#include "loclab/scan.hpp"

using namespace loclab;

namespace {

ScanReport enumerate(int n, const std::string& checks, ScanOptions options, std::vector<Violation>* sunk = nullptr) {
  GraphSource src = GraphSource::enumeration(n);
  ViolationSink sink;
  if (sunk) sink = [sunk](const Violation& v) { sunk->push_back(v); };
  return scan(src, parse_check_list(checks), options, sink);
}

// Tolerance that turns every equality case into a violation, to exercise the
// violation paths with a catalogue where everything holds.
Tolerances demanding() {
  Tolerances t;
  t.tol = -1e-3;
  return t;
}

}  // namespace

TEST_CASE("connected graphs on five vertices produce no violations") {
  ScanOptions o;
  o.connected_only = true;
  const ScanReport r = enumerate(5, "all", o);
  CHECK(r.graphs_read == 1024);
  CHECK(r.graphs_processed == 728);
  CHECK(r.skipped_disconnected == 296);
  CHECK(r.binding_violations() == 0);
  CHECK(r.violations.empty());
  CHECK_FALSE(r.partial);
}

TEST_CASE("K4 fails bn without binding") {
  const ScanReport r = enumerate(4, "bn", {});
  REQUIRE(r.per_check.size() == 1);
  CHECK(r.per_check[0].nonbinding_failures == 1);
  CHECK(r.per_check[0].violations == 0);
  CHECK(r.per_check[0].evaluated == 64);
  CHECK(r.per_check[0].applicable == 63);
}

TEST_CASE("reports do not depend on the worker count") {
  ScanOptions one;
  one.top_k = 3;
  one.tolerances = demanding();
  ScanOptions many = one;
  many.workers = 8;
  std::vector<Violation> a, b;
  const ScanReport ra = enumerate(6, "wilf,splus_wilf,walk_nikiforov", one, &a);
  const ScanReport rb = enumerate(6, "wilf,splus_wilf,walk_nikiforov", many, &b);
  CHECK(report_json(ra) == report_json(rb));
  CHECK(report_csv(ra) == report_csv(rb));
  REQUIRE(a.size() == b.size());
  CHECK(!a.empty());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(violation_json(a[i]) == violation_json(b[i]));
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].index <= a[i].index);
  CHECK(a.size() == ra.violations.size());
}

TEST_CASE("stop on violation keeps everything before the first hit") {
  ScanOptions o;
  o.tolerances = demanding();
  o.stop_on_violation = true;
  o.workers = 4;
  const ScanReport r = enumerate(5, "wilf", o);
  CHECK(r.stopped_on_violation);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.graphs_processed < 1024);
  // The empty graph on five vertices (index 0) is complete 1-partite, so
  // wilf is tight there and the very first graph is the first violation.
  CHECK(r.violations.front().index == 0);

  ScanOptions serial = o;
  serial.workers = 1;
  CHECK(report_json(enumerate(5, "wilf", serial)) == report_json(r));
}

TEST_CASE("graph6 streams record parse errors per line") {
  std::istringstream in("C~\nnot graph6\nA_\n\nD??\n");
  GraphSource src = GraphSource::graph6(in, "inline");
  const ScanReport r = scan(src, parse_check_list("wilf"), {});
  CHECK(r.graphs_read == 4);  // records, including the malformed one
  CHECK(r.graphs_processed == 3);
  REQUIRE(r.parse_errors.size() == 1);
  CHECK(r.parse_errors[0].line == 2);

  std::istringstream again("C~\nnot graph6\n");
  GraphSource src2 = GraphSource::graph6(again, "inline");
  ScanOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(scan(src2, parse_check_list("wilf"), strict), ParseError);
}

TEST_CASE("top-k lists are ordered and bounded") {
  ScanOptions o;
  o.top_k = 4;
  const ScanReport r = enumerate(5, "splus_triangle", o);
  REQUIRE(r.per_check.size() == 1);
  const auto& top = r.per_check[0].top_k;
  CHECK(top.size() == 4);
  for (std::size_t i = 1; i < top.size(); ++i) CHECK(ranks_before(top[i - 1], top[i]));
  CHECK(r.argmin("splus_triangle") == &top.front());
  CHECK(r.argmin("wilf") == nullptr);
}

TEST_CASE("extremal search finds a complete bipartite graph for the triangle bound") {
  GraphSource src = GraphSource::enumeration(4);
  ScanOptions o;
  o.connected_only = true;
  const auto best = extremal_search(src, parse_check_id("splus_triangle"), 3, o);
  REQUIRE_FALSE(best.empty());
  CHECK(best.front().slack == doctest::Approx(0.0).scale(1));
  const Graph g = from_graph6(best.front().graph6);
  CHECK(predicates(g).bipartite);
  CHECK(predicates(g).complete_multipartite);
}

TEST_CASE("random sources are reproducible") {
  GraphSource a = GraphSource::random(20, 0.3, 200, 42);
  GraphSource b = GraphSource::random(20, 0.3, 200, 42);
  ScanOptions o;
  o.workers = 3;
  const ScanReport ra = scan(a, parse_check_list("theorems", 3), o);
  const ScanReport rb = scan(b, parse_check_list("theorems", 3), {});
  CHECK(report_json(ra) == report_json(rb));
  CHECK(ra.binding_violations() == 0);
  CHECK(ra.seed == 42);
}

TEST_CASE("rounding for stable output") {
  CHECK(round12(0.1 + 0.2) == 0.3);
  CHECK(round12(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(round12(-1e-300 * 1e-300)));
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
}

TEST_CASE("empty check lists are rejected") {
  GraphSource src = GraphSource::enumeration(3);
  CHECK_THROWS_AS(scan(src, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(GraphSource::enumeration(8), CapabilityError);
  CHECK_THROWS(GraphSource::random(65, 0.5, 1, 1));
}
