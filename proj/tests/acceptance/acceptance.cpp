// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset, e.g. `loclab-acceptance 1 4 8`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "loclab/generators.hpp"
#include "loclab/inequalities.hpp"
#include "loclab/motzkin.hpp"
#include "loclab/rng.hpp"
#include "loclab/scan.hpp"
#include "loclab/spectra.hpp"

#ifndef LOCLAB_DATA_DIR
#define LOCLAB_DATA_DIR "tests/data"
#endif

using namespace loclab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Calls fn on every connected labeled graph with 1..max_n vertices.
void for_connected(int max_n, const std::function<void(const Graph&)>& fn) {
  for (int n = 1; n <= max_n; ++n) {
    const LabeledEnumeration all(n);
    for (std::uint64_t i = 0; i < all.count(); ++i) {
      const Graph g = all.at(i);
      if (is_connected(g)) fn(g);
    }
  }
}

// Scans n = 1..max_n and sums the counters. `transcript` collects every
// per-order report plus the violation lines, for byte comparisons.
ScanReport scan_enumerations(int max_n, const std::string& checks, int w, std::string* transcript = nullptr) {
  ScanOptions o;
  o.connected_only = true;
  o.max_walk_r = 6;
  o.workers = w;
  ScanReport total;
  std::string lines;
  for (int n = 1; n <= max_n; ++n) {
    GraphSource src = GraphSource::enumeration(n);
    ScanReport r = scan(src, parse_check_list(checks, 6), o,
                        [&](const Violation& v) { lines += violation_json(v) + "\n"; });
    if (transcript) lines += report_json(r) + "\n" + report_csv(r);
    if (total.per_check.empty()) {
      total = std::move(r);
      continue;
    }
    total.graphs_read += r.graphs_read;
    total.graphs_processed += r.graphs_processed;
    for (std::size_t k = 0; k < r.per_check.size(); ++k) {
      total.per_check[k].evaluated += r.per_check[k].evaluated;
      total.per_check[k].applicable += r.per_check[k].applicable;
      total.per_check[k].violations += r.per_check[k].violations;
    }
    total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
  }
  if (transcript) *transcript = lines;
  return total;
}

std::string first_violation(const ScanReport& r) {
  if (r.violations.empty()) return "";
  const Violation& v = r.violations.front();
  return fmt(" first: %s on %s slack %.3g", v.check.c_str(), v.graph6.c_str(), v.slack);
}

// 1. Trace identities against the combinatorial triangle counter.
Outcome spectral_identities() {
  std::uint64_t graphs = 0, bad = 0;
  double worst1 = 0, worst2 = 0, worst3 = 0;
  const auto test = [&](const Graph& g) {
    ++graphs;
    const Spectrum s = spectrum(g);
    const double n = g.order(), m = static_cast<double>(g.size()), t = static_cast<double>(triangle_count(g));
    const double e1 = std::abs(power_sum(s, 1)), e2 = std::abs(power_sum(s, 2) - 2 * m),
                 e3 = std::abs(power_sum(s, 3) - 6 * t);
    worst1 = std::max(worst1, e1 / n);
    worst2 = std::max(worst2, e2 / std::max(1.0, m));
    worst3 = std::max(worst3, e3 / (1 + t));
    if (e1 > 1e-8 * n || e2 > 1e-7 * m || e3 > 1e-6 * (1 + t)) ++bad;
  };
  for_connected(6, test);
  for (std::uint64_t i = 0; i < 1000; ++i) test(random_gnp(30, 0.4, stream_seed(kSeed, i)));
  return {bad == 0, fmt("%llu graphs, %llu outside tolerance; worst |sum l|/n %.2g, |sum l^2-2m|/m %.2g, "
                        "|sum l^3-6t|/(1+t) %.2g",
                        (unsigned long long)graphs, (unsigned long long)bad, worst1, worst2, worst3)};
}

// 2. Every theorem with satisfied hypotheses holds on connected graphs n <= 7.
Outcome theorem_soundness() {
  const ScanReport r = scan_enumerations(7, "theorems", workers());
  std::uint64_t evaluated = 0;
  for (const auto& c : r.per_check) evaluated += c.applicable;
  return {r.binding_violations() == 0,
          fmt("%llu graphs, %zu checks, %llu applicable evaluations, %llu violations",
              (unsigned long long)r.graphs_processed, r.per_check.size(), (unsigned long long)evaluated,
              (unsigned long long)r.binding_violations()) +
              first_violation(r)};
}

// 3. Conjectures on n <= 7 (built in) and the geng corpora for n = 8, 9.
Outcome conjectures() {
  const ScanReport built_in = scan_enumerations(7, "conjectures", workers());
  std::uint64_t corpus_graphs = 0, corpus_violations = 0;
  std::string first;
  for (int n : {8, 9}) {
    const std::string path = std::string(LOCLAB_DATA_DIR) + "/connected" + std::to_string(n) + ".g6";
    std::ifstream in(path);
    if (!in) return {false, "missing corpus " + path};
    GraphSource src = GraphSource::graph6(in, path);
    ScanOptions o;
    o.strict = true;
    o.connected_only = true;
    o.max_walk_r = 6;
    o.workers = workers();
    const ScanReport r = scan(src, parse_check_list("conjectures", 6), o);
    if (r.skipped_disconnected != 0) return {false, path + " contains disconnected graphs"};
    corpus_graphs += r.graphs_processed;
    corpus_violations += r.binding_violations();
    if (first.empty()) first = first_violation(r);
  }
  const bool counts_ok = corpus_graphs == 11117 + 261080;
  return {built_in.binding_violations() == 0 && corpus_violations == 0 && counts_ok,
          fmt("built-in n<=7: %llu graphs, %llu violations; corpora n=8,9: %llu graphs%s, %llu violations",
              (unsigned long long)built_in.graphs_processed, (unsigned long long)built_in.binding_violations(),
              (unsigned long long)corpus_graphs, counts_ok ? "" : " (expected 272197)",
              (unsigned long long)corpus_violations) +
              first_violation(built_in) + first};
}

// 4. Equality cases.
Outcome equality_fixtures() {
  std::vector<std::string> misses;
  std::size_t total = 0;
  const auto expect = [&](const std::string& id, const Graph& g, const std::string& label) {
    ++total;
    const InequalityResult r = check(id, GraphContext::build(g));
    if (!(r.equality && std::abs(r.slack) <= 1e-8 * std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)}))) {
      misses.push_back(id + "@" + label + fmt("(slack %.3g)", r.slack));
    }
  };
  const std::vector<std::pair<std::vector<int>, std::string>> parts = {
      {{2, 2, 2}, "K2,2,2"}, {{3, 3, 3}, "K3,3,3"}, {{2, 2, 2, 2}, "K2,2,2,2"}};
  for (const auto& [sizes, label] : parts) {
    const Graph g = complete_multipartite(sizes);
    for (const char* id : {"wilf", "spectral_turan", "edge_local_spectral_turan", "splus_wilf"}) expect(id, g, label);
  }
  for (const auto& [a, b] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 5}}) {
    expect("splus_triangle", complete_bipartite(a, b), fmt("K%d,%d", a, b));
  }
  expect("local_bn", disjoint_union(complete_bipartite(2, 2), complete_bipartite(3, 3)), "K2,2+K3,3");
  std::string detail = fmt("%zu/%zu fixtures tagged equality", total - misses.size(), total);
  for (const auto& m : misses) detail += "; missed " + m;
  // For bipartite graphs t = 0 and sqrt(s+) = lambda1 = sqrt(ab), so the bound
  // is tight only when sqrt(ab) = (a+b)/2, i.e. a = b.
  for (const auto& [a, b] : {std::pair{2, 3}, std::pair{4, 5}}) {
    detail += fmt("; K%d,%d: (a+b)/2 - sqrt(ab) = %.4f > 0", a, b, (a + b) / 2.0 - std::sqrt(double(a) * b));
  }
  return {misses.empty(), detail};
}

// 5. Diamond-free suite.
Outcome diamond_free() {
  std::uint64_t graphs = 0, applicable_lbd = 0, failures = 0, identity_failures = 0;
  std::string first;
  const auto ids = std::vector<CheckId>{parse_check_id("bn"), parse_check_id("bn_triangle_diamond"),
                                        parse_check_id("local_bn_diamond")};
  for_connected(7, [&](const Graph& g) {
    const Predicates p = predicates(g);
    if (!p.diamond_free) return;
    ++graphs;
    const GraphContext ctx = GraphContext::build(g, 1);
    for (const CheckId& id : ids) {
      const InequalityResult r = check(id, ctx);
      if (id.name() == "local_bn_diamond" && r.applicable) ++applicable_lbd;
      // bn is only claimed for G != K_n (K1, K2, K3 are the complete diamond-free graphs).
      if (r.applicable && !r.holds) {
        ++failures;
        if (first.empty()) first = fmt(" first: %s on %s", r.id.c_str(), to_graph6(g).c_str());
      }
    }
    // Exact form of the identity: c(e) is 2 or 3 and the 3-edges number 3t.
    std::uint64_t threes = 0;
    bool only_2_3 = true;
    double sum = 0.0;
    for (int c : ctx.profile.c_e) {
      only_2_3 = only_2_3 && (c == 2 || c == 3);
      threes += c == 3 ? 1 : 0;
      sum += 2.0 * (1.0 - 1.0 / c);
    }
    const double target = static_cast<double>(g.size() + ctx.profile.t);
    if (!only_2_3 || threes != 3 * ctx.profile.t || std::abs(sum - target) > 1e-9 * std::max(1.0, target)) {
      ++identity_failures;
    }
  });
  return {failures == 0 && identity_failures == 0,
          fmt("%llu connected diamond-free graphs; bn, bn_triangle_diamond failures %llu; local_bn_diamond "
              "applicable on %llu; identity failures %llu",
              (unsigned long long)graphs, (unsigned long long)failures, (unsigned long long)applicable_lbd,
              (unsigned long long)identity_failures) +
              first};
}

// 6. G(1000, 1/2) statistics.
Outcome random_graphs() {
  ExperimentOptions o;
  o.clique_budget_seconds = 20.0;
  o.workers = workers();
  const RandomExperiment e = random_experiment(1000, 0.5, 5, kSeed, o);
  const double l1 = e.lambda1_over_n.mean, l2 = e.lambda2_over_sqrt_n.mean, sp = e.s_plus_over_n2.mean,
               sm = e.s_minus_over_n2.mean;
  const std::uint64_t viol = e.violations_of("vertex_local_splus_wilf") + e.violations_of("local_bn");
  const bool pass = e.results.size() == 5 && l1 >= 0.48 && l1 <= 0.52 && l2 <= 1.2 && sp >= 0.355 &&
                    sp <= 0.395 && sm >= 0.105 && sm <= 0.145 && viol == 0;
  int exact = 0;
  for (const TrialResult& t : e.results) exact += t.exact ? 1 : 0;
  return {pass, fmt("5 trials: l1/n %.4f, l2/sqrt(n) %.4f, s+/n^2 %.4f, s-/n^2 %.4f, omega >= %.1f; "
                    "violations %llu (inconclusive %llu, all checks %llu); exact clique profiles %d/5",
                    l1, l2, sp, sm, e.omega.mean, (unsigned long long)viol, (unsigned long long)e.inconclusive,
                    (unsigned long long)e.violations, exact)};
}

// 7. Motzkin-Straus values.
Outcome motzkin_straus() {
  std::uint64_t graphs = 0, classical_bad = 0, weighted_bad = 0, witness_bad = 0, nonmonotone = 0;
  double worst_classical = 0.0, worst_weighted = 0.0, worst_witness = 1.0;
  const auto test = [&](const Graph& g) {
    ++graphs;
    const CliqueProfile prof = clique_profile(g);
    const SimplexResult c = maximize_simplex(g, scheme_weights(g, WeightScheme::classical, prof));
    const double gap = std::abs(c.value - (1.0 - 1.0 / prof.omega));
    worst_classical = std::max(worst_classical, gap);
    classical_bad += gap > 1e-6 ? 1 : 0;
    nonmonotone += c.monotone ? 0 : 1;
    const std::vector<double> x = clique_witness(g);
    for (WeightScheme s : {WeightScheme::avg_local, WeightScheme::geo_local}) {
      const std::vector<double> w = scheme_weights(g, s, prof);
      const SimplexResult r = maximize_simplex(g, w);
      worst_weighted = std::max(worst_weighted, r.value);
      weighted_bad += r.value > 1.0 + 1e-6 ? 1 : 0;
      nonmonotone += r.monotone ? 0 : 1;
      if (g.size() > 0) {
        const double v = quad_form(g, w, x);
        worst_witness = std::min(worst_witness, v);
        witness_bad += v < 1.0 - 1e-6 ? 1 : 0;
      }
    }
  };
  for (int n = 1; n <= 6; ++n) {
    const LabeledEnumeration all(n);
    for (std::uint64_t i = 0; i < all.count(); ++i) test(all.at(i));
  }
  for (const Graph& g : {petersen_graph(), complete_graph(4), diamond_graph()}) test(g);
  return {classical_bad == 0 && weighted_bad == 0 && witness_bad == 0 && nonmonotone == 0,
          fmt("%llu graphs; classical worst |F - (1-1/omega)| %.2g; weighted max %.12f; witness min %.12f; "
              "failures %llu/%llu/%llu; non-monotone runs %llu",
              (unsigned long long)graphs, worst_classical, worst_weighted, worst_witness,
              (unsigned long long)classical_bad, (unsigned long long)weighted_bad, (unsigned long long)witness_bad,
              (unsigned long long)nonmonotone)};
}

// 8. Weak majorization implies p-norm dominance.
Outcome majorization() {
  Rng rng(kSeed);
  std::uint64_t pairs = 0, bad = 0;
  while (pairs < 10000) {
    const std::size_t len = 1 + rng.below(8);
    std::vector<double> x(len);
    for (double& v : x) v = rng.uniform() * 10.0;
    // y = shrink * (convex mix of permutations of x), so y is weakly majorized by x.
    std::vector<double> y(len, 0.0);
    const int mixes = 1 + static_cast<int>(rng.below(3));
    std::vector<double> perm = x;
    for (int k = 0; k < mixes; ++k) {
      for (std::size_t i = len; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      for (std::size_t i = 0; i < len; ++i) y[i] += perm[i] / mixes;
    }
    const double shrink = rng.uniform();
    for (double& v : y) v *= shrink;
    if (!weak_majorizes(x, y)) continue;  // rounding at the boundary
    ++pairs;
    for (double p : {1.5, 2.0, 3.0}) {
      if (p_norm(y, p) > p_norm(x, p) * (1 + 1e-12)) ++bad;
    }
  }
  // Equality spot check: x against itself.
  std::vector<double> x{4.0, 1.5, 0.0, 2.25};
  bool self = weak_majorizes(x, x);
  for (double p : {1.5, 2.0, 3.0}) self = self && p_norm(x, p) == p_norm(std::vector<double>(x), p);
  return {bad == 0 && self, fmt("%llu pairs x 3 exponents, %llu norm inversions; x = y check %s",
                                (unsigned long long)pairs, (unsigned long long)bad, self ? "ok" : "failed")};
}

// 9. Byte-identical reports across reruns and worker counts.
Outcome determinism() {
  const auto run = [](int w) {
    std::string transcript;
    scan_enumerations(7, "conjectures", w, &transcript);
    return transcript;
  };
  const std::string a = run(1), b = run(1), c = run(8);
  return {a == b && a == c, fmt("report %zu bytes; rerun %s; 1 vs 8 workers %s", a.size(),
                                a == b ? "identical" : "differs", a == c ? "identical" : "differs")};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "spectral identities", spectral_identities},
      {2, "theorem soundness n<=7", theorem_soundness},
      {3, "conjectures n<=9", conjectures},
      {4, "equality fixtures", equality_fixtures},
      {5, "diamond-free suite", diamond_free},
      {6, "G(1000,1/2) experiment", random_graphs},
      {7, "Motzkin-Straus", motzkin_straus},
      {8, "majorization", majorization},
      {9, "determinism", determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool ok = true;
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d %s: %s (%.1f s) %s\n", c.number, c.name, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
