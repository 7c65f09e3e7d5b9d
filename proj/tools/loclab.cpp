// Command-line front end: one subcommand per capability, JSON on stdout.
// Exit codes: 0 clean, 1 binding violation found, 2 operational error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loclab/cliques.hpp"
#include "loclab/errors.hpp"
#include "loclab/generators.hpp"
#include "loclab/graph6.hpp"
#include "loclab/inequalities.hpp"
#include "loclab/motzkin.hpp"
#include "loclab/scan.hpp"
#include "loclab/spectra.hpp"

using namespace loclab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

Json num(double x) { return std::isfinite(x) ? Json(round12(x)) : Json(nullptr); }

Json num_array(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

std::pair<int, double> parse_gnp(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--gnp expects n,p");
  std::size_t used = 0;
  const int n = std::stoi(text.substr(0, comma), &used);
  if (used != comma) throw std::invalid_argument("--gnp expects n,p");
  const std::string ps = text.substr(comma + 1);
  const double p = std::stod(ps, &used);
  if (used != ps.size()) throw std::invalid_argument("--gnp expects n,p");
  return {n, p};
}

// One graph from --g6, --named or --gnp. Orders above 64 are only possible
// with --gnp and come back as a DenseGraph.
struct GraphInput {
  std::string g6;
  std::string named;
  std::string gnp;
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--g6", g6, "graph6 string, a file holding one, or - for stdin");
    auto* b = cmd->add_option("--named", named, "named graph, e.g. petersen, complete:4, cmp:2,2,2, kab:2,2+kab:3,3");
    auto* c = cmd->add_option("--gnp", gnp, "random G(n,p) as n,p (n up to 4096 where supported)");
    a->excludes(b)->excludes(c);
    b->excludes(c);
    cmd->add_option("--seed", seed, "seed for --gnp")->capture_default_str();
  }

  struct Loaded {
    std::optional<Graph> small;
    std::optional<DenseGraph> dense;
  };

  Loaded load(bool allow_dense) const {
    Loaded out;
    if (!g6.empty()) {
      std::string text = g6;
      if (g6 == "-" || std::filesystem::is_regular_file(g6)) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (g6 != "-") {
          file.open(g6);
          in = &file;
        }
        Graph6Reader reader(*in);
        Graph6Line line;
        if (!reader.next(line)) throw std::invalid_argument("no graph6 record in " + g6);
        text = line.text;
      }
      out.small = from_graph6(text);
    } else if (!named.empty()) {
      out.small = named_graph(named);
    } else if (!gnp.empty()) {
      const auto [n, p] = parse_gnp(gnp);
      if (n <= kMaxOrder) {
        out.small = random_gnp(n, p, seed);
      } else if (allow_dense) {
        out.dense = random_gnp_dense(n, p, seed);
      } else {
        throw CapabilityError("this command handles at most 64 vertices");
      }
    } else {
      throw std::invalid_argument("give a graph with --g6, --named or --gnp");
    }
    return out;
  }
};

Json spectrum_json(const Spectrum& s, int n, std::uint64_t m) {
  return Json{{"n", n},
              {"m", m},
              {"eigenvalues", num_array(s.eigenvalues)},
              {"lambda1", num(s.lambda(1))},
              {"lambda2", num(s.lambda(2))},
              {"s_plus", num(s.s_plus)},
              {"s_minus", num(s.s_minus)},
              {"n_plus", s.n_plus},
              {"n_minus", s.n_minus},
              {"sign_threshold", num(s.sign_threshold)}};
}

Json predicates_json(const Predicates& p) {
  return Json{{"connected", p.connected},
              {"triangle_free", p.triangle_free},
              {"diamond_free", p.diamond_free},
              {"regular", p.regular},
              {"complete", p.complete},
              {"bipartite", p.bipartite},
              {"complete_multipartite", p.complete_multipartite}};
}

Json profile_json(const CliqueProfile& p, const std::vector<Edge>& edges, const Predicates& pred, bool verbose) {
  Json j{{"omega", p.omega}, {"t", p.t}, {"tv", p.tv}, {"exact", p.exact}};
  if (!p.exact) j["omega_upper"] = p.omega_upper;
  if (verbose) {
    j["c_v"] = p.c_v;
    Json ce = Json::array();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Json e{{"u", edges[i].u}, {"v", edges[i].v}, {"c", p.c_e[i]}};
      if (!p.exact) e["c_upper"] = p.c_e_upper[i];
      ce.push_back(std::move(e));
    }
    j["c_e"] = std::move(ce);
    if (!p.exact) j["c_v_upper"] = p.c_v_upper;
  }
  j["predicates"] = predicates_json(pred);
  return j;
}

Json result_json(const InequalityResult& r, const CheckId* id) {
  Json j{{"id", r.id}};
  if (id) {
    j["kind"] = id->entry->kind == CheckKind::theorem ? "theorem" : "conjecture";
    j["anchor"] = id->entry->anchor;
  }
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["slack"] = num(r.slack);
  j["holds"] = r.holds;
  j["applicable"] = r.applicable;
  j["equality"] = r.equality;
  if (!r.certain) j["certain"] = false;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string catalogue_text() {
  std::string s = "Catalogue (id: anchor):\n";
  for (const CatalogueEntry& e : catalogue()) {
    s += "  " + std::string(e.id) + (e.walk ? "(r)" : "") + ": " + std::string(e.anchor) +
         (e.kind == CheckKind::conjecture ? " [conjecture]" : "") + "\n";
  }
  return s;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and clique-local inequality laboratory"};
  app.footer(catalogue_text());
  app.require_subcommand(1);

  // spectrum ---------------------------------------------------------------
  GraphInput spec_in;
  double sign_rel = kDefaultSignThreshold;
  auto* spec_cmd = app.add_subcommand("spectrum", "adjacency spectrum and square energies");
  spec_in.attach(spec_cmd);
  spec_cmd->add_option("--sign-threshold", sign_rel, "relative zero threshold for eigenvalue signs")
      ->capture_default_str();

  // profile ----------------------------------------------------------------
  GraphInput prof_in;
  bool prof_verbose = true;
  double prof_budget = 0.0;
  auto* prof_cmd = app.add_subcommand("profile", "clique number, c(v), c(e), triangles, predicates");
  prof_in.attach(prof_cmd);
  prof_cmd->add_flag("!--summary", prof_verbose, "omit the per-vertex and per-edge lists");
  prof_cmd->add_option("--clique-budget", prof_budget, "seconds of exact search for graphs above 64 vertices");

  // check ------------------------------------------------------------------
  GraphInput check_in;
  std::vector<std::string> check_ids;
  std::string weights_file;
  int check_walk_r = kDefaultWalkR;
  Tolerances check_tol;
  auto* check_cmd = app.add_subcommand("check", "evaluate catalogue inequalities on one graph");
  check_in.attach(check_cmd);
  check_cmd->add_option("--id,--checks", check_ids, "ids, comma lists, all, theorems or conjectures");
  check_cmd->add_option("--weights", weights_file, "u,v,w CSV for weighted_edge_local_turan");
  check_cmd->add_option("--max-walk-r", check_walk_r, "walk lengths used when a walk id has no (r)")
      ->capture_default_str();
  check_cmd->add_option("--tol", check_tol.tol, "relative violation tolerance")->capture_default_str();
  check_cmd->add_option("--eq-tol", check_tol.eq_tol, "relative equality tolerance")->capture_default_str();

  // scan -------------------------------------------------------------------
  std::string scan_g6, scan_gnp, scan_checks = "all", scan_range, scan_format = "json", scan_report;
  int scan_enumerate = 0;
  std::uint64_t scan_trials = 100, scan_seed = 1;
  ScanOptions scan_opts;
  auto* scan_cmd = app.add_subcommand("scan", "run checks over a graph source");
  auto* s_g6 = scan_cmd->add_option("--g6", scan_g6, "graph6 file, or - for stdin");
  auto* s_en = scan_cmd->add_option("--enumerate", scan_enumerate, "all labeled graphs on n <= 7 vertices");
  auto* s_gnp = scan_cmd->add_option("--gnp", scan_gnp, "random graphs as n,p (n <= 64)");
  s_g6->excludes(s_en)->excludes(s_gnp);
  s_en->excludes(s_gnp);
  scan_cmd->add_option("--trials", scan_trials, "number of random graphs")->capture_default_str();
  scan_cmd->add_option("--seed", scan_seed, "master seed for random graphs")->capture_default_str();
  scan_cmd->add_option("--checks", scan_checks, "ids, comma list, all, theorems or conjectures")
      ->capture_default_str();
  scan_cmd->add_option("--range", scan_range, "enumeration index slice LO:HI");
  scan_cmd->add_flag("--connected", scan_opts.connected_only, "skip disconnected graphs");
  scan_cmd->add_flag("--stop-on-violation", scan_opts.stop_on_violation, "stop after the first violating graph");
  scan_cmd->add_flag("--strict", scan_opts.strict, "abort on a malformed graph6 line");
  scan_cmd->add_option("--top-k", scan_opts.top_k, "smallest-slack graphs kept per check")->capture_default_str();
  scan_cmd->add_option("--max-walk-r", scan_opts.max_walk_r, "walk lengths for walk checks")->capture_default_str();
  scan_cmd->add_option("--tol", scan_opts.tolerances.tol, "relative violation tolerance")->capture_default_str();
  scan_cmd->add_option("--eq-tol", scan_opts.tolerances.eq_tol, "relative equality tolerance")
      ->capture_default_str();
  scan_cmd->add_option("--workers", scan_opts.workers, "worker threads")->capture_default_str();
  scan_cmd->add_option("--budget", scan_opts.budget_seconds, "wall-clock limit in seconds (partial report)");
  scan_cmd->add_option("--format", scan_format, "summary format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  scan_cmd->add_option("--report", scan_report, "write the summary to this file instead of stdout");

  // extremal ---------------------------------------------------------------
  int ext_enumerate = 0, ext_k = 1;
  std::string ext_g6, ext_check;
  bool ext_connected = false;
  auto* ext_cmd = app.add_subcommand("extremal", "smallest-slack graphs for one check");
  auto* e_g6 = ext_cmd->add_option("--g6", ext_g6, "graph6 file, or - for stdin");
  auto* e_en = ext_cmd->add_option("--enumerate", ext_enumerate, "all labeled graphs on n <= 7 vertices");
  e_g6->excludes(e_en);
  ext_cmd->add_option("--check", ext_check, "catalogue id")->required();
  ext_cmd->add_option("--k", ext_k, "how many graphs")->capture_default_str();
  ext_cmd->add_flag("--connected", ext_connected, "skip disconnected graphs");

  // random -----------------------------------------------------------------
  int rnd_n = 1000, rnd_workers = 1;
  double rnd_p = 0.5;
  std::uint64_t rnd_trials = 5, rnd_seed = 1;
  ExperimentOptions rnd_opts;
  auto* rnd_cmd = app.add_subcommand("random", "G(n,p) spectral and clique statistics");
  rnd_cmd->add_option("--n", rnd_n, "order, up to 4096")->capture_default_str();
  rnd_cmd->add_option("--p", rnd_p, "edge probability")->capture_default_str();
  rnd_cmd->add_option("--trials", rnd_trials, "number of graphs")->capture_default_str();
  rnd_cmd->add_option("--seed", rnd_seed, "master seed")->capture_default_str();
  rnd_cmd->add_option("--clique-budget", rnd_opts.clique_budget_seconds,
                      "seconds of exact clique search per trial (<= 0: unlimited)")
      ->capture_default_str();
  rnd_cmd->add_option("--budget", rnd_opts.budget_seconds, "wall-clock limit for the whole run");
  rnd_cmd->add_option("--workers", rnd_workers, "worker threads")->capture_default_str();

  // ms ---------------------------------------------------------------------
  GraphInput ms_in;
  std::string ms_scheme = "classical", ms_weights;
  SimplexOptions ms_opts;
  auto* ms_cmd = app.add_subcommand("ms", "maximize x'Wx over the simplex");
  ms_in.attach(ms_cmd);
  ms_cmd->add_option("--scheme", ms_scheme, "classical, avg_local, geo_local or custom")
      ->check(CLI::IsMember({"classical", "avg_local", "geo_local", "custom"}))
      ->capture_default_str();
  ms_cmd->add_option("--weights", ms_weights, "u,v,w CSV for the custom scheme");
  ms_cmd->add_option("--restarts", ms_opts.restarts, "random interior starts")->capture_default_str();
  ms_cmd->add_option("--iters", ms_opts.max_iterations, "iteration cap per start")->capture_default_str();
  ms_cmd->add_option("--ms-seed", ms_opts.seed, "seed for the interior starts")->capture_default_str();

  // walks ------------------------------------------------------------------
  GraphInput walk_in;
  int walk_r = 3;
  auto* walk_cmd = app.add_subcommand("walks", "walk counts w_r(v) with r vertices");
  walk_in.attach(walk_cmd);
  walk_cmd->add_option("--r", walk_r, "walk length in vertices")->capture_default_str();

  // catalogue --------------------------------------------------------------
  auto* cat_cmd = app.add_subcommand("catalogue", "list every check with its anchor and hypotheses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*spec_cmd) {
      const auto g = spec_in.load(true);
      if (g.small) {
        print(spectrum_json(spectrum(*g.small, sign_rel), g.small->order(), g.small->size()));
      } else {
        print(spectrum_json(spectrum(*g.dense, sign_rel), g.dense->order(), g.dense->size()));
      }
      return kExitClean;
    }

    if (*prof_cmd) {
      const auto g = prof_in.load(true);
      if (g.small) {
        print(profile_json(clique_profile(*g.small), g.small->edges(), predicates(*g.small), prof_verbose));
      } else {
        const CliqueProfile p = clique_profile(*g.dense, {prof_budget});
        print(profile_json(p, g.dense->edges(), predicates(*g.dense), prof_verbose));
      }
      return kExitClean;
    }

    if (*check_cmd) {
      const Graph g = *check_in.load(false).small;
      std::vector<CheckId> ids;
      if (check_ids.empty()) check_ids.push_back("all");
      for (const std::string& s : check_ids) {
        for (CheckId id : parse_check_list(s, check_walk_r)) ids.push_back(id);
      }
      int walk_needed = 1;
      for (const CheckId& id : ids) walk_needed = std::max(walk_needed, id.r);
      const GraphContext ctx = GraphContext::build(g, walk_needed);
      std::optional<std::vector<double>> weights;
      if (!weights_file.empty()) {
        std::ifstream in(weights_file);
        if (!in) throw Error("cannot open " + weights_file);
        weights = read_weight_csv(in, g);
      }
      Json results = Json::array();
      bool violated = false;
      for (const CheckId& id : ids) {
        InequalityResult r = weights && id.entry->id == "weighted_edge_local_turan"
                                 ? weighted_edge_local_check(g, *weights, check_tol)
                                 : check(id, ctx, check_tol);
        violated = violated || r.binding_violation();
        results.push_back(result_json(r, &id));
      }
      print(Json{{"graph6", to_graph6(g)},
                 {"n", g.order()},
                 {"m", g.size()},
                 {"tol", check_tol.tol},
                 {"eq_tol", check_tol.eq_tol},
                 {"results", std::move(results)}});
      return violated ? kExitViolation : kExitClean;
    }

    if (*scan_cmd) {
      std::ifstream file;
      std::optional<GraphSource> source;
      if (!scan_g6.empty()) {
        std::istream* in = &std::cin;
        if (scan_g6 != "-") {
          file.open(scan_g6);
          if (!file) throw Error("cannot open " + scan_g6);
          in = &file;
        }
        source = GraphSource::graph6(*in, scan_g6);
      } else if (scan_enumerate > 0) {
        std::uint64_t lo = 0, hi = std::numeric_limits<std::uint64_t>::max();
        if (!scan_range.empty()) {
          const auto colon = scan_range.find(':');
          if (colon == std::string::npos) throw std::invalid_argument("--range expects LO:HI");
          if (colon > 0) lo = std::stoull(scan_range.substr(0, colon));
          if (colon + 1 < scan_range.size()) hi = std::stoull(scan_range.substr(colon + 1));
        }
        source = GraphSource::enumeration(scan_enumerate, lo, hi);
      } else if (!scan_gnp.empty()) {
        const auto [n, p] = parse_gnp(scan_gnp);
        source = GraphSource::random(n, p, scan_trials, scan_seed);
      } else {
        throw std::invalid_argument("give a source with --g6, --enumerate or --gnp");
      }
      const std::vector<CheckId> checks = parse_check_list(scan_checks, scan_opts.max_walk_r);
      const ScanReport report = scan(*source, checks, scan_opts, [](const Violation& v) {
        std::cout << violation_json(v) << '\n';
      });
      const std::string summary = scan_format == "csv" ? report_csv(report) : report_json(report) + "\n";
      if (scan_report.empty()) {
        std::cout << summary;
      } else {
        std::ofstream out(scan_report);
        out << summary;
        if (!out) throw Error("cannot write " + scan_report);
      }
      return report.binding_violations() > 0 ? kExitViolation : kExitClean;
    }

    if (*ext_cmd) {
      std::ifstream file;
      std::optional<GraphSource> source;
      if (!ext_g6.empty()) {
        std::istream* in = &std::cin;
        if (ext_g6 != "-") {
          file.open(ext_g6);
          if (!file) throw Error("cannot open " + ext_g6);
          in = &file;
        }
        source = GraphSource::graph6(*in, ext_g6);
      } else if (ext_enumerate > 0) {
        source = GraphSource::enumeration(ext_enumerate);
      } else {
        throw std::invalid_argument("give a source with --g6 or --enumerate");
      }
      ScanOptions o;
      o.connected_only = ext_connected;
      const CheckId id = parse_check_id(ext_check);
      Json list = Json::array();
      for (const RankedGraph& g : extremal_search(*source, id, ext_k, o)) {
        list.push_back({{"graph6", g.graph6}, {"index", g.index}, {"lhs", num(g.lhs)}, {"rhs", num(g.rhs)},
                        {"slack", num(g.slack)}});
      }
      print(Json{{"check", id.name()}, {"k", ext_k}, {"graphs", std::move(list)}});
      return kExitClean;
    }

    if (*rnd_cmd) {
      rnd_opts.workers = rnd_workers;
      const RandomExperiment e = random_experiment(rnd_n, rnd_p, rnd_trials, rnd_seed, rnd_opts);
      std::cout << experiment_json(e) << '\n';
      return e.violations > 0 ? kExitViolation : kExitClean;
    }

    if (*ms_cmd) {
      const Graph g = *ms_in.load(false).small;
      const WeightScheme scheme = *parse_weight_scheme(ms_scheme);
      std::vector<double> weights;
      if (scheme == WeightScheme::custom) {
        if (ms_weights.empty()) throw std::invalid_argument("the custom scheme needs --weights");
        std::ifstream in(ms_weights);
        if (!in) throw Error("cannot open " + ms_weights);
        weights = read_weight_csv(in, g);
      } else {
        weights = scheme_weights(g, scheme);
      }
      const SimplexResult best = maximize_simplex(g, weights, ms_opts);
      const int omega = max_clique(g).size;
      const std::vector<double> witness = clique_witness(g);
      print(Json{{"scheme", scheme_name(scheme)},
                 {"value", num(best.value)},
                 {"x", num_array(best.x)},
                 {"starts", best.starts},
                 {"monotone", best.monotone},
                 {"omega", omega},
                 {"classical_value", num(1.0 - 1.0 / omega)},
                 {"clique_witness_value", num(quad_form(g, weights, witness))}});
      return kExitClean;
    }

    if (*walk_cmd) {
      const Graph g = *walk_in.load(false).small;
      const WalkTable w = walk_counts(g, walk_r);
      print(Json{{"r", w.r}, {"per_vertex", w.per_vertex}, {"total", w.total}});
      return kExitClean;
    }

    if (*cat_cmd) {
      Json list = Json::array();
      for (const CatalogueEntry& e : catalogue()) {
        list.push_back({{"id", std::string(e.id) + (e.walk ? "(r)" : "")},
                        {"kind", e.kind == CheckKind::theorem ? "theorem" : "conjecture"},
                        {"anchor", e.anchor},
                        {"statement", e.statement},
                        {"hypotheses", e.hypotheses},
                        {"strict", e.strict}});
      }
      print(list);
      return kExitClean;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
