#include "loclab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "loclab/errors.hpp"
#include "loclab/generators.hpp"
#include "loclab/rng.hpp"

namespace loclab {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

GraphSource GraphSource::graph6(std::istream& in, std::string label) {
  GraphSource s;
  s.kind = Kind::graph6_stream;
  s.stream = &in;
  s.label = std::move(label);
  return s;
}

GraphSource GraphSource::enumeration(int n, std::uint64_t lo, std::uint64_t hi) {
  const LabeledEnumeration en(n);  // validates n
  GraphSource s;
  s.kind = Kind::labeled_enumeration;
  s.n = n;
  s.hi = std::min(hi, en.count());
  s.lo = std::min(lo, s.hi);
  return s;
}

GraphSource GraphSource::random(int n, double p, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("random scan order must lie in [1, 64]");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("edge probability must lie in (0, 1)");
  GraphSource s;
  s.kind = Kind::random;
  s.n = n;
  s.p = p;
  s.trials = trials;
  s.seed = seed;
  return s;
}

bool ranks_before(const RankedGraph& a, const RankedGraph& b) {
  if (a.slack != b.slack) return a.slack < b.slack;
  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
  return a.index < b.index;
}

std::uint64_t ScanReport::binding_violations() const {
  std::uint64_t total = 0;
  for (const CheckSummary& c : per_check) total += c.violations;
  return total;
}

const RankedGraph* ScanReport::argmin(std::string_view check) const {
  for (const CheckSummary& c : per_check) {
    if (c.id == check) return c.top_k.empty() ? nullptr : &c.top_k.front();
  }
  return nullptr;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero in reports
}

namespace {

struct Item {
  std::uint64_t index = 0;
  std::string text;  // graph6 streams only
};

void offer(std::vector<RankedGraph>& top, RankedGraph g, std::size_t k) {
  if (k == 0) return;
  if (top.size() == k && !ranks_before(g, top.back())) return;
  top.insert(std::upper_bound(top.begin(), top.end(), g, ranks_before), std::move(g));
  if (top.size() > k) top.pop_back();
}

// Aggregate over a contiguous run of source items. Merging runs in source
// order is associative, which keeps reports independent of the split.
struct Accumulator {
  std::uint64_t read = 0;
  std::uint64_t processed = 0;
  std::uint64_t skipped = 0;
  std::vector<CheckSummary> per_check;
  std::vector<Violation> violations;
  std::vector<ParseIssue> parse_errors;
  bool hit_violation = false;

  void merge(Accumulator&& later, std::size_t k) {
    read += later.read;
    processed += later.processed;
    skipped += later.skipped;
    for (std::size_t i = 0; i < per_check.size(); ++i) {
      CheckSummary& a = per_check[i];
      CheckSummary& b = later.per_check[i];
      a.evaluated += b.evaluated;
      a.applicable += b.applicable;
      a.violations += b.violations;
      a.nonbinding_failures += b.nonbinding_failures;
      a.inconclusive += b.inconclusive;
      a.equalities += b.equalities;
      for (RankedGraph& g : b.top_k) offer(a.top_k, std::move(g), k);
    }
    std::move(later.violations.begin(), later.violations.end(), std::back_inserter(violations));
    std::move(later.parse_errors.begin(), later.parse_errors.end(), std::back_inserter(parse_errors));
    hit_violation = hit_violation || later.hit_violation;
  }
};

class Scanner {
 public:
  Scanner(const GraphSource& source, const std::vector<CheckId>& checks, const ScanOptions& options)
      : source_(source), checks_(checks), options_(options) {
    for (const CheckId& c : checks) walk_r_ = std::max(walk_r_, c.r);
    if (source.kind == GraphSource::Kind::labeled_enumeration) enumeration_.emplace(source.n);
  }

  Accumulator fresh() const {
    Accumulator acc;
    acc.per_check.resize(checks_.size());
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      acc.per_check[i].id = checks_[i].name();
      acc.per_check[i].kind = checks_[i].entry->kind;
    }
    return acc;
  }

  // Processes items in order; in stop mode, stops right after the first
  // graph with a binding violation.
  Accumulator run(std::span<const Item> items) const {
    Accumulator acc = fresh();
    const auto k = static_cast<std::size_t>(std::max(options_.top_k, 0));
    for (const Item& item : items) {
      ++acc.read;
      std::optional<Graph> g;
      try {
        g = make_graph(item);
      } catch (const ParseError& e) {
        if (options_.strict) throw ParseError("line " + std::to_string(item.index) + ": " + e.what(), e.offset());
        acc.parse_errors.push_back({static_cast<std::size_t>(item.index), e.what()});
        continue;
      }
      if (options_.connected_only && !is_connected(*g)) {
        ++acc.skipped;
        continue;
      }
      ++acc.processed;
      const GraphContext ctx = GraphContext::build(*g, std::max(walk_r_, 1));
      std::string g6;
      const auto graph6 = [&]() -> const std::string& {
        if (g6.empty()) g6 = to_graph6(*g);
        return g6;
      };
      bool violated = false;
      for (std::size_t i = 0; i < checks_.size(); ++i) {
        const InequalityResult r = check(checks_[i], ctx, options_.tolerances);
        CheckSummary& s = acc.per_check[i];
        ++s.evaluated;
        if (!r.applicable) {
          if (!r.holds) ++s.nonbinding_failures;
          continue;
        }
        ++s.applicable;
        if (r.equality) ++s.equalities;
        if (!r.holds && !r.certain) ++s.inconclusive;
        if (r.binding_violation()) {
          ++s.violations;
          violated = true;
          acc.violations.push_back({item.index, graph6(), r.id, r.lhs, r.rhs, r.slack});
        }
        if (k > 0 && (s.top_k.size() < k || r.slack <= s.top_k.back().slack)) {
          offer(s.top_k, {r.slack, graph6(), item.index, r.lhs, r.rhs}, k);
        }
      }
      if (violated) {
        acc.hit_violation = true;
        if (options_.stop_on_violation) break;
      }
    }
    return acc;
  }

 private:
  Graph make_graph(const Item& item) const {
    switch (source_.kind) {
      case GraphSource::Kind::graph6_stream: return from_graph6(item.text);
      case GraphSource::Kind::labeled_enumeration: return enumeration_->at(item.index);
      case GraphSource::Kind::random:
        return random_gnp(source_.n, source_.p, stream_seed(source_.seed, item.index));
    }
    throw std::logic_error("unknown source kind");
  }

  const GraphSource& source_;
  const std::vector<CheckId>& checks_;
  const ScanOptions& options_;
  std::optional<LabeledEnumeration> enumeration_;
  int walk_r_ = 0;
};

// Pulls the next chunk of items from the source; returns false when empty.
class ItemFeed {
 public:
  explicit ItemFeed(GraphSource& source) : source_(source), next_(source.lo) {
    if (source.kind == GraphSource::Kind::graph6_stream) {
      if (source.stream == nullptr) throw std::invalid_argument("graph6 source has no stream");
      reader_.emplace(*source.stream);
    }
  }

  bool fill(std::vector<Item>& items, std::size_t want) {
    items.clear();
    switch (source_.kind) {
      case GraphSource::Kind::graph6_stream: {
        Graph6Line line;
        while (items.size() < want && reader_->next(line)) items.push_back({line.line_number, std::move(line.text)});
        if (source_.stream->bad()) throw Error("error reading graph6 input " + source_.label);
        break;
      }
      case GraphSource::Kind::labeled_enumeration:
        while (items.size() < want && next_ < source_.hi) items.push_back({next_++, {}});
        break;
      case GraphSource::Kind::random:
        while (items.size() < want && trial_ < source_.trials) items.push_back({trial_++, {}});
        break;
    }
    return !items.empty();
  }

 private:
  GraphSource& source_;
  std::optional<Graph6Reader> reader_;
  std::uint64_t next_ = 0;
  std::uint64_t trial_ = 0;
};

std::string describe(const GraphSource& s) {
  char buf[160];
  switch (s.kind) {
    case GraphSource::Kind::graph6_stream: return "graph6:" + s.label;
    case GraphSource::Kind::labeled_enumeration:
      std::snprintf(buf, sizeof buf, "enumerate:n=%d,range=%llu:%llu", s.n, static_cast<unsigned long long>(s.lo),
                    static_cast<unsigned long long>(s.hi));
      return buf;
    case GraphSource::Kind::random:
      std::snprintf(buf, sizeof buf, "gnp:n=%d,p=%.12g,trials=%llu", s.n, s.p,
                    static_cast<unsigned long long>(s.trials));
      return buf;
  }
  return "?";
}

constexpr std::size_t kChunkPerWorker = 2048;

}  // namespace

ScanReport scan(GraphSource& source, const std::vector<CheckId>& checks, const ScanOptions& options,
                const ViolationSink& sink) {
  if (checks.empty()) throw std::invalid_argument("scan needs at least one check");
  const int workers = std::max(1, options.workers);
  const auto k = static_cast<std::size_t>(std::max(options.top_k, 0));
  const std::optional<Clock::time_point> deadline =
      options.budget_seconds > 0
          ? std::optional(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(options.budget_seconds)))
          : std::nullopt;

  const Scanner scanner(source, checks, options);
  ItemFeed feed(source);
  Accumulator total = scanner.fresh();
  bool partial = false;
  std::vector<Item> items;

  while (feed.fill(items, kChunkPerWorker * static_cast<std::size_t>(workers))) {
    // Contiguous parts, one per worker, merged back in order.
    const std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(workers), items.size());
    std::vector<Accumulator> results(parts);
    std::vector<std::exception_ptr> errors(parts);
    const auto work = [&](std::size_t part) {
      const std::size_t begin = items.size() * part / parts;
      const std::size_t end = items.size() * (part + 1) / parts;
      try {
        results[part] = scanner.run(std::span<const Item>(items).subspan(begin, end - begin));
      } catch (...) {
        errors[part] = std::current_exception();
      }
    };
    {
      std::vector<std::jthread> threads;
      for (std::size_t part = 1; part < parts; ++part) threads.emplace_back(work, part);
      work(0);
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    Accumulator chunk = scanner.fresh();
    for (Accumulator& r : results) {
      const bool stop = r.hit_violation && options.stop_on_violation;
      chunk.merge(std::move(r), k);
      if (stop) break;
    }
    if (sink) {
      for (const Violation& v : chunk.violations) sink(v);
    }
    total.merge(std::move(chunk), k);
    if (total.hit_violation && options.stop_on_violation) break;
    if (deadline && Clock::now() > *deadline) {
      partial = true;
      break;
    }
  }

  ScanReport report;
  report.source = describe(source);
  for (const CheckId& c : checks) report.checks.push_back(c.name());
  report.options = options;
  report.seed = source.kind == GraphSource::Kind::random ? source.seed : 0;
  report.graphs_read = total.read;
  report.graphs_processed = total.processed;
  report.skipped_disconnected = total.skipped;
  report.per_check = std::move(total.per_check);
  report.violations = std::move(total.violations);
  report.parse_errors = std::move(total.parse_errors);
  report.stopped_on_violation = options.stop_on_violation && total.hit_violation;
  report.partial = partial;
  return report;
}

std::vector<RankedGraph> extremal_search(GraphSource& source, const CheckId& check, int k,
                                         const ScanOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  ScanOptions o = options;
  o.top_k = k;
  o.stop_on_violation = false;
  ScanReport r = scan(source, {check}, o);
  return std::move(r.per_check.front().top_k);
}

namespace {

Json number(double x) { return std::isfinite(x) ? Json(round12(x)) : Json(nullptr); }

Json ranked_json(const RankedGraph& g) {
  return Json{{"graph6", g.graph6}, {"index", g.index}, {"lhs", number(g.lhs)}, {"rhs", number(g.rhs)},
              {"slack", number(g.slack)}};
}

std::string_view kind_name(CheckKind k) { return k == CheckKind::theorem ? "theorem" : "conjecture"; }

}  // namespace

std::string violation_json(const Violation& v) {
  const Json j{{"violation", v.check}, {"index", v.index}, {"graph6", v.graph6},
               {"lhs", number(v.lhs)},  {"rhs", number(v.rhs)}, {"slack", number(v.slack)}};
  return j.dump();
}

std::string report_json(const ScanReport& r) {
  Json config{{"checks", r.checks},
              {"connected_only", r.options.connected_only},
              {"stop_on_violation", r.options.stop_on_violation},
              {"strict", r.options.strict},
              {"top_k", r.options.top_k},
              {"max_walk_r", r.options.max_walk_r},
              {"tol", r.options.tolerances.tol},
              {"eq_tol", r.options.tolerances.eq_tol},
              {"budget_seconds", r.options.budget_seconds}};
  if (r.source.rfind("gnp:", 0) == 0) config["seed"] = r.seed;

  Json per_check = Json::array();
  for (const CheckSummary& c : r.per_check) {
    Json top = Json::array();
    for (const RankedGraph& g : c.top_k) top.push_back(ranked_json(g));
    per_check.push_back({{"id", c.id},
                         {"kind", kind_name(c.kind)},
                         {"evaluated", c.evaluated},
                         {"applicable", c.applicable},
                         {"violations", c.violations},
                         {"nonbinding_failures", c.nonbinding_failures},
                         {"inconclusive", c.inconclusive},
                         {"equalities", c.equalities},
                         {"min_slack", c.top_k.empty() ? Json(nullptr) : number(c.top_k.front().slack)},
                         {"argmin_graph6", c.top_k.empty() ? Json(nullptr) : Json(c.top_k.front().graph6)},
                         {"top_k", std::move(top)}});
  }
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"index", v.index}, {"graph6", v.graph6}, {"check", v.check}, {"lhs", number(v.lhs)},
                          {"rhs", number(v.rhs)}, {"slack", number(v.slack)}});
  }
  Json parse_errors = Json::array();
  for (const ParseIssue& p : r.parse_errors) parse_errors.push_back({{"line", p.line}, {"message", p.message}});

  const Json j{{"source", r.source},
               {"config", std::move(config)},
               {"graphs_read", r.graphs_read},
               {"graphs_processed", r.graphs_processed},
               {"skipped_disconnected", r.skipped_disconnected},
               {"binding_violations", r.binding_violations()},
               {"stopped_on_violation", r.stopped_on_violation},
               {"partial", r.partial},
               {"checks", std::move(per_check)},
               {"violations", std::move(violations)},
               {"parse_errors", std::move(parse_errors)}};
  return j.dump(2);
}

std::string report_csv(const ScanReport& r) {
  std::ostringstream out;
  out << "check,kind,evaluated,applicable,violations,nonbinding_failures,inconclusive,equalities,min_slack,"
         "argmin_graph6\n";
  for (const CheckSummary& c : r.per_check) {
    out << c.id << ',' << kind_name(c.kind) << ',' << c.evaluated << ',' << c.applicable << ',' << c.violations
        << ',' << c.nonbinding_failures << ',' << c.inconclusive << ',' << c.equalities << ',';
    if (!c.top_k.empty()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", round12(c.top_k.front().slack));
      // graph6 uses bytes 63..126, which include no comma or quote
      out << buf << ',' << c.top_k.front().graph6;
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::uint64_t RandomExperiment::violations_of(std::string_view check) const {
  std::uint64_t count = 0;
  for (const TrialResult& t : results) {
    for (const InequalityResult& r : t.checks) {
      if (r.id == check && r.binding_violation()) ++count;
    }
  }
  return count;
}

namespace {

MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  if (xs.empty()) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return out;
}

TrialResult run_trial(int n, double p, std::uint64_t seed, std::uint64_t trial, const ExperimentOptions& options) {
  const auto start = Clock::now();
  const DenseGraph g = random_gnp_dense(n, p, stream_seed(seed, trial));
  const GraphContext ctx = GraphContext::build(g, DenseProfileOptions{options.clique_budget_seconds});
  TrialResult t;
  t.trial = trial;
  t.lambda1 = ctx.spectrum.lambda(1);
  t.lambda2 = ctx.spectrum.lambda(2);
  t.s_plus = ctx.spectrum.s_plus;
  t.s_minus = ctx.spectrum.s_minus;
  t.omega = ctx.profile.omega;
  t.omega_upper = ctx.profile.omega_upper;
  t.exact = ctx.profile.exact;
  double cv = 0.0, ce = 0.0;
  for (int c : ctx.profile.c_v) cv += c;
  for (int c : ctx.profile.c_e) ce += c;
  t.mean_cv = cv / n;
  t.mean_ce = ctx.profile.c_e.empty() ? 0.0 : ce / static_cast<double>(ctx.profile.c_e.size());
  for (const char* id : {"splus_wilf", "vertex_local_splus_wilf", "local_bn"}) {
    t.checks.push_back(check(id, ctx, options.tolerances));
  }
  t.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return t;
}

}  // namespace

RandomExperiment random_experiment(int n, double p, std::uint64_t trials, std::uint64_t seed,
                                   const ExperimentOptions& options) {
  if (n < 1 || n > kMaxDenseOrder) throw std::invalid_argument("experiment order must lie in [1, 4096]");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("edge probability must lie in (0, 1)");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");

  RandomExperiment e;
  e.n = n;
  e.p = p;
  e.trials = trials;
  e.seed = seed;
  e.clique_budget_seconds = options.clique_budget_seconds;

  const std::optional<Clock::time_point> deadline =
      options.budget_seconds > 0
          ? std::optional(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(options.budget_seconds)))
          : std::nullopt;
  std::vector<std::optional<TrialResult>> slots(trials);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> out_of_time{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto work = [&] {
    for (;;) {
      if (deadline && Clock::now() > *deadline) {
        out_of_time = true;
        return;
      }
      const std::uint64_t i = next++;
      if (i >= trials) return;
      try {
        slots[i] = run_trial(n, p, seed, i, options);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    const auto w = static_cast<std::uint64_t>(std::max(1, options.workers));
    for (std::uint64_t i = 1; i < std::min(w, trials); ++i) threads.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);

  std::vector<double> l1, l2, sp, sm, om, cv, ce;
  const double dn = n;
  for (auto& slot : slots) {
    if (!slot) continue;
    const TrialResult& t = *slot;
    l1.push_back(t.lambda1 / dn);
    l2.push_back(t.lambda2 / std::sqrt(dn));
    sp.push_back(t.s_plus / (dn * dn));
    sm.push_back(t.s_minus / (dn * dn));
    om.push_back(t.omega);
    cv.push_back(t.mean_cv);
    ce.push_back(t.mean_ce);
    for (const InequalityResult& r : t.checks) {
      if (r.binding_violation()) ++e.violations;
      if (r.applicable && !r.holds && !r.certain) ++e.inconclusive;
    }
    e.results.push_back(std::move(*slot));
  }
  e.partial = out_of_time.load() && e.results.size() < trials;
  e.lambda1_over_n = mean_sd(l1);
  e.lambda2_over_sqrt_n = mean_sd(l2);
  e.s_plus_over_n2 = mean_sd(sp);
  e.s_minus_over_n2 = mean_sd(sm);
  e.omega = mean_sd(om);
  e.mean_cv = mean_sd(cv);
  e.mean_ce = mean_sd(ce);
  return e;
}

std::string experiment_json(const RandomExperiment& e) {
  const auto stat = [](const MeanSd& s) { return Json{{"mean", number(s.mean)}, {"sd", number(s.sd)}}; };
  Json trials = Json::array();
  for (const TrialResult& t : e.results) {
    Json checks = Json::array();
    for (const InequalityResult& r : t.checks) {
      checks.push_back({{"id", r.id}, {"lhs", number(r.lhs)}, {"rhs", number(r.rhs)}, {"slack", number(r.slack)},
                        {"holds", r.holds}, {"certain", r.certain}});
    }
    trials.push_back({{"trial", t.trial},
                      {"lambda1", number(t.lambda1)},
                      {"lambda2", number(t.lambda2)},
                      {"s_plus", number(t.s_plus)},
                      {"s_minus", number(t.s_minus)},
                      {"omega", t.omega},
                      {"omega_upper", t.omega_upper},
                      {"mean_c_v", number(t.mean_cv)},
                      {"mean_c_e", number(t.mean_ce)},
                      {"clique_exact", t.exact},
                      {"checks", std::move(checks)}});
  }
  const Json j{{"n", e.n},
               {"p", number(e.p)},
               {"trials", e.trials},
               {"seed", e.seed},
               {"clique_budget_seconds", e.clique_budget_seconds},
               {"completed_trials", e.results.size()},
               {"partial", e.partial},
               {"lambda1_over_n", stat(e.lambda1_over_n)},
               {"lambda2_over_sqrt_n", stat(e.lambda2_over_sqrt_n)},
               {"s_plus_over_n2", stat(e.s_plus_over_n2)},
               {"s_minus_over_n2", stat(e.s_minus_over_n2)},
               {"omega", stat(e.omega)},
               {"mean_c_v", stat(e.mean_cv)},
               {"mean_c_e", stat(e.mean_ce)},
               {"violations", e.violations},
               {"inconclusive", e.inconclusive},
               {"per_trial", std::move(trials)}};
  return j.dump(2);
}

}  // namespace loclab
