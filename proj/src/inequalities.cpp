#include "loclab/inequalities.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "loclab/errors.hpp"

namespace loclab {

namespace {

constexpr CatalogueEntry kCatalogue[] = {
    {"bn", CheckKind::conjecture, "Bollobas-Nikiforov conjecture",
     "lambda1^2 + lambda2^2 <= 2m (1 - 1/omega)", "G is not complete", false, false},
    {"bn_diamond", CheckKind::theorem, "Bollobas-Nikiforov bound for diamond-free graphs",
     "lambda1^2 + lambda2^2 <= 2m (1 - 1/omega)", "diamond-free; G is not complete", false, false},
    {"bn_triangle", CheckKind::theorem, "triangle bound on the two leading eigenvalues",
     "lambda1^2 + lambda2^2 < m + (3t)^(2/3)", "G is not complete", true, false},
    {"bn_triangle_diamond", CheckKind::theorem, "diamond-free triangle bound on the two leading eigenvalues",
     "lambda1^2 + lambda2^2 <= m + ((3/sqrt 2) t)^(2/3)", "diamond-free; G is not complete", false, false},
    {"edge_local_spectral_turan", CheckKind::theorem, "edge-localized spectral Turan theorem",
     "lambda1^2 <= sum_e 2(1 - 1/c(e))", "", false, false},
    {"local_bn", CheckKind::conjecture, "edge-localized Bollobas-Nikiforov conjecture",
     "lambda1^2 + lambda2^2 <= sum_e 2(1 - 1/c(e))", "G is not complete", false, false},
    {"local_bn_diamond", CheckKind::theorem, "edge-localized Bollobas-Nikiforov bound for diamond-free graphs",
     "lambda1^2 + lambda2^2 <= sum_e 2(1 - 1/c(e))", "diamond-free; t not in {1,2,3,4}; G is not complete",
     false, false},
    {"spectral_turan", CheckKind::theorem, "spectral Turan theorem (Nikiforov)",
     "lambda1^2 <= 2m (1 - 1/omega)", "", false, false},
    {"splus_half_local", CheckKind::theorem, "half-localized square-energy bound",
     "sqrt(s+) <= sum_v (1 - 1/(2c(v)))", "", false, false},
    {"splus_regular_local", CheckKind::theorem, "localized square-energy bound for regular graphs",
     "sqrt(s+) <= sum_v (1 - 1/(2c(v) - 2))", "regular", false, false},
    {"splus_triangle", CheckKind::theorem, "square-energy triangle bound (tight on balanced complete bipartite graphs)",
     "sqrt(s+) <= n/2 + 3t/lambda1^2", "", false, false},
    {"splus_weak", CheckKind::theorem, "weak square-energy clique bound",
     "sqrt(s+) <= n sqrt(1 - 1/omega - 1/omega^2)", "", false, false},
    {"splus_wilf", CheckKind::conjecture, "square-energy Wilf conjecture",
     "sqrt(s+) <= n (1 - 1/omega)", "", false, false},
    {"triangle_lower_bn", CheckKind::theorem, "Bollobas-Nikiforov triangle counting bound",
     "lambda1 (lambda1^2 - m) / 3 <= t", "", false, false},
    {"triangle_lower_s_minus", CheckKind::theorem, "triangle lower bound through s-",
     "lambda1 (lambda1^2 - s-) / 6 <= t", "", false, false},
    {"turan_edges", CheckKind::theorem, "Turan's theorem",
     "m <= n^2/2 (1 - 1/omega)", "", false, false},
    {"vertex_local_splus_wilf", CheckKind::conjecture, "vertex-localized square-energy Wilf conjecture",
     "sqrt(s+) <= sum_v (1 - 1/c(v))", "", false, false},
    {"walk_local_conj", CheckKind::conjecture, "fully localized walk conjecture",
     "lambda1^r <= sum_v w_r(v) (c(v) - 1)/c(v)", "", false, true},
    {"walk_local_mixed", CheckKind::theorem, "localized Nikiforov walk inequality",
     "lambda1^r <= sum_v w_r(v) sqrt(1 - 1/c(v)) sqrt(1 - 1/omega)", "", false, true},
    {"walk_nikiforov", CheckKind::theorem, "Nikiforov's walk inequality",
     "lambda1^r <= w_r(G) (1 - 1/omega)", "", false, true},
    {"walk_recursion", CheckKind::theorem, "walk recursion bound",
     "w_2r(G) <= (sum_v w_r(v) sqrt((c(v) - 1)/c(v)))^2", "", false, true},
    {"weighted_edge_local_turan", CheckKind::theorem, "weighted edge-localized spectral Turan theorem",
     "lambda1(W)^2 <= sum_e 2(1 - 1/c(e)) w(e)^2", "connected; unit weights unless a weight file is given",
     false, false},
    {"wilf", CheckKind::theorem, "Wilf's inequality",
     "lambda1 <= n (1 - 1/omega)", "", false, false},
    {"wilf_diamond_free", CheckKind::theorem, "vertex-localized Wilf bound for diamond-free graphs",
     "sqrt(s+) <= sum_v (1 - 1/c(v))", "diamond-free; n >= 42", false, false},
};

const CatalogueEntry* find_entry(std::string_view id) {
  for (const CatalogueEntry& e : kCatalogue) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::string catalogue_listing() {
  std::string s;
  for (const CatalogueEntry& e : kCatalogue) {
    if (!s.empty()) s += ", ";
    s += e.id;
    if (e.walk) s += "(r)";
  }
  return s;
}

// Clique quantities used by one evaluation: either the lower or the upper
// side of a profile.
struct CliqueView {
  int omega;
  std::span<const int> c_v;
  std::span<const int> c_e;
};

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  bool applicable = true;
  std::string notes;
};

Sides sides(double lhs, double rhs) {
  Sides s;
  s.lhs = lhs;
  s.rhs = rhs;
  return s;
}

double omega_factor(int omega) { return 1.0 - 1.0 / omega; }

double edge_local_sum(std::span<const int> c_e) {
  double s = 0.0;
  for (int c : c_e) s += 2.0 * (1.0 - 1.0 / c);
  return s;
}

double vertex_sum(std::span<const int> c_v, const std::function<double(int)>& term) {
  double s = 0.0;
  for (int c : c_v) s += term(c);
  return s;
}

void require_not_complete(const GraphContext& ctx, Sides& s) {
  if (ctx.predicates.complete) {
    s.applicable = false;
    s.notes = "G is complete";
  }
}

void add_note(Sides& s, std::string_view note) {
  if (!s.notes.empty()) s.notes += "; ";
  s.notes += note;
}

const WalkTable* walk_table(const GraphContext& ctx, int r) {
  if (r < 1 || static_cast<std::size_t>(r) > ctx.walks.size()) return nullptr;
  return &ctx.walks[static_cast<std::size_t>(r) - 1];
}

Sides evaluate(const CheckId& id, const GraphContext& ctx, const CliqueView& cv) {
  const std::string_view key = id.entry->id;
  const double n = ctx.n;
  const double m = static_cast<double>(ctx.m);
  const double t = static_cast<double>(ctx.profile.t);
  const double l1 = ctx.spectrum.lambda(1);
  const double l2 = ctx.spectrum.lambda(2);
  const double root_splus = std::sqrt(ctx.spectrum.s_plus);
  const double wf = omega_factor(cv.omega);
  const auto& pred = ctx.predicates;
  Sides s;

  if (key == "turan_edges") {
    s = sides(m, n * n / 2.0 * wf);
  } else if (key == "wilf") {
    s = sides(l1, n * wf);
  } else if (key == "spectral_turan") {
    s = sides(l1 * l1, 2.0 * m * wf);
  } else if (key == "edge_local_spectral_turan") {
    s = sides(l1 * l1, edge_local_sum(cv.c_e));
  } else if (key == "weighted_edge_local_turan") {
    s = sides(l1 * l1, edge_local_sum(cv.c_e));
    s.notes = "unit weights";
    if (!pred.connected) {
      s.applicable = false;
      add_note(s, "disconnected");
    }
  } else if (key == "splus_wilf") {
    s = sides(root_splus, n * wf);
  } else if (key == "vertex_local_splus_wilf") {
    s = sides(root_splus, vertex_sum(cv.c_v, [](int c) { return 1.0 - 1.0 / c; }));
  } else if (key == "splus_triangle") {
    s = sides(root_splus, ctx.m == 0 ? n / 2.0 : n / 2.0 + 3.0 * t / (l1 * l1));
  } else if (key == "splus_weak") {
    const double w = cv.omega;
    s = sides(root_splus, n * std::sqrt(std::max(0.0, 1.0 - 1.0 / w - 1.0 / (w * w))));
  } else if (key == "splus_half_local") {
    s = sides(root_splus, vertex_sum(cv.c_v, [](int c) { return 1.0 - 1.0 / (2.0 * c); }));
  } else if (key == "splus_regular_local") {
    s = sides(root_splus, vertex_sum(cv.c_v, [](int c) { return c <= 1 ? 0.0 : 1.0 - 1.0 / (2.0 * c - 2.0); }));
    if (!pred.regular) {
      s.applicable = false;
      s.notes = "not regular";
    }
  } else if (key == "bn") {
    s = sides(l1 * l1 + l2 * l2, 2.0 * m * wf);
    require_not_complete(ctx, s);
  } else if (key == "local_bn") {
    s = sides(l1 * l1 + l2 * l2, edge_local_sum(cv.c_e));
    require_not_complete(ctx, s);
    if (!pred.connected) add_note(s, "disconnected");
  } else if (key == "bn_triangle") {
    s = sides(l1 * l1 + l2 * l2, m + std::cbrt(3.0 * t * 3.0 * t));
    require_not_complete(ctx, s);
  } else if (key == "bn_triangle_diamond") {
    const double k = 3.0 / std::sqrt(2.0) * t;
    s = sides(l1 * l1 + l2 * l2, m + std::cbrt(k * k));
    if (!pred.diamond_free) {
      s.applicable = false;
      s.notes = "contains a diamond";
    }
    if (pred.complete) {
      s.applicable = false;
      add_note(s, "G is complete");
    }
  } else if (key == "local_bn_diamond") {
    s = sides(l1 * l1 + l2 * l2, edge_local_sum(cv.c_e));
    if (!pred.diamond_free) {
      s.applicable = false;
      s.notes = "contains a diamond";
    } else if (ctx.profile.t >= 1 && ctx.profile.t <= 4) {
      s.applicable = false;
      const double k = 3.0 / std::sqrt(2.0) * t;
      char buf[96];
      std::snprintf(buf, sizeof buf, "t in {1,2,3,4}; diamond-free triangle bound gives %.12g", m + std::cbrt(k * k));
      s.notes = buf;
    }
    if (pred.complete) {
      s.applicable = false;
      add_note(s, "G is complete");
    }
  } else if (key == "bn_diamond") {
    s = sides(l1 * l1 + l2 * l2, 2.0 * m * wf);
    if (!pred.diamond_free) {
      s.applicable = false;
      s.notes = "contains a diamond";
    }
    if (pred.complete) {
      s.applicable = false;
      add_note(s, "G is complete");
    }
  } else if (key == "triangle_lower_s_minus") {
    s = sides(l1 * (l1 * l1 - ctx.spectrum.s_minus) / 6.0, t);
  } else if (key == "triangle_lower_bn") {
    s = sides(l1 * (l1 * l1 - m) / 3.0, t);
  } else if (key == "wilf_diamond_free") {
    s = sides(root_splus, vertex_sum(cv.c_v, [](int c) { return 1.0 - 1.0 / c; }));
    if (!pred.diamond_free) {
      s.applicable = false;
      s.notes = "contains a diamond";
    }
    if (ctx.n < 42) {
      s.applicable = false;
      add_note(s, "n < 42");
    }
  } else if (id.entry->walk) {
    const int r = id.r;
    const WalkTable* w = walk_table(ctx, key == "walk_recursion" ? 2 * r : r);
    const WalkTable* wr = walk_table(ctx, r);
    if (w == nullptr || wr == nullptr) {
      s.applicable = false;
      s.notes = ctx.graph ? "walk count overflows 64 bits" : "walk counts not computed for this graph";
      s.lhs = std::pow(l1, r);
      return s;
    }
    const auto per = [&](std::size_t v) { return static_cast<double>(wr->per_vertex[v]); };
    const auto cvv = [&](std::size_t v) { return static_cast<double>(cv.c_v[v]); };
    double sum = 0.0;
    if (key == "walk_nikiforov") {
      s = sides(std::pow(l1, r), static_cast<double>(wr->total) * wf);
    } else if (key == "walk_local_mixed") {
      for (std::size_t v = 0; v < wr->per_vertex.size(); ++v) sum += per(v) * std::sqrt(1.0 - 1.0 / cvv(v));
      s = sides(std::pow(l1, r), sum * std::sqrt(wf));
    } else if (key == "walk_local_conj") {
      for (std::size_t v = 0; v < wr->per_vertex.size(); ++v) sum += per(v) * (cvv(v) - 1.0) / cvv(v);
      s = sides(std::pow(l1, r), sum);
    } else {
      for (std::size_t v = 0; v < wr->per_vertex.size(); ++v) sum += per(v) * std::sqrt((cvv(v) - 1.0) / cvv(v));
      s = sides(static_cast<double>(w->total), sum * sum);
    }
  }
  return s;
}

double scale(double lhs, double rhs) { return std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

bool holds(const CatalogueEntry& e, double lhs, double rhs, double tol) {
  const double slack = rhs - lhs;
  const double bound = tol * scale(lhs, rhs);
  return e.strict ? slack > -bound : slack >= -bound;
}

}  // namespace

std::span<const CatalogueEntry> catalogue() { return kCatalogue; }

std::string CheckId::name() const {
  if (entry == nullptr) return {};
  std::string s(entry->id);
  if (entry->walk) s += "(" + std::to_string(r) + ")";
  return s;
}

CheckId parse_check_id(std::string_view text) {
  std::string_view base = text;
  std::optional<int> r;
  std::string_view digits;
  if (const auto open = text.find('('); open != std::string_view::npos && text.ends_with(')')) {
    base = text.substr(0, open);
    digits = text.substr(open + 1, text.size() - open - 2);
  } else if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    base = text.substr(0, colon);
    digits = text.substr(colon + 1);
  }
  const CatalogueEntry* e = find_entry(base);
  if (e == nullptr) {
    throw std::invalid_argument("unknown check id '" + std::string(text) + "'; known ids: " + catalogue_listing());
  }
  if (!digits.empty() || base.size() != text.size()) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("bad walk length in check id '" + std::string(text) + "'");
    }
    r = value;
  }
  if (!e->walk) {
    if (r) throw std::invalid_argument("check '" + std::string(base) + "' takes no parameter");
    return {e, 0};
  }
  if (!r) throw std::invalid_argument("check '" + std::string(base) + "' needs a walk length, e.g. " +
                                      std::string(base) + "(3)");
  if (*r < 1 || *r > kMaxWalkR) {
    throw std::invalid_argument("walk length r must lie in [1, " + std::to_string(kMaxWalkR) + "]");
  }
  return {e, *r};
}

std::vector<CheckId> parse_check_list(std::string_view text, int max_walk_r) {
  max_walk_r = std::clamp(max_walk_r, 1, kMaxWalkR);
  std::vector<CheckId> out;
  const auto add_entry = [&](const CatalogueEntry& e) {
    if (!e.walk) {
      out.push_back({&e, 0});
      return;
    }
    for (int r = 1; r <= max_walk_r; ++r) out.push_back({&e, r});
  };
  if (text == "all" || text == "theorems" || text == "conjectures") {
    for (const CatalogueEntry& e : kCatalogue) {
      if (text == "all" || (text == "theorems") == (e.kind == CheckKind::theorem)) add_entry(e);
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (item.empty()) throw std::invalid_argument("empty entry in check list");
    if (const CatalogueEntry* e = find_entry(item); e != nullptr && e->walk) {
      add_entry(*e);
    } else {
      out.push_back(parse_check_id(item));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

GraphContext GraphContext::build(const Graph& g, int max_walk_r) {
  GraphContext ctx;
  ctx.n = g.order();
  ctx.m = g.size();
  ctx.spectrum = loclab::spectrum(g);
  ctx.profile = clique_profile(g);
  ctx.predicates = loclab::predicates(g);
  ctx.walks = walk_sequence(g, 2 * std::clamp(max_walk_r, 1, kMaxWalkR));
  ctx.graph = g;
  return ctx;
}

GraphContext GraphContext::build(const DenseGraph& g, const DenseProfileOptions& options) {
  GraphContext ctx;
  ctx.n = g.order();
  ctx.m = g.size();
  ctx.spectrum = loclab::spectrum(g);
  ctx.profile = clique_profile(g, options);
  ctx.predicates = loclab::predicates(g);
  return ctx;
}

InequalityResult check(const CheckId& id, const GraphContext& ctx, const Tolerances& tol) {
  if (id.entry == nullptr) throw std::invalid_argument("empty check id");
  const CliqueProfile& p = ctx.profile;
  const CliqueView lower{p.omega, p.c_v, p.c_e};
  Sides s = evaluate(id, ctx, lower);

  InequalityResult r;
  r.id = id.name();
  r.lhs = s.lhs;
  r.rhs = s.rhs;
  r.slack = s.rhs - s.lhs;
  r.applicable = s.applicable;
  r.notes = std::move(s.notes);
  r.holds = holds(*id.entry, s.lhs, s.rhs, tol.tol);
  r.equality = std::abs(r.slack) <= tol.eq_tol * scale(s.lhs, s.rhs);
  if (id.entry->strict && r.equality) {
    r.notes += r.notes.empty() ? "" : "; ";
    r.notes += "equality: the strict form fails literally";
  }

  // Every right-hand side is nondecreasing in omega, c(v) and c(e), so a
  // pass on the lower bounds is certain, and a failure is certain only if it
  // survives the upper bounds too.
  if (!p.exact && !r.holds) {
    const CliqueView upper{p.omega_upper, p.c_v_upper, p.c_e_upper};
    const Sides hi = evaluate(id, ctx, upper);
    if (holds(*id.entry, hi.lhs, hi.rhs, tol.tol)) {
      r.certain = false;
      r.notes += r.notes.empty() ? "" : "; ";
      r.notes += "inconclusive: clique numbers only bracketed";
    }
  }
  return r;
}

InequalityResult check(std::string_view id, const GraphContext& ctx, const Tolerances& tol) {
  return check(parse_check_id(id), ctx, tol);
}

std::vector<InequalityResult> check_all(const GraphContext& ctx, const CheckAllOptions& options) {
  std::vector<InequalityResult> out;
  for (const CheckId& id : parse_check_list("all", options.max_walk_r)) {
    out.push_back(check(id, ctx, options.tolerances));
  }
  return out;
}

InequalityResult weighted_edge_local_check(const Graph& g, std::span<const double> weights, const Tolerances& tol) {
  const double l1 = weighted_spectral_radius(g, weights);
  const std::vector<int> c_e = edge_clique_numbers(g);
  double rhs = 0.0;
  for (std::size_t i = 0; i < c_e.size(); ++i) rhs += 2.0 * (1.0 - 1.0 / c_e[i]) * weights[i] * weights[i];
  InequalityResult r;
  r.id = "weighted_edge_local_turan";
  r.lhs = l1 * l1;
  r.rhs = rhs;
  r.slack = rhs - r.lhs;
  r.holds = r.slack >= -tol.tol * scale(r.lhs, r.rhs);
  r.equality = std::abs(r.slack) <= tol.eq_tol * scale(r.lhs, r.rhs);
  if (!is_connected(g)) {
    r.applicable = false;
    r.notes = "disconnected";
  }
  return r;
}

std::vector<double> read_weight_csv(std::istream& in, const Graph& g) {
  std::vector<double> weights(g.size(), 1.0);
  std::vector<bool> seen(g.size(), false);
  std::string line;
  std::size_t offset = 0;
  bool header = true;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (header) {
      std::string compact;
      for (char ch : line) {
        if (ch != ' ' && ch != '\t') compact += ch;
      }
      if (compact != "u,v,w") throw ParseError("weight file must start with the header u,v,w", line_start);
      header = false;
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("expected three fields u,v,w", line_start);
    const auto field = [&](std::size_t from, std::size_t to) {
      std::string_view f(line.data() + from, to - from);
      while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
      while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.remove_suffix(1);
      return f;
    };
    int u = 0, v = 0;
    double w = 0.0;
    const std::string_view fu = field(0, c1), fv = field(c1 + 1, c2), fw = field(c2 + 1, line.size());
    const auto bad_int = [](std::string_view f, int& out) {
      const auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
      return ec != std::errc{} || p != f.data() + f.size() || f.empty();
    };
    if (bad_int(fu, u) || bad_int(fv, v)) throw ParseError("vertex ids must be integers", line_start);
    const auto [pw, ecw] = std::from_chars(fw.data(), fw.data() + fw.size(), w);
    if (ecw != std::errc{} || pw != fw.data() + fw.size() || fw.empty()) {
      throw ParseError("weight must be a decimal number", line_start + c2 + 1);
    }
    if (!(w >= 0.0)) throw ParseError("weights must be nonnegative", line_start + c2 + 1);
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
      throw ParseError("vertex id out of range", line_start);
    }
    const int idx = g.edge_index(std::min(u, v), std::max(u, v));
    if (idx < 0) throw ParseError("pair " + std::to_string(u) + "," + std::to_string(v) + " is not an edge", line_start);
    if (seen[static_cast<std::size_t>(idx)]) throw ParseError("edge listed twice", line_start);
    seen[static_cast<std::size_t>(idx)] = true;
    weights[static_cast<std::size_t>(idx)] = w;
  }
  if (header) throw ParseError("weight file is empty", 0);
  return weights;
}

bool weak_majorizes(std::span<const double> x, std::span<const double> y) {
  const std::size_t len = std::max(x.size(), y.size());
  std::vector<double> a(x.begin(), x.end()), b(y.begin(), y.end());
  a.resize(len, 0.0);
  b.resize(len, 0.0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sb > sa) return false;
  }
  return true;
}

double p_norm(std::span<const double> x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace loclab
