#include <doctest.h>

#include <cmath>
#include <sstream>

#include "loclab/errors.hpp"
#include "loclab/generators.hpp"
#include "loclab/inequalities.hpp"
#include "loclab/rng.hpp"

using namespace loclab;

namespace {

InequalityResult run(std::string_view id, const Graph& g) { return check(id, GraphContext::build(g)); }

Graph multipartite(int parts, int size) {
  const std::vector<int> sizes(static_cast<std::size_t>(parts), size);
  return complete_multipartite(sizes);
}

}  // namespace

TEST_CASE("catalogue is sorted and complete") {
  const auto cat = catalogue();
  CHECK(cat.size() == 24);
  for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].id < cat[i].id);
  int conjectures = 0;
  for (const auto& e : cat) {
    CHECK_FALSE(e.anchor.empty());
    CHECK_FALSE(e.statement.empty());
    conjectures += e.kind == CheckKind::conjecture ? 1 : 0;
  }
  CHECK(conjectures == 5);
}

TEST_CASE("check ids") {
  CHECK(parse_check_id("wilf").name() == "wilf");
  CHECK(parse_check_id("walk_nikiforov(3)").name() == "walk_nikiforov(3)");
  CHECK(parse_check_id("walk_nikiforov:3").r == 3);
  CHECK_THROWS_AS(parse_check_id("walk_nikiforov"), std::invalid_argument);
  CHECK_THROWS_AS(parse_check_id("walk_nikiforov(11)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_check_id("walk_nikiforov(0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_check_id("wilf(2)"), std::invalid_argument);
  try {
    parse_check_id("nonsense");
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("splus_wilf") != std::string::npos);
  }
  CHECK(parse_check_list("wilf,walk_recursion", 4).size() == 5);
  CHECK(parse_check_list("all", 6).size() == 20 + 4 * 6);
  CHECK(parse_check_list("conjectures", 2).size() == 4 + 2);
  CHECK_THROWS(parse_check_list("wilf,,bn"));
}

TEST_CASE("worked examples") {
  const Graph oct = multipartite(3, 2);
  const auto wilf = run("wilf", oct);
  CHECK(wilf.lhs == doctest::Approx(4.0));
  CHECK(wilf.rhs == doctest::Approx(4.0));
  CHECK(wilf.equality);
  CHECK(wilf.holds);

  const Graph u = disjoint_union(complete_bipartite(2, 2), complete_bipartite(3, 3));
  const auto lbn = run("local_bn", u);
  CHECK(lbn.lhs == doctest::Approx(13.0));
  CHECK(lbn.rhs == doctest::Approx(13.0));
  CHECK(lbn.equality);
  CHECK(lbn.applicable);

  const auto vl = run("vertex_local_splus_wilf", diamond_graph());
  CHECK(vl.lhs == doctest::Approx(2.5616).epsilon(1e-4));
  CHECK(vl.rhs == doctest::Approx(8.0 / 3.0));
  CHECK(vl.holds);

  const auto bn = run("bn", complete_graph(4));
  CHECK_FALSE(bn.applicable);
  CHECK(bn.slack == doctest::Approx(-1.0));
  CHECK_FALSE(bn.holds);
  CHECK_FALSE(bn.binding_violation());

  const auto st = run("splus_triangle", complete_bipartite(3, 3));
  CHECK(st.lhs == doctest::Approx(3.0));
  CHECK(st.rhs == doctest::Approx(3.0));
  CHECK(st.equality);

  const auto wl = run("walk_local_conj(3)", cycle_graph(5));
  CHECK(wl.lhs == doctest::Approx(8.0));
  CHECK(wl.rhs == doctest::Approx(10.0));
  CHECK(wl.holds);
}

TEST_CASE("K1 and Petersen") {
  const GraphContext k1 = GraphContext::build(complete_graph(1));
  for (const auto& r : check_all(k1)) {
    CHECK_MESSAGE(r.holds, r.id);
  }
  for (const auto& r : check_all(GraphContext::build(petersen_graph()))) {
    if (r.applicable) CHECK_MESSAGE(r.holds, r.id);
  }
}

TEST_CASE("theorems hold on random graphs") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Graph g = random_gnp(30, 0.4, stream_seed(5, s));
    for (const auto& r : check_all(GraphContext::build(g))) {
      const CheckId id = parse_check_id(r.id);
      if (id.entry->kind == CheckKind::theorem) CHECK_MESSAGE(!r.binding_violation(), r.id);
    }
  }
}

TEST_CASE("triangle-free graphs collapse local right-hand sides to m") {
  for (const Graph& g : {cycle_graph(5), petersen_graph(), complete_bipartite(3, 4), path_graph(6)}) {
    const GraphContext ctx = GraphContext::build(g);
    CHECK(check("local_bn", ctx).rhs == static_cast<double>(g.size()));
    CHECK(check("edge_local_spectral_turan", ctx).rhs == static_cast<double>(g.size()));
  }
}

TEST_CASE("complete regular multipartite graphs are extremal") {
  for (int parts = 2; parts <= 4; ++parts) {
    for (int size = 1; size <= 3; ++size) {
      const GraphContext ctx = GraphContext::build(multipartite(parts, size));
      for (const char* id : {"wilf", "spectral_turan", "edge_local_spectral_turan", "splus_wilf"}) {
        const auto r = check(id, ctx);
        CHECK_MESSAGE(r.equality, id, " parts=", parts, " size=", size);
        CHECK(r.holds);
      }
    }
  }
}

TEST_CASE("strict triangle bound records equality") {
  // K_{2,3}: lambda1^2 = 6 and lambda2 = 0, so lhs = m with t = 0.
  const auto r = run("bn_triangle", complete_bipartite(2, 3));
  CHECK(r.lhs == doctest::Approx(6.0));
  CHECK(r.equality);
  CHECK(r.holds);
  CHECK(r.notes.find("strict") != std::string::npos);
}

TEST_CASE("applicability rules") {
  CHECK_FALSE(run("bn_diamond", diamond_graph()).applicable);
  CHECK(run("bn_diamond", bowtie_graph()).applicable);
  const auto lbd = run("local_bn_diamond", bowtie_graph());  // t = 2
  CHECK_FALSE(lbd.applicable);
  CHECK_FALSE(lbd.notes.empty());
  CHECK_FALSE(run("wilf_diamond_free", petersen_graph()).applicable);
  CHECK(run("splus_regular_local", petersen_graph()).applicable);
  CHECK_FALSE(run("splus_regular_local", diamond_graph()).applicable);
  CHECK_FALSE(run("weighted_edge_local_turan", disjoint_union(complete_graph(2), complete_graph(3))).applicable);
}

TEST_CASE("weighted edge-local bound") {
  const Graph k3 = complete_graph(3);
  const double w[] = {1.0, 2.0, 3.0};
  const auto r = weighted_edge_local_check(k3, w);
  CHECK(r.rhs == doctest::Approx(4.0 / 3.0 * 14.0));
  CHECK(r.holds);
  CHECK(r.applicable);

  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_gnp(10, 0.6, s);
    if (!is_connected(g)) continue;
    const std::vector<double> ones(g.size(), 1.0);
    const auto a = weighted_edge_local_check(g, ones);
    const auto b = check("edge_local_spectral_turan", GraphContext::build(g));
    CHECK(a.lhs == doctest::Approx(b.lhs));
    CHECK(a.rhs == doctest::Approx(b.rhs));

    Rng rng(s);
    std::vector<double> x(g.size()), x3(g.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = rng.uniform() * 4.0;
      x3[i] = 3.0 * x[i];
    }
    const auto c = weighted_edge_local_check(g, x);
    const auto d = weighted_edge_local_check(g, x3);
    CHECK(c.holds);
    CHECK(d.lhs == doctest::Approx(9.0 * c.lhs));
    CHECK(d.rhs == doctest::Approx(9.0 * c.rhs));
  }
}

TEST_CASE("weight csv") {
  const Graph k3 = complete_graph(3);
  std::istringstream ok("u,v,w\n0,1,1.5\n2,1, 3\n");
  const auto w = read_weight_csv(ok, k3);
  CHECK(w == std::vector<double>{1.5, 1.0, 3.0});

  std::istringstream no_header("0,1,2\n");
  CHECK_THROWS_AS(read_weight_csv(no_header, k3), ParseError);
  std::istringstream negative("u,v,w\n0,1,-1\n");
  CHECK_THROWS_AS(read_weight_csv(negative, k3), ParseError);
  std::istringstream dup("u,v,w\n0,1,1\n1,0,2\n");
  CHECK_THROWS_AS(read_weight_csv(dup, k3), ParseError);
  std::istringstream non_edge("u,v,w\n0,2,1\n");
  CHECK_THROWS_AS(read_weight_csv(non_edge, path_graph(3)), ParseError);
  try {
    std::istringstream bad("u,v,w\n0,1,x\n");
    read_weight_csv(bad, k3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 10);
  }
}

TEST_CASE("weak majorization and p-norms") {
  const double x[] = {3.0, 1.0}, y[] = {2.0, 2.0};
  CHECK(weak_majorizes(x, y));
  CHECK_FALSE(weak_majorizes(y, x));
  const double longer[] = {2.0, 1.0, 1.0};
  CHECK_FALSE(weak_majorizes(longer, x));
  CHECK(weak_majorizes(x, longer));  // (3,1,0) vs (2,1,1)
  CHECK(weak_majorizes(x, std::span<const double>{}));
  CHECK(p_norm(x, 2.0) == doctest::Approx(std::sqrt(10.0)));
  CHECK(p_norm(x, 1.0) == doctest::Approx(4.0));
  CHECK(weak_majorizes(y, y));
}
