#include <doctest.h>

#include "loclab/cliques.hpp"
#include "loclab/generators.hpp"
#include "loclab/rng.hpp"
#include "loclab/spectra.hpp"
#include "oracles.hpp"

using namespace loclab;

namespace {

void check_profile(const Graph& g) {
  const CliqueProfile p = clique_profile(g);
  CHECK(p.exact);
  CHECK(p.omega == oracle::clique_number(g));
  CHECK(p.omega_upper == p.omega);
  for (int v = 0; v < g.order(); ++v) CHECK(p.c_v[v] == oracle::largest_clique_containing(g, {v}));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[i];
    CHECK(p.c_e[i] == oracle::largest_clique_containing(g, {e.u, e.v}));
  }
  CHECK(p.t == oracle::triangles(g));
  int tv = 0;
  for (int c : p.c_v) tv += c >= 3 ? 1 : 0;
  CHECK(p.tv == tv);
}

}  // namespace

TEST_CASE("clique profile against brute force") {
  for (int n = 1; n <= 6; ++n) {
    LabeledEnumeration all(n);
    for (std::uint64_t i = 0; i < all.count(); i += 5) check_profile(all.at(i));
  }
  for (std::uint64_t s = 0; s < 40; ++s) check_profile(random_gnp(12, 0.5, s));
  check_profile(petersen_graph());
  check_profile(bowtie_graph());
}

TEST_CASE("max clique witnesses are cliques") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_gnp(64, 0.6, s);
    const Clique c = max_clique(g);
    std::vector<int> members;
    for (int v = 0; v < 64; ++v)
      if ((c.members >> v) & 1U) members.push_back(v);
    CHECK(static_cast<int>(members.size()) == c.size);
    CHECK(oracle::is_clique(g, members));
    CHECK(clique_profile(g).omega == c.size);
  }
  CHECK(max_clique(complete_graph(64)).size == 64);
  CHECK(max_clique(empty_graph(5)).size == 1);
}

TEST_CASE("triangle identities") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = random_gnp(20, 0.4, s);
    const std::uint64_t t = oracle::triangles(g);
    CHECK(triangle_count(g) == t);
    CHECK(neighborhood_edge_sum(g) == 3 * t);
    CHECK(power_sum(spectrum(g), 3) / 6.0 == doctest::Approx(static_cast<double>(t)).epsilon(1e-9).scale(1));
  }
  CHECK(triangle_count(complete_graph(5)) == 10);
  CHECK(triangle_count(petersen_graph()) == 0);
}

TEST_CASE("diamond-free graphs satisfy sum 2(1 - 1/c(e)) = m + t") {
  // Every edge in a diamond-free graph lies in at most one triangle, so
  // c(e) = 3 on triangle edges and 2 elsewhere.
  int seen = 0;
  for (std::uint64_t s = 0; s < 2000 && seen < 200; ++s) {
    const Graph g = random_gnp(10, 0.35, s);
    if (!predicates(g).diamond_free) continue;
    ++seen;
    const CliqueProfile p = clique_profile(g);
    double sum = 0.0;
    for (int c : p.c_e) sum += 2.0 * (1.0 - 1.0 / c);
    // Each triangle edge contributes 4/3 = 1 + 1/3 and there are 3t of them.
    CHECK(sum == doctest::Approx(static_cast<double>(g.size()) + static_cast<double>(p.t)));
  }
  CHECK(seen >= 50);
}

TEST_CASE("clique numbers never drop when an edge is added") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = random_gnp(9, 0.4, s);
    const CliqueProfile before = clique_profile(g);
    Rng rng(s);
    int u = static_cast<int>(rng.below(9)), v = static_cast<int>(rng.below(9));
    if (u == v || g.adjacent(u, v)) continue;
    const Graph h = g.with_edge(u, v);
    const CliqueProfile after = clique_profile(h);
    CHECK(after.omega >= before.omega);
    for (int x = 0; x < 9; ++x) CHECK(after.c_v[x] >= before.c_v[x]);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Edge e = g.edges()[i];
      CHECK(after.c_e[static_cast<std::size_t>(h.edge_index(e.u, e.v))] >= before.c_e[i]);
    }
  }
}

TEST_CASE("predicates") {
  const Predicates k4 = predicates(complete_graph(4));
  CHECK(k4.complete);
  CHECK(k4.regular);
  CHECK_FALSE(k4.diamond_free);  // diamonds as subgraphs, not induced
  CHECK(k4.complete_multipartite);
  CHECK_FALSE(k4.triangle_free);

  const Predicates d = predicates(diamond_graph());
  CHECK_FALSE(d.diamond_free);
  CHECK_FALSE(d.regular);
  CHECK(d.connected);

  const Predicates c5 = predicates(cycle_graph(5));
  CHECK(c5.triangle_free);
  CHECK_FALSE(c5.bipartite);
  CHECK_FALSE(c5.complete_multipartite);

  const Predicates k33 = predicates(complete_bipartite(3, 3));
  CHECK(k33.bipartite);
  CHECK(k33.complete_multipartite);

  const Predicates bow = predicates(bowtie_graph());
  CHECK(bow.diamond_free);

  const Predicates two = predicates(disjoint_union(complete_graph(2), complete_graph(2)));
  CHECK_FALSE(two.connected);
  CHECK_FALSE(two.complete_multipartite);

  CHECK(predicates(empty_graph(4)).complete_multipartite);
}

TEST_CASE("dense profile matches the word profile") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_gnp(40 + static_cast<int>(s % 25), 0.5, s);
    const CliqueProfile a = clique_profile(g);
    const CliqueProfile b = clique_profile(DenseGraph(g));
    CHECK(b.exact);
    CHECK(a.omega == b.omega);
    CHECK(a.c_v == b.c_v);
    CHECK(a.c_e == b.c_e);
    CHECK(a.t == b.t);
    CHECK(a.tv == b.tv);
    const Predicates pa = predicates(g), pb = predicates(DenseGraph(g));
    CHECK(pa.diamond_free == pb.diamond_free);
    CHECK(pa.regular == pb.regular);
    CHECK(pa.connected == pb.connected);
  }
}

TEST_CASE("dense max clique on a planted clique") {
  DenseGraph g(200);
  for (int u = 0; u < 200; ++u)
    for (int v = u + 1; v < 200; ++v)
      if ((u * 7 + v * 13) % 5 == 0) g.add_edge(u, v);
  for (int u = 100; u < 120; ++u)
    for (int v = u + 1; v < 120; ++v) g.add_edge(u, v);
  const auto w = max_clique(g);
  CHECK(w.size() >= 20);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) CHECK(g.adjacent(w[i], w[j]));
}

TEST_CASE("budgeted dense profile brackets the truth") {
  const DenseGraph g = random_gnp_dense(300, 0.5, 9);
  DenseProfileOptions quick;
  quick.budget_seconds = 1e-6;
  const CliqueProfile rough = clique_profile(g, quick);
  const CliqueProfile exact = clique_profile(g);
  CHECK(exact.exact);
  CHECK(rough.omega <= exact.omega);
  CHECK(rough.omega_upper >= exact.omega);
  for (std::size_t v = 0; v < exact.c_v.size(); ++v) {
    CHECK(rough.c_v[v] <= exact.c_v[v]);
    CHECK(rough.c_v_upper[v] >= exact.c_v[v]);
  }
  for (std::size_t e = 0; e < exact.c_e.size(); ++e) {
    CHECK(rough.c_e[e] <= exact.c_e[e]);
    CHECK(rough.c_e_upper[e] >= exact.c_e[e]);
  }
  CHECK(rough.t == exact.t);
}
