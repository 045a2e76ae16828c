#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wtd/domination.hpp"
#include "wtd/errors.hpp"
#include "wtd/structure.hpp"

using namespace wtd;

namespace {

std::vector<oracle::Mask> masks(const SpernerFamily& f) {
  std::vector<oracle::Mask> out;
  for (VertexSet s : f.edges()) out.push_back(s.bits());
  return out;
}

Graph with_isolated_vertex() {
  Graph g(3);
  g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST_CASE("labelled house graph") {
  const Graph g = fixtures::house();
  // y z t w = 1 2 3 4
  CHECK(mtds(g).edges() == std::vector<VertexSet>{{1, 2}, {1, 3}, {3, 4}});
  const auto r = total_domination_report(g);
  CHECK(r.gamma_t == 2);
  CHECK(r.upper_gamma_t == 2);
  CHECK(r.is_wtd);
  CHECK(r.mtds_count == 3);
  const auto de = dominating_edge_subgraph(g);
  CHECK(de.edges == EdgeSet{{1, 2}, {1, 3}, {3, 4}});
  CHECK(de.vertices == VertexSet{1, 2, 3, 4});
  CHECK_FALSE(de.empty);
  CHECK(packing_number(g) == 1);
}

TEST_CASE("cycles and paths") {
  const auto c6 = total_domination_report(fixtures::cycle(6));
  CHECK(c6.is_wtd);
  CHECK(c6.gamma_t == 4);
  const auto p5 = total_domination_report(fixtures::path(5));
  CHECK_FALSE(p5.is_wtd);
  CHECK(p5.gamma_t == 3);
  CHECK(p5.upper_gamma_t == 4);
  CHECK(p5.witness_min.size() == 3);
  CHECK(p5.witness_max.size() == 4);
  CHECK(mtds(fixtures::path(2)).edges() == std::vector<VertexSet>{{0, 1}});
  CHECK(dominating_edge_subgraph(fixtures::cycle(6)).empty);
}

TEST_CASE("isolated vertices leave total domination undefined") {
  const Graph g = with_isolated_vertex();
  CHECK_THROWS_AS(mtds(g), UndefinedDomination);
  CHECK_THROWS_AS(is_tds(g, VertexSet{0, 1}), UndefinedDomination);
  CHECK_THROWS_AS(recognize_wtd_k(g, 2), UndefinedDomination);
  CHECK_THROWS_AS(total_domination_report(Graph(1)), UndefinedDomination);
  CHECK_THROWS_WITH(mtds(g), doctest::Contains("total domination undefined"));
  CHECK_THROWS_AS(recognize_wtd_k(fixtures::path(3), 1), std::invalid_argument);
}

TEST_CASE("tds predicates match brute force") {
  std::mt19937_64 rng(47);
  int checked = 0;
  while (checked < 300) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.35);
    if (g.has_isolated_vertex()) continue;
    ++checked;
    const auto all = oracle::minimal_tds(g);
    for (int trial = 0; trial < 10; ++trial) {
      const VertexSet s(rng() & g.vertices().bits());
      CHECK(is_tds(g, s) == oracle::is_tds(g, s.bits()));
      CHECK(is_minimal_tds(g, s) == std::binary_search(all.begin(), all.end(), s.bits()));
    }
  }
}

TEST_CASE("minimal TDS enumeration equals brute force on connected graphs up to 6 vertices") {
  for (const Graph& g : fixtures::connected_classes(2, 6)) REQUIRE(masks(mtds(g)) == oracle::minimal_tds(g));
}

TEST_CASE("minimal TDS enumeration on disconnected isolate-free graphs") {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 200) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.25);
    if (g.has_isolated_vertex()) continue;
    ++checked;
    REQUIRE(masks(mtds(g)) == oracle::minimal_tds(g));
  }
}

TEST_CASE("every minimal transversal of the MTDS family is an open neighbourhood") {
  for (const Graph& g : fixtures::connected_classes(2, 7)) {
    for (VertexSet t : minimal_transversals(mtds(g)).edges()) {
      bool found = false;
      for (int v = 0; v < g.order() && !found; ++v) found = g.neighbors(v) == t;
      REQUIRE(found);
    }
  }
}

TEST_CASE("WTD(k) recognition agrees with the report") {
  for (const Graph& g : fixtures::connected_classes(2, 6)) {
    const auto facts = oracle::domination_facts(g);
    for (int k = 2; k <= 5; ++k) {
      const auto r = recognize_wtd_k(g, k);
      REQUIRE(r.accepted == (facts.is_wtd && facts.gamma_t == k));
      CHECK(is_minimal_tds(g, r.certificate));
      if (r.accepted) CHECK(r.certificate.size() == k);
      else CHECK(r.certificate.size() != k);
    }
  }
}

TEST_CASE("dominating edges are the TDS edges") {
  for (const Graph& g : fixtures::connected_classes(2, 6)) {
    const auto de = dominating_edge_subgraph(g);
    EdgeSet expected;
    for (const Edge& e : g.edges())
      if (oracle::is_tds(g, VertexSet{e.u, e.v}.bits())) expected.push_back(e);
    CHECK(de.edges == expected);
    CHECK(de.empty == expected.empty());
    CHECK(has_dominating_edge(g) == !expected.empty());
    CHECK(de.empty == (oracle::domination_facts(g).gamma_t != 2));
  }
}

TEST_CASE("packing number") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    CHECK(packing_number_general(g) == oracle::packing_number(g));
    CHECK(packing_number(g) == oracle::packing_number(g));
  }
  CHECK(packing_number(fixtures::path(4)) == 2);
  CHECK(packing_number(fixtures::complete_bipartite(3, 3)) == 1);
}

TEST_CASE("total domination number two forces diameter at most three") {
  for (const Graph& g : fixtures::connected_classes(2, 8)) {
    if (!has_dominating_edge(g)) continue;
    const auto d = diameter(g);
    REQUIRE(d.has_value());
    REQUIRE(*d <= 3);
    REQUIRE(packing_number(g) == packing_number_general(g));
  }
}

TEST_CASE("minimal vertex covers") {
  std::mt19937_64 rng(61);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    if (g.size() == 0) continue;
    ++checked;
    CHECK(masks(minimal_vertex_covers(g)) == oracle::minimal_vertex_covers(g));
  }
  CHECK_THROWS_AS(minimal_vertex_covers(Graph(3)), std::invalid_argument);
}

TEST_CASE("minimal vertex covers of G_de are open neighbourhoods in WTD(2) graphs") {
  for (const Graph& g : fixtures::connected_classes(2, 7)) {
    if (!has_dominating_edge(g) || !recognize_wtd_k(g, 2).accepted) continue;
    const auto de = dominating_edge_subgraph(g);
    for (VertexSet s : minimal_vertex_covers(g.order(), de.edges).edges()) {
      bool found = false;
      for (int v = 0; v < g.order() && !found; ++v) found = g.neighbors(v) == s;
      REQUIRE(found);
    }
  }
}

TEST_CASE("realizing a family") {
  const auto f = sperner_family(4, std::vector<VertexSet>{{0, 1}, {2, 3}});
  RealizeOptions named;
  named.ground_labels = {"a", "b", "c", "d"};
  const Realization r = realize_mtds(f, named);
  CHECK(r.graph.order() == 8);
  CHECK(r.graph.labels()[4] == "v{a,c}");
  std::vector<VertexSet> back;
  for (VertexSet s : mtds(r.graph).edges()) back.push_back(*r.to_ground(s));
  CHECK(back == f.edges());
  CHECK_FALSE(r.to_ground(VertexSet{4}).has_value());

  CHECK_THROWS_AS(realize_mtds(sperner_family(3, std::vector<VertexSet>{{0}, {1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(realize_mtds(SpernerFamily{}), std::invalid_argument);
}

TEST_CASE("realization core policies") {
  const auto f = sperner_family(5, std::vector<VertexSet>{{0, 1}, {1, 2}, {3, 4}});
  for (CorePolicy policy : {CorePolicy::complete, CorePolicy::minimal_valid}) {
    RealizeOptions o;
    o.policy = policy;
    const Realization r = realize_mtds(f, o);
    std::vector<oracle::Mask> back;
    for (auto s : oracle::minimal_tds(r.graph)) back.push_back(r.to_ground(VertexSet(s))->bits());
    std::sort(back.begin(), back.end());
    CHECK(back == masks(f));
  }
  RealizeOptions minimal;
  minimal.policy = CorePolicy::minimal_valid;
  RealizeOptions complete;
  CHECK(realize_mtds(f, minimal).graph.size() < realize_mtds(f, complete).graph.size());

  RealizeOptions bad;
  bad.policy = CorePolicy::explicit_edges;
  bad.core_edges = {{0, 1}};
  CHECK_THROWS_AS(realize_mtds(f, bad), std::invalid_argument);
  RealizeOptions good;
  good.policy = CorePolicy::explicit_edges;
  // every core vertex sees both ends' members: 0-1,1-2 member sides and 3-4
  good.core_edges = {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 1}, {4, 0}, {4, 2}};
  const Realization r = realize_mtds(f, good);
  std::vector<oracle::Mask> back;
  for (auto s : oracle::minimal_tds(r.graph)) back.push_back(r.to_ground(VertexSet(s))->bits());
  std::sort(back.begin(), back.end());
  CHECK(back == masks(f));
}

TEST_CASE("realization with an extension graph") {
  const auto f = sperner_family(4, std::vector<VertexSet>{{0, 1}, {2, 3}});
  RealizeOptions o;
  o.extension = fixtures::path(3);
  o.ground_labels = {"a", "b", "c", "w0"};
  const Realization r = realize_mtds(f, o);
  CHECK(r.graph.order() == 11);
  std::vector<VertexSet> back;
  for (VertexSet s : mtds(r.graph).edges()) back.push_back(*r.to_ground(s));
  CHECK(back == f.edges());
  CHECK(r.graph.labels()[8] == "w0'");  // clashes with a ground label
}

TEST_CASE("realize round-trip on sampled families") {
  std::mt19937_64 rng(67);
  int checked = 0;
  while (checked < 120) {
    const int ground = 2 + static_cast<int>(rng() % 5);
    const int count = 1 + static_cast<int>(rng() % 4);
    std::vector<VertexSet> raw;
    for (int i = 0; i < count; ++i) {
      VertexSet s(rng() & VertexSet::range(ground).bits());
      if (s.size() >= 2) raw.push_back(s);
    }
    if (raw.empty()) continue;
    const SpernerFamily f = minimize_family(ground, raw);
    if (std::any_of(f.edges().begin(), f.edges().end(), [](VertexSet s) { return s.size() < 2; })) continue;
    ++checked;
    const Realization r = realize_mtds(f);
    std::vector<oracle::Mask> back;
    for (auto s : oracle::minimal_tds(r.graph)) {
      const auto g = r.to_ground(VertexSet(s));
      REQUIRE(g.has_value());
      back.push_back(g->bits());
    }
    std::sort(back.begin(), back.end());
    REQUIRE(back == masks(f));
  }
}

TEST_CASE("realizing k-uniform families gives WTD(k) graphs") {
  for (int k = 2; k <= 3; ++k) {
    for (int m = 1; m <= 3; ++m) {
      std::vector<VertexSet> members;
      for (int i = 0; i < m; ++i) {
        VertexSet s;
        for (int j = 0; j < k; ++j) s = s.with(i + j);  // overlapping windows
        members.push_back(s);
      }
      const auto f = sperner_family(m + k - 1, members);
      const Realization r = realize_mtds(f);
      CHECK(recognize_wtd_k(r.graph, k).accepted);
    }
  }
}
