// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wtd/cli.hpp"
#include "wtd/domination.hpp"
#include "wtd/graph_io.hpp"
#include "wtd/reduction.hpp"
#include "wtd/search.hpp"
#include "wtd/structure.hpp"
#include "wtd/wtd2.hpp"

using namespace wtd;
using json = nlohmann::json;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

/// Accumulates failures; keeps the first few messages.
struct Tracker {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Verdict verdict(const std::string& summary) const {
    std::string d = summary + ", " + std::to_string(checked) + " checks";
    if (failures > 0) d += ", " + std::to_string(failures) + " failures (first: " + first + ")";
    return {failures == 0, d};
  }
};

std::vector<oracle::Mask> masks(const SpernerFamily& f) {
  std::vector<oracle::Mask> out;
  for (VertexSet s : f.edges()) out.push_back(s.bits());
  return out;
}

std::set<std::set<std::string>> name_pairs(const json& edges) {
  std::set<std::set<std::string>> out;
  for (const auto& e : edges) out.insert({e[0].get<std::string>(), e[1].get<std::string>()});
  return out;
}

json analyze_via_cli(const Graph& g, const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "wtd_acceptance";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << write_edge_list(g);
  std::ostringstream out, err;
  if (run_cli({"analyze", path.string()}, out, err) != 0) throw std::runtime_error("analyze failed: " + err.str());
  return json::parse(out.str());
}

/// Calls visit(sel) for every nonempty induced matching of g.
void for_each_induced_matching(const Graph& g, const std::function<void(const MatchingSelection&)>& visit) {
  const EdgeSet edges = g.edges();
  MatchingSelection sel;
  std::function<void(std::size_t, VertexSet, VertexSet)> go = [&](std::size_t from, VertexSet used, VertexSet blocked) {
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Edge e = edges[i];
      if (blocked.contains(e.u) || blocked.contains(e.v)) continue;
      sel.edges.push_back(e);
      visit(sel);
      const VertexSet now = used.with(e.u).with(e.v);
      go(i + 1, now, blocked | g.closed_neighbors(e.u) | g.closed_neighbors(e.v));
      sel.edges.pop_back();
    }
  };
  go(0, VertexSet{}, VertexSet{});
}

Verdict ac1() {
  Tracker t;
  const auto start = std::chrono::steady_clock::now();
  const json house = analyze_via_cli(fixtures::house(), "house.txt");
  t.expect(house["is_wtd"] == true && house["gamma_t"] == 2, "house not WTD(2)");
  const std::set<std::set<std::string>> expected{{"z", "y"}, {"y", "t"}, {"t", "w"}};
  t.expect(name_pairs(house["g_de_edges"]) == expected, "house G_de edges " + house["g_de_edges"].dump());
  const json c6 = analyze_via_cli(fixtures::cycle(6), "c6.txt");
  t.expect(c6["is_wtd"] == true, "C6 not WTD");
  const json p5 = analyze_via_cli(fixtures::path(5), "p5.txt");
  t.expect(p5["is_wtd"] == false && p5["gamma_t"] == 3 && p5["Gamma_t"] == 4, "P5 report " + p5.dump());
  t.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "slower than 1 s");
  return t.verdict("house, C6, P5");
}

Verdict ac2() {
  Tracker t;
  const auto& corpus = fixtures::connected_classes(2, 7);
  for (const Graph& g : corpus) t.expect(masks(mtds(g)) == oracle::minimal_tds(g), write_graph6(g));
  return t.verdict(std::to_string(corpus.size()) + " connected classes, n <= 7");
}

Verdict ac3() {
  Tracker t;
  auto is_open_nbhd = [](const Graph& g, VertexSet s) {
    for (int v = 0; v < g.order(); ++v)
      if (g.neighbors(v) == s) return true;
    return false;
  };
  std::size_t wtd2 = 0;
  for (const Graph& g : fixtures::connected_classes(2, 7)) {
    for (VertexSet tr : minimal_transversals(mtds(g)).edges()) t.expect(is_open_nbhd(g, tr), "transversal of " + write_graph6(g));
    const auto facts = oracle::domination_facts(g);
    if (!facts.is_wtd || facts.gamma_t != 2) continue;
    ++wtd2;
    const auto de = dominating_edge_subgraph(g);
    for (VertexSet s : minimal_vertex_covers(g.order(), de.edges).edges()) t.expect(is_open_nbhd(g, s), "G_de cover of " + write_graph6(g));
  }
  return t.verdict("n <= 7, " + std::to_string(wtd2) + " WTD(2) graphs for the cover property");
}

Verdict ac4() {
  Tracker t;
  std::mt19937_64 rng(20261018);
  std::set<std::pair<int, std::vector<oracle::Mask>>> distinct;
  std::size_t cases = 0;
  while (cases < 600) {
    const int ground = 2 + static_cast<int>(rng() % 5);
    const int count = 1 + static_cast<int>(rng() % 4);
    std::vector<VertexSet> raw;
    for (int i = 0; i < count; ++i) {
      const VertexSet s(rng() & VertexSet::range(ground).bits());
      if (s.size() >= 2) raw.push_back(s);
    }
    if (raw.empty()) continue;
    const SpernerFamily f = minimize_family(ground, raw);
    ++cases;
    distinct.insert({ground, masks(f)});
    const Realization r = realize_mtds(f);
    std::vector<oracle::Mask> back;
    bool core_only = true;
    for (oracle::Mask s : oracle::minimal_tds(r.graph)) {
      const auto g = r.to_ground(VertexSet(s));
      if (!g) {
        core_only = false;
        break;
      }
      back.push_back(g->bits());
    }
    std::sort(back.begin(), back.end());
    t.expect(core_only && back == masks(f), "family over " + std::to_string(ground));
  }
  return t.verdict(std::to_string(cases) + " sampled families (" + std::to_string(distinct.size()) + " distinct)");
}

Verdict ac5() {
  Tracker t;
  for (const Graph& g : fixtures::connected_classes(2, 7)) {
    const auto facts = oracle::domination_facts(g);
    for (int k = 2; k <= 4; ++k)
      t.expect(recognize_wtd_k(g, k).accepted == (facts.is_wtd && facts.gamma_t == k), write_graph6(g) + " k=" + std::to_string(k));
  }
  return t.verdict("connected n <= 7, k in {2,3,4}");
}

/// Random valid steps 3 and 4 over h, one cover vertex per minimal vertex cover.
W2Recipe random_recipe(std::mt19937_64& rng, const Graph& h) {
  W2Recipe r;
  r.h = h;
  const int nh = h.order();
  int next = nh;
  for (VertexSet s : minimal_vertex_covers(h).edges()) r.mvc_vertices.push_back({s, next++});
  Graph inner = h;
  std::bernoulli_distribution coin(0.3);
  for (int u = 0; u < nh; ++u)
    for (int v = u + 1; v < nh; ++v)
      if (!inner.adjacent(u, v) && coin(rng)) {
        inner.add_edge(u, v);
        r.step3_edges.emplace_back(u, v);
      }
  for (const Edge& e : h.edges())
    for (int w = 0; w < nh; ++w) {
      if (w == e.u || w == e.v || inner.adjacent(w, e.u) || inner.adjacent(w, e.v)) continue;
      const int pick = (rng() & 1U) ? e.u : e.v;
      inner.add_edge(w, pick);
      r.step3_edges.emplace_back(w, pick);
    }
  std::sort(r.step3_edges.begin(), r.step3_edges.end());
  const int extra = static_cast<int>(rng() % 4);
  if (extra > 0) {
    r.h_prime = oracle::random_graph(rng, extra, 0.5);
    for (int w = 0; w < extra; ++w) {
      VertexSet nbrs;
      for (int v = 0; v < nh; ++v)
        if (coin(rng)) nbrs = nbrs.with(v);
      for (const Edge& e : h.edges())
        if (!nbrs.contains(e.u) && !nbrs.contains(e.v)) nbrs = nbrs.with((rng() & 1U) ? e.u : e.v);
      for (int v : nbrs) r.step4_edges.emplace_back(v, r.h_prime_offset() + w);
    }
    std::sort(r.step4_edges.begin(), r.step4_edges.end());
  }
  return r;
}

Verdict ac6() {
  Tracker t;
  std::vector<Graph> hs;
  for (int n = 2; n <= 5; ++n)
    for (oracle::Mask code : oracle::all_classes(n, false)) {
      Graph h = oracle::graph_from_code(n, code);
      if (!h.has_isolated_vertex() && oracle::bipartite(h)) hs.push_back(std::move(h));
    }
  std::mt19937_64 rng(8);
  std::size_t recipes = 0;
  for (int round = 0; round < 20; ++round)
    for (const Graph& h : hs) {
      const Graph g = construct_w2(random_recipe(rng, h));
      const auto facts = oracle::domination_facts(g);
      ++recipes;
      t.expect(facts.is_wtd && facts.gamma_t == 2 && oracle::packing_number(g) == 2 && dominating_edge_subgraph(g).edges == h.edges(),
               "recipe over " + write_graph6(h));
    }
  std::size_t members = 0;
  for (const Graph& g : fixtures::connected_classes(2, 8)) {
    const auto facts = oracle::domination_facts(g);
    const bool expected = facts.is_wtd && facts.gamma_t == 2 && oracle::packing_number(g) == 2;
    const W2Membership m = w2_membership(g);
    t.expect(m.member == expected, "membership of " + write_graph6(g));
    if (!m.member || !expected) continue;
    ++members;
    const Graph rebuilt = construct_w2(*m.recipe);
    t.expect(oracle::isomorphic(rebuilt, g) && rebuilt.relabeled(m.recipe_to_input).same_structure(g), "rebuild of " + write_graph6(g));
  }
  return t.verdict(std::to_string(recipes) + " recipes over " + std::to_string(hs.size()) + " bipartite h; " + std::to_string(members) +
                   " W2 members with n <= 8 rebuilt");
}

Verdict ac7() {
  Tracker t;
  SearchFilter f;
  f.n_max = 8;
  f.triangle_free_only = true;
  std::size_t graphs = 0;
  enumerate_graphs(f, [&](const Graph& g) {
    ++graphs;
    const auto facts = oracle::domination_facts(g);
    t.expect(recognize_triangle_free_wtd2(g) == (facts.is_wtd && facts.gamma_t == 2), write_graph6(g));
  });
  double lo = 1e18, hi = 0;
  for (int a = 1; a <= 30; ++a) {
    const Graph g = fixtures::complete_bipartite(a, a);
    OpCounter ops;
    t.expect(recognize_triangle_free_wtd2(g, &ops), "K_{a,a} rejected");
    const double ratio = static_cast<double>(ops.steps) / (g.order() + g.size());
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  t.expect(hi / lo <= 2.0, "ops/(n+m) spread " + std::to_string(hi / lo));
  char spread[32];
  std::snprintf(spread, sizeof spread, "%.3f", hi / lo);
  return t.verdict(std::to_string(graphs) + " triangle-free graphs, ops/(n+m) spread " + spread + " on K_{a,a} up to n=60");
}

Verdict ac8() {
  Tracker t;
  SearchFilter f;
  f.n_max = 7;
  f.require_connected = false;
  std::size_t wtd_graphs = 0, reductions = 0;
  enumerate_graphs(f, [&](const Graph& g) {
    if (g.has_isolated_vertex()) return;
    const auto before = oracle::domination_facts(g);
    if (!before.is_wtd) return;
    ++wtd_graphs;
    for_each_induced_matching(g, [&](const MatchingSelection& sel) {
      validate_selection(g, sel);
      const Reduction r = reduce_by_matching(g, sel);
      if (r.status != ReductionStatus::ok) return;
      ++reductions;
      const auto after = oracle::domination_facts(r.graph);
      t.expect(after.is_wtd && before.gamma_t == after.gamma_t + 2 * static_cast<int>(sel.edges.size()), write_graph6(g));
    });
  });
  return t.verdict(std::to_string(wtd_graphs) + " WTD graphs, " + std::to_string(reductions) + " isolate-free reductions");
}

Verdict ac9() {
  SearchOptions o;
  o.filter.n_max = 8;
  o.assertions = all_assertions();
  const SearchResult r = run_search(o);
  Tracker t;
  for (const auto& [id, tally] : r.report.tallies) {
    t.checked += tally.checked;
    for (const auto& key : tally.violations) t.expect(false, id + " " + key);
  }
  const auto& fr = r.report.frontier;
  std::string d = std::to_string(r.entries.size()) + " classes, tallies " + r.report.tallies_json() + ", frontier: largest planar WTD(2) with min degree 3 has n=" +
                  (fr.largest_planar_wtd2_min3 ? std::to_string(*fr.largest_planar_wtd2_min3) + " (" + fr.largest_planar_wtd2_min3_key + ")" : "none");
  return t.verdict(d);
}

Verdict ac10() {
  Tracker t;
  std::string orders;
  for (int k = 2; k <= 3; ++k) {
    int last = 0;
    for (int m = 1; m <= 3; ++m) {
      std::vector<VertexSet> members;
      for (int i = 0; i < m; ++i) members.push_back(VertexSet::range(k * (i + 1)) - VertexSet::range(k * i));
      const Realization r = realize_mtds(sperner_family(k * m, members));
      t.expect(recognize_wtd_k(r.graph, k).accepted, "k=" + std::to_string(k) + " m=" + std::to_string(m));
      t.expect(r.graph.order() > last, "order did not grow");
      last = r.graph.order();
      orders += (orders.empty() ? "" : " ") + std::to_string(last);
    }
  }
  return t.verdict("orders " + orders);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << " " << v.detail << " (" << timing << ")" << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
