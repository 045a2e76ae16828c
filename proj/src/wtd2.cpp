#include "wtd/wtd2.hpp"

#include <algorithm>
#include <limits>

#include "wtd/domination.hpp"
#include "wtd/hypergraph.hpp"
#include "wtd/structure.hpp"

namespace wtd {
namespace {

void validate_step1(const W2Recipe& r) {
  if (r.h.order() < 2) throw W2RecipeError(1, "H needs at least one edge");
  if (r.h.has_isolated_vertex()) throw W2RecipeError(1, "H has an isolated vertex");
  if (!bipartition(r.h)) throw W2RecipeError(1, "H is not bipartite");
}

void validate_step2(const W2Recipe& r, std::size_t budget) {
  std::vector<VertexSet> covers;
  for_each_minimal_transversal(minimize_family(r.h.order(), [&] {
                                 std::vector<VertexSet> raw;
                                 for (const Edge& e : r.h.edges()) raw.push_back(VertexSet{e.u, e.v});
                                 return raw;
                               }()),
                               [&](VertexSet s) {
                                 covers.push_back(s);
                                 return covers.size() <= budget;
                               });
  if (covers.size() > budget)
    throw W2RecipeError(2, "H has more than " + std::to_string(budget) + " minimal vertex covers");
  std::sort(covers.begin(), covers.end());

  const int first = r.h.order();
  const int last = r.h_prime_offset();
  std::vector<bool> id_used(static_cast<std::size_t>(last - first), false);
  std::vector<VertexSet> listed;
  for (const auto& cv : r.mvc_vertices) {
    if (cv.vertex < first || cv.vertex >= last)
      throw W2RecipeError(2, "cover vertex id " + std::to_string(cv.vertex) + " outside the fresh-vertex range");
    if (id_used[cv.vertex - first]) throw W2RecipeError(2, "cover vertex id " + std::to_string(cv.vertex) + " used twice");
    id_used[cv.vertex - first] = true;
    if (!std::binary_search(covers.begin(), covers.end(), cv.cover))
      throw W2RecipeError(2, to_string(cv.cover) + " is not a minimal vertex cover of H");
    listed.push_back(cv.cover);
  }
  std::sort(listed.begin(), listed.end());
  if (auto dup = std::adjacent_find(listed.begin(), listed.end()); dup != listed.end())
    throw W2RecipeError(2, "minimal vertex cover " + to_string(*dup) + " listed twice");
  for (VertexSet s : covers)
    if (!std::binary_search(listed.begin(), listed.end(), s))
      throw W2RecipeError(2, "missing vertex for minimal vertex cover " + to_string(s));
}

}  // namespace

Graph construct_w2(const W2Recipe& recipe, std::size_t mvc_budget) {
  validate_step1(recipe);
  validate_step2(recipe, mvc_budget);

  const int nh = recipe.h_order();
  const int n = recipe.order();
  if (n > kMaxVertices) throw W2RecipeError(4, "assembled graph exceeds " + std::to_string(kMaxVertices) + " vertices");
  Graph g(n);
  for (const Edge& e : recipe.h.edges()) g.add_edge(e.u, e.v);
  for (const auto& cv : recipe.mvc_vertices)
    for (int s : cv.cover) g.add_edge(cv.vertex, s);

  for (const Edge& e : recipe.step3_edges) {
    if (e.u == e.v || e.u < 0 || e.v >= nh) throw W2RecipeError(3, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not between two H vertices");
    if (g.adjacent(e.u, e.v)) throw W2RecipeError(3, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already present");
    g.add_edge(e.u, e.v);
  }
  for (const Edge& e : recipe.h.edges())
    for (int w : VertexSet::range(nh).without(e.u).without(e.v))
      if (!g.adjacent(w, e.u) && !g.adjacent(w, e.v))
        throw W2RecipeError(3, "vertex " + std::to_string(w) + " sees neither end of H edge " + std::to_string(e.u) + "-" + std::to_string(e.v),
                            std::array<int, 3>{w, e.u, e.v});

  const int offset = recipe.h_prime_offset();
  if (recipe.h_prime)
    for (const Edge& e : recipe.h_prime->edges()) g.add_edge(offset + e.u, offset + e.v);
  for (const Edge& e : recipe.step4_edges) {
    // Edge normalizes u < v, so the H endpoint is u.
    if (e.u < 0 || e.u >= nh || e.v < offset || e.v >= n)
      throw W2RecipeError(4, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " does not join H' to H");
    if (g.adjacent(e.u, e.v)) throw W2RecipeError(4, "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    g.add_edge(e.u, e.v);
  }
  for (const Edge& e : recipe.h.edges())
    for (int w = offset; w < n; ++w)
      if (!g.adjacent(w, e.u) && !g.adjacent(w, e.v))
        throw W2RecipeError(4, "vertex " + std::to_string(w) + " sees neither end of H edge " + std::to_string(e.u) + "-" + std::to_string(e.v),
                            std::array<int, 3>{w, e.u, e.v});

  if (!recipe.labels.empty()) g.set_labels(recipe.labels);
  return g;
}

W2Membership w2_membership(const Graph& g) {
  require_total_domination(g);
  W2Membership out;
  if (!recognize_wtd_k(g, 2).accepted) {
    out.reason = "not WTD(2)";
    return out;
  }
  if (diameter(g) != 3) {
    out.reason = "packing number is 1";
    return out;
  }

  int x = -1;
  int y = -1;
  int best = std::numeric_limits<int>::max();
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.closed_neighbors(a).intersects(g.closed_neighbors(b))) continue;
      const int cost = g.degree(a) + g.degree(b);
      if (cost < best) {
        best = cost;
        x = a;
        y = b;
      }
    }

  const DominatingEdgeSubgraph de = dominating_edge_subgraph(g);
  const VertexSet core = de.vertices;
  const std::vector<int> core_ids = core.to_vector();
  std::array<int, kMaxVertices> local{};
  for (std::size_t i = 0; i < core_ids.size(); ++i) local[core_ids[i]] = static_cast<int>(i);
  auto to_local = [&](VertexSet s) {
    VertexSet t;
    for (int v : s) t = t.with(local[v]);
    return t;
  };

  W2Recipe recipe;
  recipe.h = Graph(static_cast<int>(core_ids.size()));
  for (const Edge& e : de.edges) recipe.h.add_edge(local[e.u], local[e.v]);

  const SpernerFamily covers = minimal_vertex_covers(recipe.h);
  std::vector<int> to_input = core_ids;
  VertexSet used = core;
  for (VertexSet cover : covers.edges()) {
    int chosen = -1;
    if (cover == to_local(g.neighbors(x))) {
      chosen = x;
    } else if (cover == to_local(g.neighbors(y))) {
      chosen = y;
    } else {
      for (int v : g.vertices() - used)
        if (g.neighbors(v).subset_of(core) && to_local(g.neighbors(v)) == cover) {
          chosen = v;
          break;
        }
    }
    if (chosen < 0 || used.contains(chosen)) throw std::logic_error("no vertex realizes minimal vertex cover " + to_string(cover));
    used = used.with(chosen);
    recipe.mvc_vertices.push_back({cover, static_cast<int>(to_input.size())});
    to_input.push_back(chosen);
  }

  const VertexSet rest = g.vertices() - used;
  if (!rest.empty()) {
    auto sub = g.induced(rest);
    sub.graph.set_labels({});
    recipe.h_prime = std::move(sub.graph);
  }
  for (int v : rest) to_input.push_back(v);
  std::array<int, kMaxVertices> to_recipe{};
  for (std::size_t i = 0; i < to_input.size(); ++i) to_recipe[to_input[i]] = static_cast<int>(i);

  for (const Edge& e : g.edges()) {
    const bool in_u = core.contains(e.u);
    const bool in_v = core.contains(e.v);
    if (in_u && in_v) {
      if (!std::binary_search(de.edges.begin(), de.edges.end(), e)) recipe.step3_edges.emplace_back(local[e.u], local[e.v]);
    } else if ((in_u && rest.contains(e.v)) || (in_v && rest.contains(e.u))) {
      recipe.step4_edges.emplace_back(to_recipe[e.u], to_recipe[e.v]);
    }
  }
  std::sort(recipe.step3_edges.begin(), recipe.step3_edges.end());
  std::sort(recipe.step4_edges.begin(), recipe.step4_edges.end());

  if (g.has_labels()) {
    for (int v : to_input) recipe.labels.push_back(g.labels()[v]);
  }
  out.member = true;
  out.reason = "WTD(2) with packing number 2";
  out.recipe = std::move(recipe);
  out.recipe_to_input = std::move(to_input);
  return out;
}

bool recognize_triangle_free_wtd2(const Graph& g, OpCounter* ops) {
  std::uint64_t steps = 0;
  const int n = g.order();
  auto finish = [&](bool verdict) {
    if (ops != nullptr) ops->steps += steps;
    return verdict;
  };
  if (n < 2) return finish(false);

  // BFS 2-colouring with degree bookkeeping.
  std::vector<int> side(n, -1);
  std::vector<int> deg(n, 0);
  std::vector<int> queue;
  queue.reserve(n);
  side[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    ++steps;
    for (int w : g.neighbors(v)) {
      ++steps;
      ++deg[v];
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return finish(false);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) return finish(false);

  int size_x = 0;
  for (int v = 0; v < n; ++v, ++steps) size_x += side[v] == 0 ? 1 : 0;
  const int size_y = n - size_x;

  // X_u / Y_u: vertices adjacent to the whole opposite side.
  std::vector<bool> universal(n, false);
  int xu = 0;
  int yu = 0;
  for (int v = 0; v < n; ++v, ++steps) {
    universal[v] = deg[v] == (side[v] == 0 ? size_y : size_x);
    if (universal[v]) (side[v] == 0 ? xu : yu) += 1;
  }
  if (xu == size_x && yu == size_y) return finish(true);
  if (xu == 0 || yu == 0) return finish(false);

  // a in X \ X_u with N(a) = Y_u, and symmetrically b.
  bool found[2] = {false, false};
  for (int v = 0; v < n; ++v) {
    ++steps;
    if (universal[v] || found[side[v]]) continue;
    if (deg[v] != (side[v] == 0 ? yu : xu)) continue;
    bool inside = true;
    for (int w : g.neighbors(v)) {
      ++steps;
      if (!universal[w]) {
        inside = false;
        break;
      }
    }
    if (inside) found[side[v]] = true;
  }
  return finish(found[0] && found[1]);
}

}  // namespace wtd
