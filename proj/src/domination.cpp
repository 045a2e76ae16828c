#include "wtd/domination.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "wtd/errors.hpp"
#include "wtd/structure.hpp"

namespace wtd {

void require_total_domination(const Graph& g) {
  if (g.order() == 0 || g.has_isolated_vertex()) throw UndefinedDomination();
}

bool is_tds(const Graph& g, VertexSet s) {
  require_total_domination(g);
  for (int v = 0; v < g.order(); ++v)
    if (!g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_minimal_tds(const Graph& g, VertexSet s) {
  if (!is_tds(g, s)) return false;
  for (int x : s)
    if (is_tds(g, s.without(x))) return false;
  return true;
}

SpernerFamily mtds(const Graph& g) { return minimal_transversals(neighborhood_hypergraph(g)); }

TotalDominationReport total_domination_report(const SpernerFamily& minimal_tds) {
  if (minimal_tds.empty()) throw std::invalid_argument("no minimal total dominating sets");
  TotalDominationReport r;
  r.gamma_t = kMaxVertices + 1;
  for (VertexSet s : minimal_tds.edges()) {
    // Families are sorted by mask, so the first hit of each extreme is the smallest mask.
    if (s.size() < r.gamma_t) {
      r.gamma_t = s.size();
      r.witness_min = s;
    }
    if (s.size() > r.upper_gamma_t) {
      r.upper_gamma_t = s.size();
      r.witness_max = s;
    }
  }
  r.is_wtd = r.gamma_t == r.upper_gamma_t;
  r.mtds_count = minimal_tds.size();
  return r;
}

TotalDominationReport total_domination_report(const Graph& g) { return total_domination_report(mtds(g)); }

WtdRecognition recognize_wtd_k(const Graph& g, int k) {
  require_total_domination(g);
  if (k < 2) throw std::invalid_argument("k must be at least 2: a total dominating set has two adjacent vertices");
  const SizeDecision d = all_minimal_transversals_have_size_k(neighborhood_hypergraph(g), k);
  return {d.holds, d.reason, d.witness};
}

bool has_dominating_edge(const Graph& g) {
  const VertexSet all = g.vertices();
  for (const Edge& e : g.edges())
    if ((g.neighbors(e.u) | g.neighbors(e.v)) == all) return true;
  return false;
}

DominatingEdgeSubgraph dominating_edge_subgraph(const Graph& g) {
  require_total_domination(g);
  DominatingEdgeSubgraph out;
  const VertexSet all = g.vertices();
  for (const Edge& e : g.edges()) {
    if ((g.neighbors(e.u) | g.neighbors(e.v)) != all) continue;
    out.edges.push_back(e);
    out.vertices = out.vertices.with(e.u).with(e.v);
  }
  out.empty = out.edges.empty();
  return out;
}

int packing_number_general(const Graph& g) {
  // u, v conflict iff their closed neighbourhoods meet (distance <= 2).
  Graph conflict(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.closed_neighbors(u).intersects(g.closed_neighbors(v))) conflict.add_edge(u, v);
  return independence_number(conflict, conflict.vertices());
}

int packing_number(const Graph& g) {
  if (g.order() > 0 && !g.has_isolated_vertex() && has_dominating_edge(g)) return diameter(g) == 3 ? 2 : 1;
  return packing_number_general(g);
}

SpernerFamily minimal_vertex_covers(int n, const EdgeSet& edges) {
  if (edges.empty()) throw std::invalid_argument("minimal vertex covers need at least one edge");
  std::vector<VertexSet> raw;
  raw.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v >= n) throw std::invalid_argument("edge out of range");
    raw.push_back(VertexSet{e.u, e.v});
  }
  return minimal_transversals(minimize_family(n, raw));
}

SpernerFamily minimal_vertex_covers(const Graph& g) { return minimal_vertex_covers(g.order(), g.edges()); }

std::optional<VertexSet> Realization::to_ground(VertexSet s) const {
  VertexSet out;
  int matched = 0;
  for (std::size_t i = 0; i < ground_to_vertex.size(); ++i) {
    if (ground_to_vertex[i] >= 0 && s.contains(ground_to_vertex[i])) {
      out = out.with(static_cast<int>(i));
      ++matched;
    }
  }
  if (matched != s.size()) return std::nullopt;
  return out;
}

namespace {

// Core edges (in ground ids) for the chosen policy, already validated.
EdgeSet core_edges_for(const SpernerFamily& family, VertexSet core, const RealizeOptions& options) {
  const auto& members = family.edges();
  EdgeSet edges;
  switch (options.policy) {
    case CorePolicy::complete:
      for (int u : core)
        for (int v : core - VertexSet::range(u + 1)) edges.emplace_back(u, v);
      return edges;

    case CorePolicy::minimal_valid: {
      std::array<VertexSet, kMaxVertices> adj{};
      for (int a : core) {
        while (true) {
          std::vector<VertexSet> unmet;
          for (VertexSet m : members)
            if (!adj[a].intersects(m)) unmet.push_back(m);
          if (unmet.empty()) break;
          // Neighbour inside the first unmet member that meets the most unmet members.
          int best = -1;
          int best_score = -1;
          for (int u : unmet.front().without(a)) {
            const auto score = std::count_if(unmet.begin(), unmet.end(), [&](VertexSet m) { return m.contains(u); });
            if (score > best_score) {
              best = u;
              best_score = static_cast<int>(score);
            }
          }
          adj[a] = adj[a].with(best);
          adj[best] = adj[best].with(a);
        }
      }
      for (int u : core)
        for (int v : adj[u] - VertexSet::range(u + 1)) edges.emplace_back(u, v);
      return edges;
    }

    case CorePolicy::explicit_edges: {
      std::array<VertexSet, kMaxVertices> adj{};
      for (const Edge& e : options.core_edges) {
        if (e.u == e.v) throw std::invalid_argument("core edge is a self-loop");
        if (!core.contains(e.u) || !core.contains(e.v))
          throw std::invalid_argument("core edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                      " leaves the union of the members");
        if (adj[e.u].contains(e.v)) throw std::invalid_argument("duplicate core edge");
        adj[e.u] = adj[e.u].with(e.v);
        adj[e.v] = adj[e.v].with(e.u);
        edges.push_back(e);
      }
      for (int a : core)
        for (VertexSet m : members)
          if (!adj[a].intersects(m))
            throw std::invalid_argument("core vertex " + std::to_string(a) + " has no neighbour in member " +
                                        to_string(m));
      std::sort(edges.begin(), edges.end());
      return edges;
    }
  }
  return edges;
}

std::string member_name(VertexSet t, const std::vector<std::string>& ground_labels) {
  std::string out = "v{";
  bool first = true;
  for (int x : t) {
    if (!first) out += ',';
    out += ground_labels.empty() ? std::to_string(x) : ground_labels[x];
    first = false;
  }
  return out + "}";
}

}  // namespace

Realization realize_mtds(const SpernerFamily& family, const RealizeOptions& options) {
  if (family.empty()) throw std::invalid_argument("cannot realize the empty family");
  for (VertexSet m : family.edges())
    if (m.size() < 2)
      throw std::invalid_argument("member " + to_string(m) + " is a singleton; a total dominating set has at least two vertices");
  if (!options.ground_labels.empty() && static_cast<int>(options.ground_labels.size()) != family.ground())
    throw std::invalid_argument("ground label count does not match ground size");

  const VertexSet core = family.support();
  const EdgeSet core_edges = core_edges_for(family, core, options);
  const SpernerFamily transversals = minimal_transversals(family);
  const int extension_order = options.extension ? options.extension->order() : 0;
  const int n = core.size() + static_cast<int>(transversals.size()) + extension_order;
  if (n > kMaxVertices) throw CapabilityError("realization needs " + std::to_string(n) + " vertices");

  Realization out;
  out.ground_to_vertex.assign(family.ground(), -1);
  std::vector<std::string> labels;
  int next = 0;
  for (int a : core) {
    out.ground_to_vertex[a] = next++;
    labels.push_back(options.ground_labels.empty() ? std::to_string(a) : options.ground_labels[a]);
  }
  Graph g(n);
  for (const Edge& e : core_edges) g.add_edge(out.ground_to_vertex[e.u], out.ground_to_vertex[e.v]);

  auto to_vertices = [&](VertexSet ground_set) {
    VertexSet s;
    for (int x : ground_set) s = s.with(out.ground_to_vertex[x]);
    return s;
  };
  for (VertexSet t : transversals.edges()) {
    const int v = next++;
    for (int w : to_vertices(t)) g.add_edge(v, w);
    labels.push_back(member_name(t, options.ground_labels));
  }

  if (options.extension) {
    const Graph& ext = *options.extension;
    const int offset = next;
    const VertexSet anchor = to_vertices(transversals.edges().front());
    for (int w = 0; w < ext.order(); ++w) {
      labels.push_back(ext.has_labels() ? ext.labels()[w] : "w" + std::to_string(w));
      for (int a : anchor) g.add_edge(offset + w, a);
    }
    for (const Edge& e : ext.edges()) g.add_edge(offset + e.u, offset + e.v);
  }

  // Disambiguate label clashes (e.g. an extension vertex reusing a core name).
  std::set<std::string> seen;
  for (auto& l : labels) {
    while (!seen.insert(l).second) l += "'";
  }
  g.set_labels(std::move(labels));
  out.graph = std::move(g);
  return out;
}

}  // namespace wtd
