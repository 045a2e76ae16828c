#include "wtd/structure.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wtd {
namespace {

VertexSet reach(const Graph& g, int source) {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    frontier = g.neighbors(frontier) - seen;
    seen |= frontier;
  }
  return seen;
}

int max_matching(const std::array<VertexSet, kMaxVertices>& adj, VertexSet avail) {
  // Drop vertices with no partner left; then branch on the lowest one.
  while (!avail.empty() && !adj[avail.front()].intersects(avail)) avail = avail.without(avail.front());
  if (avail.size() < 2) return 0;
  const int v = avail.front();
  int best = max_matching(adj, avail.without(v));
  for (int u : adj[v] & avail) {
    if (best * 2 + 2 > avail.size()) break;
    best = std::max(best, 1 + max_matching(adj, avail.without(v).without(u)));
  }
  return best;
}

int max_independent(const Graph& g, VertexSet avail) {
  if (avail.empty()) return 0;
  // Vertices of degree <= 1 inside `avail` are always safe to take.
  for (int v : avail) {
    if ((g.neighbors(v) & avail).size() <= 1) return 1 + max_independent(g, avail - g.closed_neighbors(v));
  }
  int pivot = avail.front();
  for (int v : avail)
    if ((g.neighbors(v) & avail).size() > (g.neighbors(pivot) & avail).size()) pivot = v;
  return std::max(max_independent(g, avail.without(pivot)), 1 + max_independent(g, avail - g.closed_neighbors(pivot)));
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g, 0) == g.vertices();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    const VertexSet c = reach(g, left.front());
    out.push_back(c);
    left -= c;
  }
  return out;
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  for (int d = 0; !frontier.empty(); ++d) {
    for (int v : frontier) dist[v] = d;
    frontier = g.neighbors(frontier) - seen;
    seen |= frontier;
  }
  return dist;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every root; a non-tree edge uv closes a walk of length
  // d(u)+d(v)+1 containing a cycle no longer than that, and the root on a
  // shortest cycle realizes it exactly.
  std::optional<int> best;
  std::vector<int> dist(g.order());
  std::vector<int> parent(g.order());
  std::vector<int> queue(g.order());
  for (int root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      if (best && 2 * dist[u] + 1 >= *best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<int> diameter(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) return std::nullopt;
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    const auto dist = distances_from(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  VertexSet first;
  VertexSet second;
  for (VertexSet component : connected_components(g)) {
    VertexSet side = VertexSet::single(component.front());
    VertexSet other;
    VertexSet frontier = side;
    bool on_first = true;
    while (!frontier.empty()) {
      const VertexSet next = g.neighbors(frontier) - side - other;
      if (on_first) {
        other |= next;
      } else {
        side |= next;
      }
      frontier = next;
      on_first = !on_first;
    }
    for (int v : side)
      if (g.neighbors(v).intersects(side)) return std::nullopt;
    for (int v : other)
      if (g.neighbors(v).intersects(other)) return std::nullopt;
    first |= side;
    second |= other;
  }
  return std::make_pair(first, second);
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges())
    if (g.neighbors(e.u).intersects(g.neighbors(e.v))) return false;
  return true;
}

int matching_number(int n, const EdgeSet& edges) {
  std::array<VertexSet, kMaxVertices> adj{};
  VertexSet touched;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v) throw std::invalid_argument("edge out of range");
    adj[e.u] = adj[e.u].with(e.v);
    adj[e.v] = adj[e.v].with(e.u);
    touched = touched.with(e.u).with(e.v);
  }
  return max_matching(adj, touched);
}

int matching_number(const Graph& g) { return matching_number(g.order(), g.edges()); }

int independence_number(const Graph& g, VertexSet within) { return max_independent(g, within & g.vertices()); }

Graph::Subgraph delete_closed_neighborhood(const Graph& g, VertexSet a) {
  if (a.empty()) throw std::invalid_argument("closed-neighbourhood deletion needs a nonempty vertex set");
  return g.induced(g.vertices() - g.closed_neighbors(a));
}

}  // namespace wtd
