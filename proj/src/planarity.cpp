#include "wtd/planarity.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace wtd {
namespace {

// Edge sets of the biconnected components (Hopcroft-Tarjan with an edge stack).
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g) : g_(g), disc_(g.order(), -1), low_(g.order(), 0) {}

  std::vector<EdgeSet> run() {
    for (int v = 0; v < g_.order(); ++v)
      if (disc_[v] < 0) visit(v, -1);
    return std::move(blocks_);
  }

 private:
  void visit(int v, int parent) {
    disc_[v] = low_[v] = timer_++;
    for (int w : g_.neighbors(v)) {
      if (w == parent) continue;
      if (disc_[w] < 0) {
        stack_.emplace_back(v, w);
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          EdgeSet block;
          const Edge cut(v, w);
          while (true) {
            const Edge e = stack_.back();
            stack_.pop_back();
            block.push_back(e);
            if (e == cut) break;
          }
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[w] < disc_[v]) {
        stack_.emplace_back(v, w);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int timer_ = 0;
  EdgeSet stack_;
  std::vector<EdgeSet> blocks_;
};

struct Face {
  std::vector<int> walk;  // cyclic boundary
  VertexSet members;
};

Face make_face(std::vector<int> walk) {
  Face f{std::move(walk), {}};
  for (int v : f.walk) f.members = f.members.with(v);
  return f;
}

// A piece of the block not yet embedded: either a single chord between two
// embedded vertices or a component of the unembedded vertices together with
// its attachments.
struct Fragment {
  VertexSet contacts;
  VertexSet inner;  // empty for a chord
  Edge chord;
};

// Path a -> (inner vertices) -> b through the fragment, a != b both contacts.
std::vector<int> fragment_path(const Graph& b, const Fragment& frag) {
  if (frag.inner.empty()) return {frag.chord.u, frag.chord.v};
  const int start = frag.contacts.front();
  const VertexSet targets = frag.contacts.without(start);
  // BFS inside the fragment from the neighbours of `start`.
  std::array<int, kMaxVertices> parent{};
  VertexSet seen = b.neighbors(start) & frag.inner;
  for (int v : seen) parent[v] = start;
  std::vector<int> queue = seen.to_vector();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const VertexSet hit = b.neighbors(v) & targets;
    if (!hit.empty()) {
      std::vector<int> path{hit.front()};
      for (int x = v; x != start; x = parent[x]) path.push_back(x);
      path.push_back(start);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : b.neighbors(v) & frag.inner) {
      if (seen.contains(w)) continue;
      seen = seen.with(w);
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return {};  // unreachable for 2-connected blocks
}

bool embed_block(const Graph& b) {
  const int n = b.order();
  const int m = b.size();
  if (n <= 4 || m <= n) return true;  // small blocks and cycles
  if (m > 3 * n - 6) return false;

  // Initial cycle through edge 0-w: BFS path w ~> 0 avoiding that edge.
  const int w0 = b.neighbors(0).front();
  std::vector<int> parent(n, -1);
  VertexSet seen = VertexSet::single(w0);
  std::vector<int> queue{w0};
  for (std::size_t head = 0; head < queue.size() && !seen.contains(0); ++head) {
    const int v = queue[head];
    for (int w : b.neighbors(v)) {
      if (seen.contains(w) || (v == w0 && w == 0)) continue;
      seen = seen.with(w);
      parent[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<int> cycle;
  for (int v = 0; v != -1; v = parent[v]) cycle.push_back(v);

  std::array<VertexSet, kMaxVertices> placed_adj{};
  VertexSet placed;
  int placed_edges = 0;
  auto place_path = [&](const std::vector<int>& path, bool closed) {
    for (std::size_t i = 0; i + 1 < path.size() + (closed ? 1 : 0); ++i) {
      const int u = path[i];
      const int v = path[(i + 1) % path.size()];
      placed_adj[u] = placed_adj[u].with(v);
      placed_adj[v] = placed_adj[v].with(u);
      ++placed_edges;
    }
    for (int v : path) placed = placed.with(v);
  };
  place_path(cycle, true);

  std::vector<Face> faces;
  faces.push_back(make_face(cycle));
  std::reverse(cycle.begin(), cycle.end());
  faces.push_back(make_face(cycle));

  while (placed_edges < m) {
    std::vector<Fragment> fragments;
    for (int u : placed)
      for (int v : (b.neighbors(u) & placed) - placed_adj[u] - VertexSet::range(u + 1))
        fragments.push_back({VertexSet{u, v}, {}, Edge(u, v)});
    VertexSet rest = b.vertices() - placed;
    while (!rest.empty()) {
      VertexSet comp = VertexSet::single(rest.front());
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        frontier = (b.neighbors(frontier) & rest) - comp;
        comp |= frontier;
      }
      rest -= comp;
      fragments.push_back({b.neighbors(comp) & placed, comp, {}});
    }

    const Fragment* chosen = nullptr;
    std::size_t chosen_face = 0;
    for (const Fragment& frag : fragments) {
      std::size_t admissible = 0;
      std::size_t first = 0;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        if (frag.contacts.subset_of(faces[f].members)) {
          if (admissible++ == 0) first = f;
        }
      }
      if (admissible == 0) return false;
      if (admissible == 1 || chosen == nullptr) {
        chosen = &frag;
        chosen_face = first;
        if (admissible == 1) break;
      }
    }

    const std::vector<int> path = fragment_path(b, *chosen);
    const Face face = faces[chosen_face];
    const int a = path.front();
    const int z = path.back();
    const auto len = face.walk.size();
    const auto ia = static_cast<std::size_t>(std::find(face.walk.begin(), face.walk.end(), a) - face.walk.begin());
    const auto iz = static_cast<std::size_t>(std::find(face.walk.begin(), face.walk.end(), z) - face.walk.begin());

    // One side: boundary a..z then the path back; other side: z..a then the path forward.
    std::vector<int> one;
    for (std::size_t i = ia;; i = (i + 1) % len) {
      one.push_back(face.walk[i]);
      if (i == iz) break;
    }
    for (std::size_t i = path.size() - 2; i >= 1; --i) one.push_back(path[i]);
    std::vector<int> two;
    for (std::size_t i = iz;; i = (i + 1) % len) {
      two.push_back(face.walk[i]);
      if (i == ia) break;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) two.push_back(path[i]);

    faces[chosen_face] = make_face(std::move(one));
    faces.push_back(make_face(std::move(two)));
    place_path(path, false);
  }
  return true;
}

}  // namespace

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (g.size() > 3 * n - 6) return false;
  for (const EdgeSet& block : BlockFinder(g).run()) {
    VertexSet members;
    for (const Edge& e : block) members = members.with(e.u).with(e.v);
    auto sub = g.induced(members);
    // A block is the induced subgraph on its vertices except for edges that
    // belong to other blocks, which cannot join two vertices of one block.
    if (!embed_block(sub.graph)) return false;
  }
  return true;
}

}  // namespace wtd
