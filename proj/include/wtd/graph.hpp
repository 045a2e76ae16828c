#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "wtd/vertex_set.hpp"

namespace wtd {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::vector<Edge>;

/**
 * Finite simple undirected graph on vertices 0..n-1 with bitmask adjacency.
 *
 * Labels are cosmetic: every algorithm works on ids, labels only travel
 * through to reports so that users see the names they wrote.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Validating constructor; throws std::invalid_argument on self-loops,
  /// out-of-range endpoints, duplicate edges or bad labels.
  static Graph from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int size() const;

  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v].with(v); }
  /// N(S): union of open neighbourhoods.
  VertexSet neighbors(VertexSet s) const;
  /// N[S] = S plus its neighbours.
  VertexSet closed_neighbors(VertexSet s) const { return neighbors(s) | s; }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int min_degree() const;
  int max_degree() const;
  bool has_isolated_vertex() const;

  /// All edges in ascending (u, v) order.
  EdgeSet edges() const;

  /// Adds uv; throws std::invalid_argument if it is a loop, out of range or already present.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label if present, otherwise the decimal id.
  std::string name(int v) const;
  void set_labels(std::vector<std::string> labels);

  /// Graph induced by `keep`, renumbered in ascending id order; `origin[i]`
  /// is the id in this graph of new vertex i.
  struct Subgraph;
  Subgraph induced(VertexSet keep) const;

  /// Graph with vertex v renamed to perm[v]; labels follow their vertices.
  Graph relabeled(std::span<const int> perm) const;

  /// Structural equality (labels ignored).
  bool same_structure(const Graph& other) const;
  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
  std::vector<std::string> labels_;
};

struct Graph::Subgraph {
  Graph graph;
  std::vector<int> origin;
};

}  // namespace wtd
