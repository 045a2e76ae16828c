#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wtd/graph.hpp"

namespace wtd {

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

/// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Largest distance between two vertices, nullopt when disconnected.
/// The empty graph has no diameter; a single vertex has diameter 0.
std::optional<int> diameter(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, int source);

/// A proper 2-colouring (first part holds the smallest vertex of every
/// component), or nullopt if g has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

bool is_triangle_free(const Graph& g);

/// ν(G) restricted to the given edges (which need not be induced).
int matching_number(int n, const EdgeSet& edges);
int matching_number(const Graph& g);

/// α of the subgraph induced by `within`; exact branch and bound.
int independence_number(const Graph& g, VertexSet within);

/// G - N[a]: the subgraph induced by the vertices outside the closed
/// neighbourhood of `a`, with `origin` mapping back to ids of g.
Graph::Subgraph delete_closed_neighborhood(const Graph& g, VertexSet a);

}  // namespace wtd
