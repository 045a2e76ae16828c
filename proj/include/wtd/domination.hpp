#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtd/graph.hpp"
#include "wtd/hypergraph.hpp"

namespace wtd {

/// Every operation below that talks about total domination throws
/// UndefinedDomination when g has an isolated vertex (or no vertices).
void require_total_domination(const Graph& g);

bool is_tds(const Graph& g, VertexSet s);

/// TDS-ness is monotone, so checking single-vertex removals suffices.
bool is_minimal_tds(const Graph& g, VertexSet s);

/// All minimal total dominating sets, i.e. Tr(H_G), ascending by mask.
SpernerFamily mtds(const Graph& g);

struct TotalDominationReport {
  int gamma_t = 0;
  int upper_gamma_t = 0;
  bool is_wtd = false;
  /// Smallest mask among the minimum / maximum minimal TDSs.
  VertexSet witness_min;
  VertexSet witness_max;
  std::size_t mtds_count = 0;
};

TotalDominationReport total_domination_report(const Graph& g);
TotalDominationReport total_domination_report(const SpernerFamily& minimal_tds);

struct WtdRecognition {
  bool accepted = false;
  SizeDecision::Reason reason = SizeDecision::Reason::all_size_k;
  /// A minimal TDS of size k on success, a minimal TDS of another size otherwise.
  VertexSet certificate;
};

/// WTD(k) test through the size-k transversal decision on H_G. k >= 2.
WtdRecognition recognize_wtd_k(const Graph& g, int k);

/// Whether some edge uv has N(u) ∪ N(v) = V, i.e. γ_t = 2.
bool has_dominating_edge(const Graph& g);

struct DominatingEdgeSubgraph {
  /// Endpoints of dominating edges.
  VertexSet vertices;
  /// Edges uv of g with {u, v} a TDS. Not an induced subgraph in general.
  EdgeSet edges;
  /// Set when γ_t(g) != 2, in which case vertices and edges are empty.
  bool empty = true;
};

DominatingEdgeSubgraph dominating_edge_subgraph(const Graph& g);

/// ρ(G). Uses diameter when γ_t = 2, the general search otherwise.
int packing_number(const Graph& g);
/// ρ(G) as α of the "distance at most 2" graph; exponential, exact.
int packing_number_general(const Graph& g);

/// Minimal vertex covers of the edge family; throws on an empty edge set.
SpernerFamily minimal_vertex_covers(int n, const EdgeSet& edges);
SpernerFamily minimal_vertex_covers(const Graph& g);

enum class CorePolicy { complete, minimal_valid, explicit_edges };

struct RealizeOptions {
  CorePolicy policy = CorePolicy::complete;
  /// Core edges over ground ids, used with CorePolicy::explicit_edges.
  EdgeSet core_edges;
  /// Disjoint graph wired to the core so every member family stays exact.
  std::optional<Graph> extension;
  /// Names of the ground elements; ids are used when empty.
  std::vector<std::string> ground_labels;
};

struct Realization {
  Graph graph;
  /// ground id -> vertex of `graph`, -1 for ground elements in no member.
  std::vector<int> ground_to_vertex;

  /// Re-expresses a vertex set of `graph` in ground ids; nullopt if it uses non-core vertices.
  std::optional<VertexSet> to_ground(VertexSet s) const;
};

/**
 * Builds a graph whose minimal total dominating sets are exactly the members
 * of `family`. Core vertices are the union A of the members, wired by the
 * policy so that each is adjacent to some vertex of every member; each
 * minimal transversal T of the family gets a fresh vertex v_T with
 * N(v_T) = T. Extension vertices are wired to the first minimal transversal.
 *
 * Throws std::invalid_argument if a member is a singleton (no vertex can be
 * totally dominated by it) or explicit core edges miss the adjacency rule.
 */
Realization realize_mtds(const SpernerFamily& family, const RealizeOptions& options = {});

}  // namespace wtd
