#pragma once

#include <string>
#include <vector>

#include "wtd/graph.hpp"

namespace wtd {

/// Edges u_i v_i whose endpoints induce exactly m disjoint copies of K2.
struct MatchingSelection {
  EdgeSet edges;

  VertexSet endpoints() const;
};

enum class ReductionStatus {
  ok,            // nonempty, no isolated vertices: WTD is inherited
  has_isolated,  // the WTD inheritance claim does not apply
  empty,         // N[A] covers the whole graph
};

std::string to_string(ReductionStatus s);

struct Reduction {
  Graph graph;
  /// reduced id -> id in the input graph
  std::vector<int> origin;
  ReductionStatus status = ReductionStatus::ok;
};

/// Throws std::invalid_argument if a selected pair is not an edge of g,
/// two pairs share a vertex, or an edge of g joins two different pairs.
void validate_selection(const Graph& g, const MatchingSelection& sel);

/// G - N[A] for A = endpoints of the selection. If G is WTD and the status
/// is ok, the result is WTD and γ_t drops by exactly 2m.
Reduction reduce_by_matching(const Graph& g, const MatchingSelection& sel);

}  // namespace wtd
