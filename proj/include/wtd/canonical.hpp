#pragma once

#include <string>
#include <vector>

#include "wtd/graph.hpp"

namespace wtd {

/// Default largest order accepted by canonical_form.
inline constexpr int kCanonicalBound = 16;

/**
 * Canonical relabelling by individualization-refinement: the ordered
 * partition is refined to an equitable one, non-singleton cells are split by
 * individualizing each vertex in turn (one vertex per twin class), and the
 * leaf with the largest adjacency code wins.
 *
 * Returns perm with perm[v] = canonical position of v.
 * Throws CapabilityError when g.order() > bound.
 */
std::vector<int> canonical_labeling(const Graph& g, int bound = kCanonicalBound);

/// graph6 string of the canonically relabelled graph. Equal iff isomorphic.
std::string canonical_form(const Graph& g, int bound = kCanonicalBound);

/// Canonically relabelled copy (labels dropped).
Graph canonical_graph(const Graph& g, int bound = kCanonicalBound);

}  // namespace wtd
