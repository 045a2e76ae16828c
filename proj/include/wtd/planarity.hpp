#pragma once

#include "wtd/graph.hpp"

namespace wtd {

/// Exact planarity test: biconnected decomposition followed by the
/// Demoucron-Malgrange-Pertuiset path-embedding procedure on each block.
bool is_planar(const Graph& g);

}  // namespace wtd
