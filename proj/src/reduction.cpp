#include "wtd/reduction.hpp"

#include <stdexcept>

#include "wtd/domination.hpp"
#include "wtd/structure.hpp"

namespace wtd {

VertexSet MatchingSelection::endpoints() const {
  VertexSet out;
  for (const Edge& e : edges) out = out.with(e.u).with(e.v);
  return out;
}

std::string to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::ok:
      return "ok";
    case ReductionStatus::has_isolated:
      return "has_isolated";
    case ReductionStatus::empty:
      return "empty";
  }
  return "unknown";
}

void validate_selection(const Graph& g, const MatchingSelection& sel) {
  if (sel.edges.empty()) throw std::invalid_argument("matching selection is empty");
  VertexSet seen;
  for (const Edge& e : sel.edges) {
    const std::string name = g.name(e.u) + "-" + g.name(e.v);
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
      throw std::invalid_argument("selected pair " + name + " is not an edge of the graph");
    if (seen.contains(e.u) || seen.contains(e.v)) throw std::invalid_argument("selected edges share a vertex at " + name);
    seen = seen.with(e.u).with(e.v);
  }
  for (const Edge& e : sel.edges) {
    const VertexSet pair{e.u, e.v};
    for (int a : pair)
      for (int b : (g.neighbors(a) & seen) - pair)
        throw std::invalid_argument("selected edges are not an induced matching: cross edge " + g.name(a) + "-" +
                                    g.name(b));
  }
}

Reduction reduce_by_matching(const Graph& g, const MatchingSelection& sel) {
  require_total_domination(g);
  validate_selection(g, sel);
  auto sub = delete_closed_neighborhood(g, sel.endpoints());
  Reduction out{std::move(sub.graph), std::move(sub.origin), ReductionStatus::ok};
  if (out.graph.order() == 0) {
    out.status = ReductionStatus::empty;
  } else if (out.graph.has_isolated_vertex()) {
    out.status = ReductionStatus::has_isolated;
  }
  return out;
}

}  // namespace wtd
