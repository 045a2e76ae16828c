#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wtd/graph.hpp"

namespace wtd {

/**
 * An antichain of nonempty subsets of {0, ..., ground-1}, kept sorted by
 * mask value. Only the transversal enumerators produce the empty family
 * (e.g. when no transversal fits a size bound); user-built families must
 * have at least one edge.
 */
class SpernerFamily {
 public:
  SpernerFamily() = default;

  int ground() const { return ground_; }
  const std::vector<VertexSet>& edges() const& { return edges_; }
  std::vector<VertexSet> edges() && { return std::move(edges_); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(VertexSet s) const;
  /// Union of all edges.
  VertexSet support() const;
  /// True iff s meets every edge.
  bool is_transversal(VertexSet s) const;

  bool operator==(const SpernerFamily&) const = default;

 private:
  friend SpernerFamily minimize_family(int ground, std::span<const VertexSet> raw);
  friend SpernerFamily make_family_unchecked(int ground, std::vector<VertexSet> sorted_antichain);

  int ground_ = 0;
  std::vector<VertexSet> edges_;
};

/// Inclusion-minimal members of `raw`, deduplicated, ascending by mask.
/// Throws std::invalid_argument on an empty raw list, an empty member or a
/// member outside the ground set.
SpernerFamily minimize_family(int ground, std::span<const VertexSet> raw);

/// Validating constructor for user-supplied families: unlike
/// minimize_family it rejects duplicates and nested members instead of
/// dropping them.
SpernerFamily sperner_family(int ground, std::span<const VertexSet> members);

/// For enumerator outputs that are antichains by construction.
SpernerFamily make_family_unchecked(int ground, std::vector<VertexSet> sorted_antichain);

/// Minimized open neighbourhoods of g; throws UndefinedDomination on an isolated vertex.
SpernerFamily neighborhood_hypergraph(const Graph& g);

/// Visits every minimal transversal once (order unspecified) until the
/// visitor returns false. Backtracking with candidate and criticality
/// bookkeeping in the style of MMCS.
void for_each_minimal_transversal(const SpernerFamily& h, const std::function<bool(VertexSet)>& visit);

/// Tr(h), ascending by mask.
SpernerFamily minimal_transversals(const SpernerFamily& h);

/// Minimal transversals of size <= k via depth-k branching on an edge
/// disjoint from the partial set. Cost O(r^k) nodes, r = largest edge size.
SpernerFamily bounded_minimal_transversals(const SpernerFamily& h, int k);

/// Greedily shrinks a transversal to a minimal one (removal in ascending id order).
VertexSet shrink_to_minimal_transversal(const SpernerFamily& h, VertexSet s);

struct SizeDecision {
  enum class Reason {
    all_size_k,         // witness: a minimal transversal of size k
    smaller,            // witness: a minimal transversal of size < k
    minimum_exceeds_k,  // witness: a minimal transversal (size > k)
    larger,             // witness: a minimal transversal of size > k
  };

  bool holds = false;
  Reason reason = Reason::all_size_k;
  VertexSet witness;
};

std::string to_string(SizeDecision::Reason r);

/**
 * Decides whether every minimal transversal of h has exactly k elements.
 *
 * First the size-bounded enumeration collects every minimal transversal of
 * size <= k; any one smaller than k, or none at all, settles the answer.
 * Otherwise the bounded list is complete iff its own transversal family is h
 * again. When it is not, some minimal transversal f of the bounded list
 * contains no edge of h, so the complement of f is a transversal of h that
 * contains no bounded member; shrinking it yields a witness larger than k.
 */
SizeDecision all_minimal_transversals_have_size_k(const SpernerFamily& h, int k);

}  // namespace wtd
