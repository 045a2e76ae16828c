#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtd/graph.hpp"

namespace wtd {

/// Largest number of minimal vertex covers of H a recipe may require.
inline constexpr std::size_t kDefaultMvcBudget = 4096;

/**
 * Data of the four-step W2 construction, laid out in the id space of the
 * graph it produces:
 *
 *   [0, |V(H)|)                      vertices of H
 *   [|V(H)|, |V(H)| + #covers)       one fresh vertex per minimal vertex cover
 *   [..., order())                   vertices of H' (local id + h_prime_offset())
 */
struct W2Recipe {
  struct CoverVertex {
    VertexSet cover;  // over H ids
    int vertex = 0;   // final id
  };

  Graph h;
  std::vector<CoverVertex> mvc_vertices;
  EdgeSet step3_edges;  // among H vertices
  std::optional<Graph> h_prime;
  EdgeSet step4_edges;  // H' vertex (final id) to H vertex
  /// Final-graph labels; empty means ids.
  std::vector<std::string> labels;

  int h_order() const { return h.order(); }
  int h_prime_offset() const { return h.order() + static_cast<int>(mvc_vertices.size()); }
  int order() const { return h_prime_offset() + (h_prime ? h_prime->order() : 0); }
};

/// A recipe that breaks one of the construction steps. For coverage
/// failures in steps 3 and 4, `witness` holds (w, u, v): w is adjacent to
/// neither end of the H edge uv.
class W2RecipeError : public std::invalid_argument {
 public:
  W2RecipeError(int step, const std::string& what, std::optional<std::array<int, 3>> witness = std::nullopt)
      : std::invalid_argument("step " + std::to_string(step) + ": " + what), step_(step), witness_(witness) {}

  int step() const noexcept { return step_; }
  const std::optional<std::array<int, 3>>& witness() const noexcept { return witness_; }

 private:
  int step_;
  std::optional<std::array<int, 3>> witness_;
};

/// Validates every step and assembles the graph. The result is WTD(2) with
/// packing number 2 and its dominating edges are exactly the edges of H.
Graph construct_w2(const W2Recipe& recipe, std::size_t mvc_budget = kDefaultMvcBudget);

struct W2Membership {
  bool member = false;
  std::string reason;
  /// Decomposition of the input, present when member is true.
  std::optional<W2Recipe> recipe;
  /// recipe id -> input vertex; construct_w2(*recipe) relabelled by this
  /// map reproduces the input exactly.
  std::vector<int> recipe_to_input;
};

/**
 * Membership in W2, i.e. WTD(2) with packing number 2. The certificate
 * follows the extremal argument: H is the dominating-edge graph, the packing
 * pair {x, y} minimizing |N[x]| + |N[y]| (lexicographic tie-break) serves
 * as the cover vertices of the two sides, every other minimal vertex cover
 * is the neighbourhood of a vertex outside H, and whatever remains is H'.
 */
W2Membership w2_membership(const Graph& g);

/// Counts elementary steps (vertex and adjacency visits).
struct OpCounter {
  std::uint64_t steps = 0;
};

/// Linear-time recognition of triangle-free WTD(2) graphs: connected and
/// bipartite, and either complete bipartite or with a ∈ X \ X_u, b ∈ Y \ Y_u
/// such that N(a) = Y_u ≠ ∅ and N(b) = X_u ≠ ∅.
bool recognize_triangle_free_wtd2(const Graph& g, OpCounter* ops = nullptr);

}  // namespace wtd
