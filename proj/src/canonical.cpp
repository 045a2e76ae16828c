#include "wtd/canonical.hpp"

#include <algorithm>
#include <array>

#include "wtd/errors.hpp"
#include "wtd/graph_io.hpp"

namespace wtd {
namespace {

using Partition = std::vector<VertexSet>;
using Code = std::vector<std::uint64_t>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Partition root;
    // Initial cells by degree, ascending.
    std::array<VertexSet, kMaxVertices + 1> by_degree{};
    for (int v = 0; v < g_.order(); ++v) by_degree[g_.degree(v)] = by_degree[g_.degree(v)].with(v);
    for (VertexSet cell : by_degree)
      if (!cell.empty()) root.push_back(cell);
    search(std::move(root));
    return best_perm_;
  }

 private:
  // Split cells by neighbour counts into splitter cells until equitable.
  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const VertexSet splitter = cells[s];
        for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
          if (cells[c].size() == 1) continue;
          std::array<VertexSet, kMaxVertices + 1> by_count{};
          int distinct = 0;
          for (int v : cells[c]) {
            const int k = (g_.neighbors(v) & splitter).size();
            if (by_count[k].empty()) ++distinct;
            by_count[k] = by_count[k].with(v);
          }
          if (distinct == 1) continue;
          Partition pieces;
          for (VertexSet piece : by_count)
            if (!piece.empty()) pieces.push_back(piece);
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
        }
      }
    }
  }

  bool twins(int u, int v) const { return g_.neighbors(u).without(v) == g_.neighbors(v).without(u); }

  void search(Partition cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto at = target - cells.begin();
    const VertexSet members = *target;
    VertexSet tried;
    for (int v : members) {
      bool redundant = false;
      for (int w : tried)
        if (twins(v, w)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried = tried.with(v);
      Partition child = cells;
      child[at] = members.without(v);
      child.insert(child.begin() + at, VertexSet::single(v));
      search(std::move(child));
    }
  }

  void leaf(const Partition& cells) {
    std::vector<int> perm(g_.order());
    for (std::size_t i = 0; i < cells.size(); ++i) perm[cells[i].front()] = static_cast<int>(i);
    Code code(g_.order());
    for (int v = 0; v < g_.order(); ++v) {
      std::uint64_t row = 0;
      for (int w : g_.neighbors(v)) row |= std::uint64_t{1} << perm[w];
      code[perm[v]] = row;
    }
    if (best_perm_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_perm_ = std::move(perm);
    }
  }

  const Graph& g_;
  Code best_code_;
  std::vector<int> best_perm_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int bound) {
  if (g.order() > bound)
    throw CapabilityError("canonical form supports at most " + std::to_string(bound) + " vertices, got " +
                          std::to_string(g.order()));
  if (g.order() == 0) return {};
  return Canonizer(g).run();
}

Graph canonical_graph(const Graph& g, int bound) {
  const auto perm = canonical_labeling(g, bound);
  Graph out = g.relabeled(perm);
  out.set_labels({});
  return out;
}

std::string canonical_form(const Graph& g, int bound) { return write_graph6(canonical_graph(g, bound)); }

}  // namespace wtd
