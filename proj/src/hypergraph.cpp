#include "wtd/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "wtd/errors.hpp"

namespace wtd {
namespace {

void require_usable(const SpernerFamily& h) {
  if (h.empty()) throw std::invalid_argument("transversals of the empty family are not supported");
}

// Every u in s still has an edge that s meets only in u.
bool every_member_critical(const std::vector<VertexSet>& edges, VertexSet s) {
  for (int u : s) {
    const bool critical = std::any_of(edges.begin(), edges.end(), [&](VertexSet e) { return (e & s) == VertexSet::single(u); });
    if (!critical) return false;
  }
  return true;
}

class Mmcs {
 public:
  Mmcs(const std::vector<VertexSet>& edges, const std::function<bool(VertexSet)>& visit)
      : edges_(edges), visit_(visit) {}

  void run(VertexSet ground) {
    std::vector<int> uncovered(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) uncovered[i] = static_cast<int>(i);
    recurse(VertexSet{}, ground, uncovered);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool recurse(VertexSet s, VertexSet cand, const std::vector<int>& uncovered) {
    if (uncovered.empty()) return visit_(s);
    int pick = uncovered.front();
    for (int i : uncovered)
      if ((edges_[i] & cand).size() < (edges_[pick] & cand).size()) pick = i;
    const VertexSet branch = edges_[pick] & cand;
    cand -= branch;
    std::vector<int> rest;
    for (int v : branch) {
      const VertexSet next = s.with(v);
      // v is critical for `pick`; the old members must stay critical.
      bool ok = true;
      for (int u : s) {
        const bool critical =
            std::any_of(edges_.begin(), edges_.end(), [&](VertexSet e) { return (e & next) == VertexSet::single(u); });
        if (!critical) {
          ok = false;
          break;
        }
      }
      if (ok) {
        rest.clear();
        for (int i : uncovered)
          if (!edges_[i].contains(v)) rest.push_back(i);
        if (!recurse(next, cand, rest)) return false;
      }
      cand = cand.with(v);
    }
    return true;
  }

  const std::vector<VertexSet>& edges_;
  const std::function<bool(VertexSet)>& visit_;
};

class BoundedBranching {
 public:
  BoundedBranching(const std::vector<VertexSet>& edges, int k) : edges_(edges), k_(k) {}

  std::vector<VertexSet> run() {
    recurse(VertexSet{});
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  void recurse(VertexSet s) {
    // A member without a private edge never regains one in a superset.
    if (!every_member_critical(edges_, s)) return;
    const VertexSet* open = nullptr;
    for (const VertexSet& e : edges_)
      if (!e.intersects(s) && (open == nullptr || e.size() < open->size())) open = &e;
    if (open == nullptr) {
      found_.push_back(s);
      return;
    }
    if (s.size() == k_) return;
    for (int v : *open) recurse(s.with(v));
  }

  const std::vector<VertexSet>& edges_;
  int k_;
  std::vector<VertexSet> found_;
};

}  // namespace

bool SpernerFamily::contains(VertexSet s) const { return std::binary_search(edges_.begin(), edges_.end(), s); }

VertexSet SpernerFamily::support() const {
  VertexSet out;
  for (VertexSet e : edges_) out |= e;
  return out;
}

bool SpernerFamily::is_transversal(VertexSet s) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](VertexSet e) { return e.intersects(s); });
}

SpernerFamily minimize_family(int ground, std::span<const VertexSet> raw) {
  if (ground < 0 || ground > kMaxVertices) throw std::invalid_argument("ground set size out of range");
  if (raw.empty()) throw std::invalid_argument("a Sperner family needs at least one edge");
  const VertexSet universe = VertexSet::range(ground);
  for (VertexSet e : raw) {
    if (e.empty()) throw std::invalid_argument("empty hyperedge admits no transversal");
    if (!e.subset_of(universe)) throw std::invalid_argument("hyperedge " + to_string(e) + " outside ground set");
  }
  std::vector<VertexSet> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SpernerFamily out;
  out.ground_ = ground;
  for (VertexSet e : sorted) {
    const bool dominated = std::any_of(sorted.begin(), sorted.end(), [&](VertexSet f) { return f != e && f.subset_of(e); });
    if (!dominated) out.edges_.push_back(e);
  }
  return out;
}

SpernerFamily sperner_family(int ground, std::span<const VertexSet> members) {
  SpernerFamily out = minimize_family(ground, members);
  if (out.size() != members.size()) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (i != j && members[i].subset_of(members[j]))
          throw std::invalid_argument("family is not Sperner: " + to_string(members[i]) + " is contained in " +
                                      to_string(members[j]));
  }
  return out;
}

SpernerFamily make_family_unchecked(int ground, std::vector<VertexSet> sorted_antichain) {
  SpernerFamily out;
  out.ground_ = ground;
  out.edges_ = std::move(sorted_antichain);
  return out;
}

SpernerFamily neighborhood_hypergraph(const Graph& g) {
  if (g.order() == 0 || g.has_isolated_vertex()) throw UndefinedDomination();
  std::vector<VertexSet> raw;
  raw.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) raw.push_back(g.neighbors(v));
  return minimize_family(g.order(), raw);
}

void for_each_minimal_transversal(const SpernerFamily& h, const std::function<bool(VertexSet)>& visit) {
  require_usable(h);
  Mmcs(h.edges(), visit).run(VertexSet::range(h.ground()));
}

SpernerFamily minimal_transversals(const SpernerFamily& h) {
  std::vector<VertexSet> out;
  for_each_minimal_transversal(h, [&](VertexSet t) {
    out.push_back(t);
    return true;
  });
  std::sort(out.begin(), out.end());
  return make_family_unchecked(h.ground(), std::move(out));
}

SpernerFamily bounded_minimal_transversals(const SpernerFamily& h, int k) {
  require_usable(h);
  if (k < 1) throw std::invalid_argument("size bound must be at least 1");
  return make_family_unchecked(h.ground(), BoundedBranching(h.edges(), k).run());
}

VertexSet shrink_to_minimal_transversal(const SpernerFamily& h, VertexSet s) {
  if (!h.is_transversal(s)) throw std::invalid_argument(to_string(s) + " is not a transversal");
  for (int v : s)
    if (h.is_transversal(s.without(v))) s = s.without(v);
  return s;
}

std::string to_string(SizeDecision::Reason r) {
  switch (r) {
    case SizeDecision::Reason::all_size_k:
      return "all minimal transversals have size k";
    case SizeDecision::Reason::smaller:
      return "minimal transversal smaller than k";
    case SizeDecision::Reason::minimum_exceeds_k:
      return "minimum transversal exceeds k";
    case SizeDecision::Reason::larger:
      return "minimal transversal larger than k";
  }
  return "unknown";
}

SizeDecision all_minimal_transversals_have_size_k(const SpernerFamily& h, int k) {
  require_usable(h);
  if (k < 1) throw std::invalid_argument("size bound must be at least 1");

  const SpernerFamily bounded = bounded_minimal_transversals(h, k);
  for (VertexSet t : bounded.edges())
    if (t.size() < k) return {false, SizeDecision::Reason::smaller, t};

  const VertexSet universe = VertexSet::range(h.ground());
  if (bounded.empty()) return {false, SizeDecision::Reason::minimum_exceeds_k, shrink_to_minimal_transversal(h, universe)};

  const SpernerFamily dual = minimal_transversals(bounded);
  if (dual == h) return {true, SizeDecision::Reason::all_size_k, bounded.edges().front()};

  for (VertexSet f : dual.edges()) {
    const bool holds_edge = std::any_of(h.edges().begin(), h.edges().end(), [&](VertexSet e) { return e.subset_of(f); });
    if (holds_edge) continue;
    const VertexSet witness = shrink_to_minimal_transversal(h, universe - f);
    return {false, SizeDecision::Reason::larger, witness};
  }
  throw std::logic_error("dualization mismatch without a witness");
}

}  // namespace wtd
