#include "wtd/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wtd {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  if (!labels.empty()) g.set_labels(std::move(labels));
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (adj_[v].empty()) return true;
  return false;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v))
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u] = adj_[u].with(v);
  adj_[v] = adj_[v].with(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] = adj_[u].without(v);
  adj_[v] = adj_[v].without(u);
}

std::string Graph::name(int v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.empty()) {
    labels_.clear();
    return;
  }
  if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("label count does not match vertex count");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("empty vertex label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate vertex label '" + l + "'");
  }
  labels_ = std::move(labels);
}

Graph::Subgraph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  Subgraph out{Graph(keep.size()), keep.to_vector()};
  std::array<int, kMaxVertices> index{};
  for (std::size_t i = 0; i < out.origin.size(); ++i) index[out.origin[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < out.origin.size(); ++i) {
    VertexSet mapped;
    for (int w : adj_[out.origin[i]] & keep) mapped = mapped.with(index[w]);
    out.graph.adj_[i] = mapped;
  }
  if (has_labels()) {
    std::vector<std::string> labels;
    for (int v : out.origin) labels.push_back(labels_[v]);
    out.graph.labels_ = std::move(labels);
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph out(n_);
  for (int v = 0; v < n_; ++v) {
    VertexSet mapped;
    for (int w : adj_[v]) mapped = mapped.with(perm[w]);
    out.adj_[perm[v]] = mapped;
  }
  if (has_labels()) {
    out.labels_.resize(n_);
    for (int v = 0; v < n_; ++v) out.labels_[perm[v]] = labels_[v];
  }
  return out;
}

bool Graph::same_structure(const Graph& other) const {
  if (n_ != other.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

}  // namespace wtd
