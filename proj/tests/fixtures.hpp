#pragma once

#include <map>
#include <vector>

#include "wtd/graph.hpp"
#include "wtd/search.hpp"
#include "wtd/wtd2.hpp"

namespace fixtures {

using wtd::Graph;

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// C5 x-y-z-w-t plus the chord yt; x y z t w = 0..4.
inline Graph house() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 4);
  g.set_labels({"x", "y", "z", "t", "w"});
  return g;
}

inline const char* two_k2_recipe_text() {
  return "H: x y z t\n"
         "x-y z-t\n"
         "MVC:\n"
         "x,z -> vxz\n"
         "x,t -> vxt\n"
         "y,z -> vyz\n"
         "y,t -> vyt\n"
         "STEP3:\n"
         "x-z y-t\n"
         "HPRIME: u1 u2 u3\n"
         "u1-u2 u2-u3\n"
         "STEP4:\n"
         "u1-x u1-t u3-x u3-z u3-t u2-z u2-y\n";
}

/// Connected isomorphism classes with lo <= n <= hi, computed once per range.
inline const std::vector<Graph>& connected_classes(int lo, int hi) {
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  auto it = cache.find({lo, hi});
  if (it != cache.end()) return it->second;
  wtd::SearchFilter f;
  f.n_min = lo;
  f.n_max = hi;
  return cache.emplace(std::pair{lo, hi}, wtd::enumerate_graphs(f)).first->second;
}

}  // namespace fixtures
