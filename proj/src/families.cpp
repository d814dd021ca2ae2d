#include "gct/families.hpp"

#include <algorithm>
#include <set>

namespace gct {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw HypothesisError("a cycle needs at least three vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph grid_graph(int m) {
  if (m < 1) throw HypothesisError("grid side must be >= 1");
  Graph g(m * m);
  auto id = [m](int x, int y) { return x * m + y; };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x + 1 < m) g.add_edge(id(x, y), id(x + 1, y));
      if (y + 1 < m) g.add_edge(id(x, y), id(x, y + 1));
    }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);              // outer cycle
    g.add_edge(5 + v, 5 + (v + 2) % 5);      // inner pentagram
    g.add_edge(v, 5 + v);                    // spokes
  }
  return g;
}

Graph heawood_graph() {
  Graph g(14);
  for (int v = 0; v < 14; ++v) g.add_edge(v, (v + 1) % 14);
  for (int v = 0; v < 14; v += 2) g.add_edge(v, (v + 5) % 14);
  return g;
}

std::uint64_t SplitMix::next() {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int SplitMix::below(int n) {
  if (n <= 0) throw HypothesisError("SplitMix::below needs a positive range");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t threshold = (0 - un) % un;  // 2^64 mod n; reject below it
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return static_cast<int>(x % un);
  }
}

Graph random_graph(int n, int edge_percent, SplitMix& rng) {
  if (edge_percent < 0 || edge_percent > 100)
    throw HypothesisError("edge percentage must be in [0, 100]");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < edge_percent) g.add_edge(u, v);
  return g;
}

Graph random_cubic(int n, SplitMix& rng) {
  if (n < 4 || n % 2 != 0)
    throw HypothesisError("cubic graphs need an even number of vertices, >= 4");
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (int i = 3 * n - 1; i > 0; --i)
      std::swap(points[i], points[rng.below(i + 1)]);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (int j = 0; simple && j < 3 * n; j += 2) {
      int u = points[j], v = points[j + 1];
      if (u == v) simple = false;
      else if (!seen.insert({std::min(u, v), std::max(u, v)}).second) simple = false;
    }
    if (!simple) continue;
    Graph g(n);
    for (auto [u, v] : seen) g.add_edge(u, v);
    return g;
  }
  throw Error("pairing model failed to produce a simple cubic graph");
}

Graph random_tree(int n, SplitMix& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v);
  return g;
}

Graph random_edge_subgraph(const Graph& g, int keep_percent, SplitMix& rng) {
  if (keep_percent < 0 || keep_percent > 100)
    throw HypothesisError("edge percentage must be in [0, 100]");
  Graph sub(g.vertex_count());
  for (auto [u, v] : g.edges())
    if (rng.below(100) < keep_percent) sub.add_edge(u, v);
  return sub;
}

}  // namespace gct
