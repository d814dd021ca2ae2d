#pragma once

#include "gct/graph.hpp"

namespace gct {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // centre 0
Graph grid_graph(int m);       // m x m, vertex (x,y) = x*m + y
Graph petersen_graph();
Graph heawood_graph();

// Deterministic, platform-independent generator for test corpora
// (splitmix64; std::uniform_int_distribution is not portable).
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  int below(int n);  // in [0, n)
};

Graph random_graph(int n, int edge_percent, SplitMix& rng);
// Simple cubic graph via the pairing model with rejection; n even, >= 4.
Graph random_cubic(int n, SplitMix& rng);
Graph random_tree(int n, SplitMix& rng);
Graph random_edge_subgraph(const Graph& g, int keep_percent, SplitMix& rng);

}  // namespace gct
