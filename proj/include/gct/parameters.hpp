#pragma once

#include "gct/graph.hpp"
#include "gct/minors.hpp"

namespace gct {

// Thresholds for the exact (exponential) computations.  Every routine fails
// loudly with SizeError above its threshold instead of degrading silently.
struct ExactLimits {
  int order_dp_max = 9;    // strong colouring numbers (search over orderings)
  int subset_dp_max = 15;  // treewidth / pathwidth / treedepth
  int hadwiger_max = 12;   // clique minors
};

// A vertex ordering together with the radius it was produced for and the
// honestly recomputed bound max_v |reach_r(order, v)|.
struct OrderingWitness {
  std::vector<int> order;  // left to right
  int radius = 1;
  int bound = 0;
};

// Rooted forest given by parent pointers (-1 at roots).  Depth counts
// vertices, so a single vertex has depth 1.
struct RootedForestWitness {
  std::vector<int> parent;
  int depth() const;
  std::vector<int> depths() const;  // per vertex, root = 1
};

// Vertices w at position <= pos(v) joined to v by a path of length 0..r whose
// internal vertices all lie strictly right of v.  Always contains v.
VertexSet r_reachable_set(const Graph& g, const std::vector<int>& order, int r, int v);
// max over v of |r_reachable_set|, recomputed from scratch
int reach_bound(const Graph& g, const std::vector<int>& order, int r);

// Exact strong colouring number col_r: minimises the reach bound over all
// vertex orderings (dynamic programme over suffix sets; equivalent to the
// full search because the reach count of v depends only on the set to its
// right).  Witness order realises the optimum.
OrderingWitness strong_colouring_number_exact(const Graph& g, int r, const ExactLimits& limits = {});
// Reverse degeneracy order with an honestly recomputed bound; any size.
OrderingWitness strong_colouring_number_greedy(const Graph& g, int r);

// (degeneracy, min-degree elimination order)
std::pair<int, std::vector<int>> degeneracy(const Graph& g);

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;  // indices into bags
  int width() const;
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;  // in path order
  int width() const;
};

std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, const ExactLimits& limits = {});
std::pair<int, PathDecomposition> pathwidth_exact(const Graph& g, const ExactLimits& limits = {});
std::pair<int, RootedForestWitness> treedepth_exact(const Graph& g, const ExactLimits& limits = {});

bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td);
bool verify_path_decomposition(const Graph& g, const PathDecomposition& pd);
// parent array is a forest and every edge of g joins an ancestor-descendant pair
bool verify_treedepth_witness(const Graph& g, const RootedForestWitness& w);

// Minimum vertex set meeting all cycles (branch and bound over short cycles).
std::pair<int, VertexSet> feedback_vertex_number(const Graph& g);
bool is_feedback_vertex_set(const Graph& g, const VertexSet& s);

// Length of a longest cycle; 2 on forests by convention.
int circumference(const Graph& g);

// Largest t with a K_t minor, plus a witness model.
std::pair<int, MinorModel> hadwiger_number(const Graph& g, const ExactLimits& limits = {});

}  // namespace gct
