#pragma once

#include <map>

#include "gct/colouring.hpp"

namespace gct {

// Host graph with a fixed vertex ordering v_1..v_n (order[i] = vertex in
// position i+1).
struct OrderedHost {
  Graph graph;
  std::vector<int> order;
};

// Declared facts about a generated gadget.  Claims are verified against the
// oracles in the test suite for small parameters; they are data, not proofs.
struct GadgetMeta {
  std::string name;
  std::map<std::string, long long> params;
  std::map<std::string, long long> claims;
  std::map<std::string, int> named_vertices;
  std::map<std::string, VertexSet> named_sets;
};

struct GeneratorLimits {
  long long vertex_cap = 1'000'000;
};

struct Gadget {
  Graph graph;
  GadgetMeta meta;
  std::optional<RootedForestWitness> forest;  // present when the construction carries one
};

// Closure-of-a-tree amplification of an ordered host H: the complete d-ary
// tree with one level per host position, a tree vertex at depth j joined to
// its depth-i ancestor exactly when positions i and j are adjacent in H.
// Vertices are in BFS order (root 0, children of x are d*x+1 .. d*x+d).
Gadget standard_example(const OrderedHost& host, int d, const GeneratorLimits& limits = {});

struct Amplified {
  Graph graph;
  std::vector<int> original_of;  // amplified vertex -> host vertex
  RootedForestWitness forest;    // copy tree; same depth as the host witness
  Graph host;
  RootedForestWitness host_forest;
};

// Depth-preserving amplification: walking the host forest top-down, each
// vertex below the roots is replicated d+1 times under every copy of its
// parent, and every host edge from an ancestor is duplicated into each copy.
Amplified treedepth_amplification(const Graph& host, const RootedForestWitness& forest,
                                  int d, const GeneratorLimits& limits = {});

// Descends the copy tree of an amplified graph: for each host vertex pick a
// copy whose subtree contains no neighbour of the already-chosen parent with
// the parent's colour.  Returns host vertex -> amplified vertex, or nullopt
// when every candidate subtree conflicts (possible only when the colouring's
// defect exceeds the amplification parameter).  A returned embedding always
// induces a properly coloured copy of the host.
std::optional<std::vector<int>> extract_proper_copy(const Amplified& a, const Colouring& c);

// Layered tree in which every vertex gets one child per independent set of
// the subgraph induced by its root path, the child adjacent to exactly that
// set.  Triangle-free; forces chromatic number >= k within binom(k+1,2)
// layers.  Carries its layer tree as a treedepth witness.
Gadget independent_set_tree(int k, int layer_cap, const GeneratorLimits& limits = {});

// Feedback-vertex-number-1 gadget: star with d+1 leaves, 2d+1 private leaves
// on every vertex, and an apex (last vertex) over all leaves.  Triangle-free,
// not 2-colourable with defect d.
Gadget fvn1_gadget(int d);

// Seven branch vertices V, one path of 4c^2+4c+1 edges per 4-subset S of V,
// path vertex i attached to S[i mod 4].  Girth 6, G - V a union of paths,
// not 2-colourable with clustering c.
Gadget fvn7_gadget(int c);

// m x m grid with the vertical edges at even x+y subdivided and an apex over
// the division vertices.  Girth 5 for m >= 4.
Gadget apex_grid_girth5(int m, const GeneratorLimits& limits = {});

// m x m grid with every edge subdivided, division vertices greedily labelled
// 1..23 so equal labels are at distance >= 6, one apex per label.  Girth 8.
Gadget apex23_grid_girth8(int m, const GeneratorLimits& limits = {});

}  // namespace gct
