#pragma once

#include "gct/graph.hpp"

namespace gct {

// Branch sets of a minor model.  Sets must be nonempty, pairwise disjoint
// and each must induce a connected subgraph of the host.
struct MinorModel {
  std::vector<std::vector<int>> branch_sets;
};

struct ModelCheck {
  bool valid = true;
  bool covers_all = false;  // branch sets partition all of V(g)
  int offending_set = -1;
  std::string problem;
};

ModelCheck verify_model(const Graph& g, const MinorModel& m);

// Quotient graph: one vertex per branch set (in model order), an edge where
// some host edge joins two sets.  Host vertices in no set are dropped.
// Throws HypothesisError on an invalid model, naming the offending set.
Graph contract_model(const Graph& g, const MinorModel& m);

// Dense-minor extraction for graphs of girth >= 8k+3 with minimum degree >= 2
// and no edge joining two degree-2 vertices.  Returns tree branch sets that
// cover V(g), pairwise joined by at most one edge, whose quotient has minimum
// degree >= 2^(k/2).  Throws HypothesisError when a hypothesis fails.
MinorModel mader_extract(const Graph& g, int k);

}  // namespace gct
