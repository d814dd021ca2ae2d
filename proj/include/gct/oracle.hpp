#pragma once

#include "gct/colouring.hpp"
#include "gct/constructions.hpp"

namespace gct {

enum class ColourMode { Proper, Defect, Clustering };

struct ColourabilityQuery {
  int colours = 1;
  ColourMode mode = ColourMode::Proper;
  int bound = 0;  // defect d / clustering c; ignored for Proper
};

struct OracleBudget {
  long long max_nodes = 100'000'000;
};

struct ColourabilityResult {
  bool colourable = false;
  std::optional<Colouring> witness;  // present iff colourable
  long long nodes = 0;
};

// Exhaustive backtracking over colourings, component by component, vertices
// in degeneracy order, colour classes canonical (a vertex may only open one
// new colour), with incremental defect / clustering tracking.  Proper 2-
// colourability short-circuits to a bipartiteness check at any size.  Throws
// BudgetError when the node budget runs out.
ColourabilityResult is_colourable(const Graph& g, const ColourabilityQuery& q,
                                  const OracleBudget& budget = {});

// Every assignment over colours 1..q.colours that meets the query, with no
// symmetry reduction (swapped colours are listed separately).  Exponential;
// meant for small graphs under a budget.
std::vector<Colouring> all_colourings(const Graph& g, const ColourabilityQuery& q,
                                      const OracleBudget& budget = {});

int chromatic_number(const Graph& g, const OracleBudget& budget = {});
// Smallest d such that g is colourable with `colours` colours and defect d.
int min_defect(const Graph& g, int colours, const OracleBudget& budget = {});
// Smallest c such that g is colourable with `colours` colours and clustering c.
int min_clustering(const Graph& g, int colours, const OracleBudget& budget = {});

// The four equivalent statements about the amplified standard example of an
// ordered host: k-colourability with defect d-1, with clustering d, properly,
// and proper k-colourability of the host itself.
struct EquivalenceReport {
  bool defect_route = false;
  bool clustering_route = false;
  bool proper_route = false;
  bool host_route = false;
  bool consistent() const {
    return defect_route == clustering_route && clustering_route == proper_route &&
           proper_route == host_route;
  }
};

EquivalenceReport verify_equivalence(const OrderedHost& host, int d, int k,
                                           const OracleBudget& budget = {},
                                           const GeneratorLimits& limits = {});

}  // namespace gct
