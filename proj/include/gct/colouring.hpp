#pragma once

#include <variant>

#include "gct/graph.hpp"
#include "gct/parameters.hpp"

namespace gct {

// Total assignment of colours 1..colours, one per vertex.
struct Colouring {
  int colours = 0;
  std::vector<int> assignment;
};

enum class GuaranteeKind { None, Defect, Clustering };

// Every colouring procedure returns its result through check_colouring, so
// defect / clustering / properness are always recomputed from the assignment
// and never trusted from the algorithm.
struct ColouringReport {
  Colouring colouring;
  int defect = 0;      // max same-colour degree
  int clustering = 0;  // max monochromatic component size (0 on empty graphs)
  bool proper = false;
  GuaranteeKind guarantee_kind = GuaranteeKind::None;
  long long guarantee = 0;  // saturated guarantee bound
  bool preconditions_verified = false;
};

ColouringReport check_colouring(const Graph& g, const Colouring& c);

struct DefectiveOptions {
  bool check_kst = true;  // scan for a K_{s,t} subgraph before colouring
  int kst_scan_max = 100; // skip the scan above this many vertices
};

// Greedy s-colouring along the radius-2 witness order, avoiding the colours
// of the s-1 leftmost earlier neighbours.  For K_{s,t}-subgraph-free graphs
// the defect is at most b + (t-1)*binom(b, s-1) where b is the recomputed
// witness bound.
ColouringReport defective_colour_via_col2(const Graph& g, int s, int t,
                                          const OrderingWitness& w,
                                          const DefectiveOptions& opts = {});

// Same procedure with the designated vertex moved to the front of the order;
// that vertex ends up properly coloured and the defect bound weakens to
// (b+1) + (t-1)*binom(b+1, s-1).  Requires s >= 2.
ColouringReport defective_colour_rooted(const Graph& g, int s, int t,
                                        const OrderingWitness& w, int root,
                                        const DefectiveOptions& opts = {});

// 2-colouring of graphs with girth >= 5 with clustering at most
// (4k^2)^(k^2), k the circumference (computed exactly unless hinted).
// Recurses on the block structure, colouring each block with the rooted
// defective colourer and permuting colours to agree at cut vertices.
ColouringReport two_colour_circumference_girth5(const Graph& g,
                                                std::optional<int> circumference_hint = {});

// 2-colouring with clustering <= 2 for graphs with girth >= 5 that have a
// feedback vertex v (g - v is a forest).  v may be supplied or is searched.
ColouringReport two_colour_fvn1_girth5(const Graph& g,
                                       std::optional<int> feedback_vertex = {});

// 2-colouring with clustering <= binom(|A|,2) + |A| + 1 for graphs with
// girth >= 7 and a feedback set A: A white, N(A) black, remaining forest
// components coloured by parity from their inherited roots.
ColouringReport two_colour_fvn_girth7(const Graph& g, const VertexSet& apex_set);

// Witness that the graph is too dense: an induced subgraph of minimum
// degree >= limit.
struct TooDense {
  VertexSet witness;
};

// Proper colouring with at most `limit` colours when degeneracy <= limit-1,
// otherwise the TooDense witness.
std::variant<Colouring, TooDense> proper_colour_degenerate(const Graph& g, int limit);

// Remaining induced subgraph with min degree >= 2 and no two adjacent
// degree-2 vertices; starting point for minor extraction.
struct StuckCertificate {
  VertexSet vertices;
};

// 2-colouring with clustering <= 2 by deleting degree-<=1 vertices (preferred)
// or adjacent degree-2 pairs and colouring back, or the certificate when the
// reduction gets stuck.
std::variant<ColouringReport, StuckCertificate> two_colour_large_girth(const Graph& g);

}  // namespace gct
