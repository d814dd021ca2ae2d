#include <map>
#include <set>

#include "doctest.h"
#include "gct/families.hpp"
#include "gct/graph.hpp"
#include "gct/minors.hpp"

using namespace gct;

TEST_CASE("branch-set model verification") {
  Graph p4 = path_graph(4);
  MinorModel halves{{{0, 1}, {2, 3}}};
  auto chk = verify_model(p4, halves);
  CHECK(chk.valid);
  CHECK(chk.covers_all);

  MinorModel partial{{{0}, {2}}};
  auto chk2 = verify_model(p4, partial);
  CHECK(chk2.valid);
  CHECK(!chk2.covers_all);

  auto empty = verify_model(p4, MinorModel{{{0, 1}, {}}});
  CHECK(!empty.valid);
  CHECK(empty.offending_set == 1);

  auto overlap = verify_model(p4, MinorModel{{{0, 1}, {1, 2}}});
  CHECK(!overlap.valid);
  CHECK(overlap.offending_set == 1);

  auto disconnected = verify_model(p4, MinorModel{{{0, 3}}});
  CHECK(!disconnected.valid);
  CHECK(disconnected.problem == "branch set is not connected");

  auto out_of_range = verify_model(p4, MinorModel{{{7}}});
  CHECK(!out_of_range.valid);
}

TEST_CASE("contracting branch sets") {
  Graph p4 = path_graph(4);
  Graph k2 = contract_model(p4, MinorModel{{{0, 1}, {2, 3}}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.has_edge(0, 1));

  Graph c6 = cycle_graph(6);
  Graph c3 = contract_model(c6, MinorModel{{{0, 1}, {2, 3}, {4, 5}}});
  CHECK(c3.vertex_count() == 3);
  CHECK(c3.edge_count() == 3);

  // vertices outside every branch set are dropped
  Graph p5 = path_graph(5);
  Graph ends = contract_model(p5, MinorModel{{{0}, {4}}});
  CHECK(ends.vertex_count() == 2);
  CHECK(ends.edge_count() == 0);

  // several host edges between two sets collapse to one
  Graph c4 = cycle_graph(4);
  Graph pair = contract_model(c4, MinorModel{{{0, 1}, {2, 3}}});
  CHECK(pair.vertex_count() == 2);
  CHECK(pair.edge_count() == 1);

  CHECK_THROWS_AS(contract_model(p4, MinorModel{{{0, 2}}}), HypothesisError);
  CHECK_THROWS_AS(contract_model(p4, MinorModel{{{0}, {0}}}), HypothesisError);
}

TEST_CASE("dense-minor extraction on the subdivided Heawood graph") {
  Graph sh = subdivide(heawood_graph());
  REQUIRE(girth(sh) == 12);  // >= 8k + 3 for k = 1
  auto model = mader_extract(sh, 1);
  auto chk = verify_model(sh, model);
  CHECK(chk.valid);
  CHECK(chk.covers_all);
  // branch sets are pairwise joined by at most one edge
  std::map<std::pair<int, int>, int> between;
  std::vector<int> owner(sh.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(model.branch_sets.size()); ++i)
    for (int v : model.branch_sets[i]) owner[v] = i;
  for (auto [u, v] : sh.edges()) {
    int a = owner[u], b = owner[v];
    if (a == b) continue;
    ++between[{std::min(a, b), std::max(a, b)}];
  }
  for (const auto& [pair, count] : between) CHECK(count == 1);
  // the quotient keeps minimum degree >= 2^(k/2)
  Graph quotient = contract_model(sh, model);
  for (int v = 0; v < quotient.vertex_count(); ++v) CHECK(quotient.degree(v) >= 2);
}

TEST_CASE("dense-minor extraction rejects violated hypotheses") {
  CHECK_THROWS_AS(mader_extract(petersen_graph(), 1), HypothesisError);  // girth 5 < 11
  CHECK_THROWS_AS(mader_extract(subdivide(grid_graph(3)), 1), HypothesisError);  // girth 8
  CHECK_THROWS_AS(mader_extract(path_graph(3), 1), HypothesisError);  // degree-1 vertices
  CHECK_THROWS_AS(mader_extract(cycle_graph(12), 1), HypothesisError);  // adjacent degree 2
  CHECK_THROWS_AS(mader_extract(subdivide(heawood_graph()), 0), HypothesisError);
  CHECK_THROWS_AS(mader_extract(Graph(0), 1), HypothesisError);
  // k = 2 needs girth 19
  CHECK_THROWS_AS(mader_extract(subdivide(heawood_graph()), 2), HypothesisError);
}
