#include <algorithm>
#include <limits>
#include <set>

#include "doctest.h"
#include "gct/colouring.hpp"
#include "gct/constructions.hpp"
#include "gct/families.hpp"

using namespace gct;

namespace {

// theta graph: two hubs joined by three internally disjoint paths of length 3;
// girth 6, and either hub alone meets every cycle
Graph theta_graph() {
  return Graph::from_edges(
      8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
}

}  // namespace

TEST_CASE("colouring checks recompute defect and clustering") {
  Graph c5 = cycle_graph(5);
  auto rep = check_colouring(c5, Colouring{2, {1, 1, 2, 2, 2}});
  CHECK(rep.defect == 2);
  CHECK(rep.clustering == 3);
  CHECK(!rep.proper);
  CHECK(rep.guarantee_kind == GuaranteeKind::None);

  auto proper = check_colouring(cycle_graph(4), Colouring{2, {1, 2, 1, 2}});
  CHECK(proper.proper);
  CHECK(proper.defect == 0);
  CHECK(proper.clustering == 1);

  auto empty = check_colouring(Graph(0), Colouring{1, {}});
  CHECK(empty.clustering == 0);
  CHECK(empty.proper);

  CHECK_THROWS_AS(check_colouring(c5, Colouring{2, {1, 1, 2, 2}}), FormatError);
  CHECK_THROWS_AS(check_colouring(c5, Colouring{2, {1, 1, 2, 2, 0}}), FormatError);
  CHECK_THROWS_AS(check_colouring(c5, Colouring{2, {1, 1, 2, 2, 3}}), FormatError);
}

TEST_CASE("defective colouring along the radius-2 order") {
  Graph c5 = cycle_graph(5);
  auto w = strong_colouring_number_exact(c5, 2);
  REQUIRE(w.bound == 3);
  auto rep = defective_colour_via_col2(c5, 2, 2, w);
  CHECK(rep.colouring.colours == 2);
  CHECK(rep.guarantee_kind == GuaranteeKind::Defect);
  CHECK(rep.guarantee == 3 + 3);  // b + (t-1) * binom(b, s-1)
  CHECK(rep.defect <= rep.guarantee);
  CHECK(rep.preconditions_verified);

  Graph h = heawood_graph();
  auto hw = strong_colouring_number_greedy(h, 2);
  auto hrep = defective_colour_via_col2(h, 2, 3, hw);
  CHECK(hrep.guarantee == hw.bound + 2 * hw.bound);
  CHECK(hrep.defect <= hrep.guarantee);
  CHECK(hrep.preconditions_verified);  // girth 6 leaves no K_{2,3}

  // more colours can only be asked with t >= s
  CHECK_THROWS_AS(defective_colour_via_col2(c5, 0, 2, w), HypothesisError);
  CHECK_THROWS_AS(defective_colour_via_col2(c5, 3, 2, w), HypothesisError);
  // a non-permutation witness is rejected when the bound is recomputed
  OrderingWitness bad;
  bad.order = {0, 1, 2};
  CHECK_THROWS_AS(defective_colour_via_col2(c5, 2, 2, bad), HypothesisError);
}

TEST_CASE("subgraph scan guards the defective colourers") {
  Graph grid = grid_graph(3);  // plenty of 4-cycles
  auto w = strong_colouring_number_greedy(grid, 2);
  CHECK_THROWS_AS(defective_colour_via_col2(grid, 2, 2, w), HypothesisError);
  DefectiveOptions skip;
  skip.check_kst = false;
  auto rep = defective_colour_via_col2(grid, 2, 2, w, skip);
  CHECK(!rep.preconditions_verified);
  // oversized graphs skip the scan and report so
  DefectiveOptions tiny;
  tiny.kst_scan_max = 3;
  auto rep2 = defective_colour_via_col2(cycle_graph(5), 2, 2,
                                        strong_colouring_number_greedy(cycle_graph(5), 2), tiny);
  CHECK(!rep2.preconditions_verified);
}

TEST_CASE("rooted defective colouring keeps the root proper") {
  Graph c5 = cycle_graph(5);
  auto w = strong_colouring_number_exact(c5, 2);
  for (int root = 0; root < 5; ++root) {
    auto rep = defective_colour_rooted(c5, 2, 2, w, root);
    int rc = rep.colouring.assignment[root];
    for (int nb : c5.adj(root)) CHECK(rep.colouring.assignment[nb] != rc);
    CHECK(rep.guarantee == (w.bound + 1) + sat_binom(w.bound + 1, 1));
    CHECK(rep.defect <= rep.guarantee);
  }
  CHECK_THROWS_AS(defective_colour_rooted(c5, 1, 1, w, 0), HypothesisError);
  CHECK_THROWS_AS(defective_colour_rooted(c5, 2, 2, w, 5), HypothesisError);
  CHECK_THROWS_AS(defective_colour_rooted(c5, 2, 2, w, -1), HypothesisError);
}

TEST_CASE("block 2-colouring bounded by the circumference") {
  auto c5rep = two_colour_circumference_girth5(cycle_graph(5));
  CHECK(c5rep.colouring.colours == 2);
  CHECK(c5rep.guarantee_kind == GuaranteeKind::Clustering);
  CHECK(c5rep.clustering <= c5rep.guarantee);
  CHECK(c5rep.preconditions_verified);
  // k = 5: the clustering bound (4 * 25)^25 saturates
  CHECK(c5rep.guarantee == std::numeric_limits<long long>::max());

  // forests have circumference 2 by convention, giving bound (4*4)^4 = 65536
  auto tree = two_colour_circumference_girth5(path_graph(9));
  CHECK(tree.guarantee == 65536);
  CHECK(tree.clustering <= 2);

  // two 5-cycles sharing a vertex exercise the block recursion
  Graph blocks = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
  auto brep = two_colour_circumference_girth5(blocks);
  CHECK(brep.clustering <= brep.guarantee);
  CHECK(brep.colouring.colours == 2);

  auto apex = two_colour_circumference_girth5(apex_grid_girth5(4).graph);
  CHECK(apex.clustering <= apex.guarantee);

  // a hint skips the exact circumference and is reported as unverified
  auto hinted = two_colour_circumference_girth5(cycle_graph(5), 5);
  CHECK(!hinted.preconditions_verified);

  CHECK_THROWS_AS(two_colour_circumference_girth5(complete_graph(4)), HypothesisError);
  CHECK_THROWS_AS(two_colour_circumference_girth5(cycle_graph(4)), HypothesisError);
}

TEST_CASE("2-colouring with one feedback vertex") {
  for (auto fv : std::vector<std::optional<int>>{std::nullopt, 0, 3}) {
    auto rep = two_colour_fvn1_girth5(cycle_graph(5), fv);
    CHECK(rep.colouring.colours == 2);
    CHECK(rep.clustering <= 2);
    CHECK(rep.guarantee == 2);
    CHECK(rep.guarantee_kind == GuaranteeKind::Clustering);
    CHECK(rep.preconditions_verified);
  }
  for (auto fv : std::vector<std::optional<int>>{std::nullopt, 0, 1}) {
    auto rep = two_colour_fvn1_girth5(theta_graph(), fv);
    CHECK(rep.clustering <= 2);
  }
  // forests: any vertex works
  CHECK(two_colour_fvn1_girth5(path_graph(8)).clustering <= 2);
  CHECK(two_colour_fvn1_girth5(star_graph(6)).clustering <= 2);
  // the defect-1 gadget has girth 4, so this colourer must refuse it
  CHECK_THROWS_AS(two_colour_fvn1_girth5(fvn1_gadget(1).graph), HypothesisError);
  CHECK_THROWS_AS(two_colour_fvn1_girth5(complete_graph(4)), HypothesisError);
  // an interior path vertex of the theta graph misses the other two cycles
  CHECK_THROWS_AS(two_colour_fvn1_girth5(theta_graph(), 2), HypothesisError);
  CHECK_THROWS_AS(two_colour_fvn1_girth5(cycle_graph(5), 9), HypothesisError);
  Graph two_c5 = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                        {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
  CHECK_THROWS_AS(two_colour_fvn1_girth5(two_c5, 0), HypothesisError);
  CHECK_THROWS_AS(two_colour_fvn1_girth5(two_c5), HypothesisError);
}

TEST_CASE("2-colouring with a feedback set at girth 7") {
  auto rep = two_colour_fvn_girth7(cycle_graph(14), {0});
  CHECK(rep.colouring.colours == 2);
  CHECK(rep.guarantee == 2);  // binom(1,2) + 1 + 1
  CHECK(rep.clustering <= 2);
  CHECK(rep.preconditions_verified);

  auto two = two_colour_fvn_girth7(cycle_graph(14), {0, 7});
  CHECK(two.guarantee == 4);
  CHECK(two.clustering <= 4);

  // duplicated apexes collapse before the bound is computed
  CHECK(two_colour_fvn_girth7(cycle_graph(14), {0, 0}).guarantee == 2);

  // an empty feedback set on a forest yields a proper colouring
  auto forest = two_colour_fvn_girth7(path_graph(7), {});
  CHECK(forest.guarantee == 1);
  CHECK(forest.proper);
  CHECK(forest.clustering <= 1);

  Graph sh = subdivide(heawood_graph());
  auto shrep = two_colour_fvn_girth7(sh, {0, 2, 4, 8});
  CHECK(shrep.guarantee == 11);  // binom(4,2) + 4 + 1
  CHECK(shrep.clustering <= 11);

  CHECK_THROWS_AS(two_colour_fvn_girth7(heawood_graph(), {0, 2, 4, 8}), HypothesisError);
  CHECK_THROWS_AS(two_colour_fvn_girth7(cycle_graph(14), {}), HypothesisError);
  CHECK_THROWS_AS(two_colour_fvn_girth7(cycle_graph(14), {20}), HypothesisError);
}

TEST_CASE("proper colouring through degeneracy, with a dense core otherwise") {
  SplitMix rng(77);
  Graph t = random_tree(15, rng);
  auto tree = proper_colour_degenerate(t, 2);
  auto* tc = std::get_if<Colouring>(&tree);
  REQUIRE(tc != nullptr);
  CHECK(check_colouring(t, *tc).proper);

  auto grid = proper_colour_degenerate(grid_graph(3), 3);
  auto* gc = std::get_if<Colouring>(&grid);
  REQUIRE(gc != nullptr);
  CHECK(check_colouring(grid_graph(3), *gc).proper);
  CHECK(gc->colours == 3);

  auto k4 = proper_colour_degenerate(complete_graph(4), 3);
  auto* dense = std::get_if<TooDense>(&k4);
  REQUIRE(dense != nullptr);
  CHECK(dense->witness == VertexSet{0, 1, 2, 3});

  auto c5 = proper_colour_degenerate(cycle_graph(5), 2);
  auto* c5dense = std::get_if<TooDense>(&c5);
  REQUIRE(c5dense != nullptr);
  CHECK(c5dense->witness.size() == 5);
  // the witness honestly has minimum degree >= limit
  auto sub = induced_subgraph(cycle_graph(5), c5dense->witness);
  for (int v = 0; v < sub.graph.vertex_count(); ++v) CHECK(sub.graph.degree(v) >= 2);

  auto c5ok = proper_colour_degenerate(cycle_graph(5), 3);
  REQUIRE(std::get_if<Colouring>(&c5ok) != nullptr);
  CHECK(check_colouring(cycle_graph(5), std::get<Colouring>(c5ok)).proper);

  CHECK_THROWS_AS(proper_colour_degenerate(cycle_graph(5), 0), HypothesisError);
}

TEST_CASE("peeling 2-colouring reaches clustering 2 or certifies a core") {
  for (int n : {1, 2, 5, 20, 60}) {
    SplitMix rng(1000 + n);
    auto res = two_colour_large_girth(random_tree(n, rng));
    auto* rep = std::get_if<ColouringReport>(&res);
    REQUIRE(rep != nullptr);
    CHECK(rep->clustering <= 2);
    CHECK(rep->guarantee == 2);
  }
  for (int n = 3; n <= 20; ++n) {
    auto res = two_colour_large_girth(cycle_graph(n));
    auto* rep = std::get_if<ColouringReport>(&res);
    REQUIRE(rep != nullptr);
    CHECK(rep->clustering <= 2);
  }
  CHECK(std::get<ColouringReport>(two_colour_large_girth(star_graph(9))).clustering <= 2);

  auto stuck = two_colour_large_girth(petersen_graph());
  auto* cert = std::get_if<StuckCertificate>(&stuck);
  REQUIRE(cert != nullptr);
  CHECK(cert->vertices.size() == 10);

  // once-subdivided cubic graphs are immediately stuck: division vertices of
  // degree 2 only ever neighbour branch vertices of degree 3
  auto sh = two_colour_large_girth(subdivide(heawood_graph()));
  auto* shc = std::get_if<StuckCertificate>(&sh);
  REQUIRE(shc != nullptr);
  CHECK(shc->vertices.size() == 35);
  auto core = induced_subgraph(subdivide(heawood_graph()), shc->vertices);
  for (int v = 0; v < core.graph.vertex_count(); ++v) CHECK(core.graph.degree(v) >= 2);
  for (auto [u, v] : core.graph.edges())
    CHECK(!(core.graph.degree(u) == 2 && core.graph.degree(v) == 2));
}
