#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gct/families.hpp"
#include "gct/graph.hpp"

using namespace gct;

TEST_CASE("graph construction and edge bookkeeping") {
  Graph g(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.max_degree() == 2);
  // edge list stores (min, max) in insertion order; sorted_edges sorts
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 1}});
  CHECK(g.sorted_edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  // adjacency lists stay sorted
  CHECK(g.adj(0) == std::vector<int>{1, 2});

  CHECK_THROWS_AS(Graph(-1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 4), Error);
  CHECK_THROWS_AS(g.add_edge(-1, 0), Error);
  CHECK_THROWS_AS(g.add_edge(3, 3), Error);
  CHECK_THROWS_AS(g.add_edge(2, 0), Error);  // duplicate, either orientation

  Graph h = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(h.edge_count() == 2);
}

TEST_CASE("edge-list text round trip is canonical") {
  Graph g = petersen_graph();
  std::string text = write_graph(g);
  Graph back = read_graph(text);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.sorted_edges() == g.sorted_edges());
  // writing is canonical: a second round trip reproduces the bytes
  CHECK(write_graph(back) == text);

  // header first, then one line per edge with u < v
  std::istringstream lines(text);
  std::string first;
  std::getline(lines, first);
  CHECK(first == "10 15");
}

TEST_CASE("edge-list reader accepts swapped orientation and trailing blanks") {
  Graph g = read_graph("3 2\n1 0\n2 1\n");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(read_graph("2 1\n0 1\n\n  \n").edge_count() == 1);
  CHECK(read_graph("0 0\n").vertex_count() == 0);
  CHECK(read_graph("3 0").vertex_count() == 3);
}

TEST_CASE("edge-list reader rejects malformed input") {
  CHECK_THROWS_AS(read_graph(""), FormatError);
  CHECK_THROWS_AS(read_graph("x y\n"), FormatError);
  CHECK_THROWS_AS(read_graph("3\n"), FormatError);
  CHECK_THROWS_AS(read_graph("3 2\n0 1\n"), FormatError);        // count mismatch
  CHECK_THROWS_AS(read_graph("3 1\n0 1\n1 2\n"), FormatError);   // trailing edge
  CHECK_THROWS_AS(read_graph("3 1\n0 1\njunk\n"), FormatError);  // trailing text
  CHECK_THROWS_AS(read_graph("3 1\n1 1\n"), FormatError);        // self-loop
  CHECK_THROWS_AS(read_graph("3 1\n0 5\n"), FormatError);        // out of range
  CHECK_THROWS_AS(read_graph("3 2\n0 1\n0 1\n"), FormatError);   // duplicate
  CHECK_THROWS_AS(read_graph("3 1\n0 a\n"), FormatError);
  CHECK_THROWS_AS(read_graph("-2 0\n"), FormatError);
}

TEST_CASE("bfs distances") {
  Graph g = path_graph(4);
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(bfs_distances(g, 2) == std::vector<int>{2, 1, 0, 1});
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  auto d = bfs_distances(two, 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == -1);
  CHECK(d[3] == -1);
}

TEST_CASE("girth on fixed graphs") {
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(cycle_graph(4)) == 4);
  CHECK(girth(petersen_graph()) == 5);
  CHECK(girth(heawood_graph()) == 6);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(grid_graph(3)) == 4);
  CHECK(!girth(path_graph(6)).has_value());
  CHECK(!girth(star_graph(5)).has_value());
  CHECK(!girth(Graph(0)).has_value());
  Graph chord = cycle_graph(6);
  chord.add_edge(0, 3);
  CHECK(girth(chord) == 4);
}

TEST_CASE("cycle detection and forests") {
  CHECK(!has_cycle(path_graph(5)));
  CHECK(is_forest(path_graph(5)));
  CHECK(has_cycle(cycle_graph(3)));
  CHECK(!is_forest(cycle_graph(3)));
  Graph forest = Graph::from_edges(5, {{0, 1}, {2, 3}});
  CHECK(is_forest(forest));
  Graph mixed = Graph::from_edges(6, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(has_cycle(mixed));
  CHECK(!is_forest(mixed));
  CHECK(is_forest(Graph(0)));
}

TEST_CASE("bipartition") {
  Graph c6 = cycle_graph(6);
  auto sides = bipartition(c6);
  REQUIRE(sides.has_value());
  for (auto [u, v] : c6.edges()) CHECK((*sides)[u] != (*sides)[v]);
  CHECK(!bipartition(cycle_graph(5)).has_value());
  CHECK(!bipartition(petersen_graph()).has_value());
  CHECK(bipartition(heawood_graph()).has_value());
  CHECK(bipartition(grid_graph(4)).has_value());
  CHECK(bipartition(Graph(3)).has_value());
}

TEST_CASE("connected components") {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {4, 5}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& c : comps) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("block decomposition") {
  SUBCASE("two triangles sharing a vertex") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    std::set<std::set<int>> blocks;
    for (auto b : bd.blocks) blocks.insert(std::set<int>(b.begin(), b.end()));
    CHECK(blocks.count({0, 1, 2}) == 1);
    CHECK(blocks.count({0, 3, 4}) == 1);
    CHECK(bd.cut_vertices == std::vector<int>{0});
  }
  SUBCASE("a path decomposes into bridges") {
    auto bd = block_decomposition(path_graph(4));
    CHECK(bd.blocks.size() == 3);
    std::set<int> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
    CHECK(cuts == std::set<int>{1, 2});
  }
  SUBCASE("a 2-connected graph is one block") {
    auto bd = block_decomposition(petersen_graph());
    REQUIRE(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].size() == 10);
    CHECK(bd.cut_vertices.empty());
  }
  SUBCASE("isolated vertices become singleton blocks") {
    Graph g = Graph::from_edges(3, {{0, 1}});
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    std::multiset<std::size_t> sizes;
    for (const auto& b : bd.blocks) sizes.insert(b.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2});
  }
}

TEST_CASE("induced subgraphs carry their vertex maps") {
  Graph g = petersen_graph();
  auto sub = induced_subgraph(g, {5, 0, 1, 2, 5});  // unsorted, duplicated
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.to_host == std::vector<int>{0, 1, 2, 5});
  CHECK(sub.from_host[0] == 0);
  CHECK(sub.from_host[5] == 3);
  CHECK(sub.from_host[9] == -1);
  // outer edges 0-1, 1-2 and the spoke 0-5 survive
  CHECK(sub.graph.edge_count() == 3);
  CHECK(sub.graph.has_edge(0, 1));
  CHECK(sub.graph.has_edge(1, 2));
  CHECK(sub.graph.has_edge(0, 3));
}

TEST_CASE("triangle and clique detection") {
  auto t = find_triangle(complete_graph(4));
  REQUIRE(t.has_value());
  CHECK(complete_graph(4).has_edge((*t)[0], (*t)[1]));
  CHECK(complete_graph(4).has_edge((*t)[1], (*t)[2]));
  CHECK(complete_graph(4).has_edge((*t)[0], (*t)[2]));
  CHECK(!find_triangle(petersen_graph()).has_value());
  CHECK(!find_triangle(cycle_graph(5)).has_value());
  CHECK(!find_triangle(grid_graph(4)).has_value());

  CHECK(contains_clique(complete_graph(4), 4));
  CHECK(!contains_clique(complete_graph(4), 5));
  CHECK(contains_clique(complete_graph(4), 1));
  CHECK(!contains_clique(petersen_graph(), 3));
  CHECK(contains_clique(petersen_graph(), 2));
}

TEST_CASE("complete bipartite subgraph detection") {
  Graph k23 = Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(contains_kst(k23, 2, 2));
  CHECK(contains_kst(k23, 2, 3));
  CHECK(!contains_kst(k23, 3, 3));
  CHECK(!contains_kst(cycle_graph(8), 2, 2));
  CHECK(contains_kst(grid_graph(3), 2, 2));  // any 4-cycle
  CHECK(contains_kst(star_graph(5), 1, 5));
  CHECK(!contains_kst(star_graph(5), 1, 6));
  CHECK(contains_kst(cycle_graph(5), 1, 2));
  CHECK(!contains_kst(Graph(3), 1, 1));
  CHECK(contains_kst(path_graph(2), 1, 1));
}

TEST_CASE("subdividing every edge once") {
  Graph c3 = cycle_graph(3);
  Graph s = subdivide(c3);
  CHECK(s.vertex_count() == 6);
  CHECK(s.edge_count() == 6);
  CHECK(girth(s) == 6);
  // division vertex n + rank of the edge in sorted order
  CHECK(s.has_edge(0, 3));  // (0,1) is rank 0
  CHECK(s.has_edge(1, 3));
  CHECK(s.has_edge(0, 4));  // (0,2) is rank 1
  CHECK(s.has_edge(2, 4));
  CHECK(s.has_edge(1, 5));  // (1,2) is rank 2
  CHECK(s.has_edge(2, 5));

  Graph sp = subdivide(petersen_graph());
  CHECK(sp.vertex_count() == 25);
  CHECK(sp.edge_count() == 30);
  CHECK(girth(sp) == 10);
}

TEST_CASE("named families have the expected shapes") {
  CHECK(path_graph(1).vertex_count() == 1);
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(3).edge_count() == 3);
  CHECK_THROWS_AS(cycle_graph(2), HypothesisError);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(4).vertex_count() == 5);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(grid_graph(3).vertex_count() == 9);
  CHECK(grid_graph(3).edge_count() == 12);
  Graph p = petersen_graph();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.max_degree() == 3);
  Graph h = heawood_graph();
  CHECK(h.vertex_count() == 14);
  CHECK(h.edge_count() == 21);
  CHECK(h.max_degree() == 3);
}

TEST_CASE("deterministic random generators") {
  SplitMix a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SplitMix r1(7), r2(7);
  Graph g1 = random_graph(12, 40, r1);
  Graph g2 = random_graph(12, 40, r2);
  CHECK(g1.sorted_edges() == g2.sorted_edges());

  SplitMix rc(3);
  Graph cubic = random_cubic(10, rc);
  CHECK(cubic.vertex_count() == 10);
  for (int v = 0; v < 10; ++v) CHECK(cubic.degree(v) == 3);
  CHECK_THROWS_AS(random_cubic(5, rc), HypothesisError);

  SplitMix rt(9);
  Graph tree = random_tree(30, rt);
  CHECK(tree.vertex_count() == 30);
  CHECK(tree.edge_count() == 29);
  CHECK(is_forest(tree));
  CHECK(connected_components(tree).size() == 1);

  SplitMix rs(5);
  Graph sub = random_edge_subgraph(petersen_graph(), 50, rs);
  CHECK(sub.vertex_count() == 10);
  CHECK(sub.edge_count() <= 15);
  CHECK_THROWS_AS(random_graph(5, 101, rs), HypothesisError);
}
