#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>

#include "gct/common.hpp"

namespace gct {

// Simple undirected graph on vertices 0..n-1.  No loops, no parallel edges.
// Adjacency lists are kept sorted; the edge list stores each edge once as
// (u, v) with u < v, in insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::pair<int, int>> sorted_edges() const;

  // throws on out-of-range endpoints, loops and duplicate edges
  void add_edge(int u, int v);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Edge-list interchange format: header "n m", then m lines "u v" with
// 0 <= u < v < n, LF line endings.  Reading is lenient about edge
// orientation (swaps u > v); writing is canonical (sorted edges).
Graph read_graph(std::istream& in);
Graph read_graph(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

// Independent DFS-based cycle check (deliberately not sharing code with girth).
bool has_cycle(const Graph& g);
bool is_forest(const Graph& g);

// Sides 0/1 of a bipartition, or nullopt if an odd cycle exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

struct BlockDecomposition {
  // maximal 2-connected subgraphs / bridges as vertex sets, plus one
  // singleton block per isolated vertex
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;
};
BlockDecomposition block_decomposition(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;    // new index -> host vertex
  std::vector<int> from_host;  // host vertex -> new index, -1 outside
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

std::optional<std::array<int, 3>> find_triangle(const Graph& g);
bool contains_clique(const Graph& g, int p);
// complete bipartite K_{s,t} subgraph (s <= t), not necessarily induced
bool contains_kst(const Graph& g, int s, int t);

// Subdivide every edge once; division vertices are appended in sorted edge
// order, so edge (u,v) gets vertex n + (rank of (u,v)).
Graph subdivide(const Graph& g);

}  // namespace gct
