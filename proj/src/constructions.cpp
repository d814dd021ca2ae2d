#include "gct/constructions.hpp"

#include <algorithm>
#include <queue>

namespace gct {

namespace {

void check_cap(long long vertices, const GeneratorLimits& limits, const std::string& what) {
  if (vertices > limits.vertex_cap)
    throw SizeError(what + " would have " + std::to_string(vertices) +
                    " vertices, above the cap " + std::to_string(limits.vertex_cap));
}

std::vector<std::vector<int>> forest_children(const RootedForestWitness& w) {
  std::vector<std::vector<int>> children(w.parent.size());
  for (int v = 0; v < static_cast<int>(w.parent.size()); ++v)
    if (w.parent[v] != -1) children[w.parent[v]].push_back(v);
  return children;
}

}  // namespace

Gadget standard_example(const OrderedHost& host, int d, const GeneratorLimits& limits) {
  int n = host.graph.vertex_count();
  if (d < 1) throw HypothesisError("amplification parameter d must be >= 1");
  if (static_cast<int>(host.order.size()) != n)
    throw HypothesisError("host order has wrong length");
  {
    std::vector<bool> seen(n, false);
    for (int v : host.order) {
      if (v < 0 || v >= n || seen[v]) throw HypothesisError("host order is not a permutation");
      seen[v] = true;
    }
  }
  // size of the complete d-ary tree with one level per host position
  long long total = 0, level = 1;
  for (int i = 0; i < n; ++i) {
    total = sat_add(total, level);
    check_cap(total, limits, "standard example");
    level = sat_mul(level, d);
  }

  Graph g(static_cast<int>(total));
  std::vector<int> depth(total);
  for (long long x = 1; x < total; ++x) depth[x] = depth[(x - 1) / d] + 1;
  for (long long x = 1; x < total; ++x) {
    int dx = depth[x];
    for (long long y = (x - 1) / d; ; y = (y - 1) / d) {
      if (host.graph.has_edge(host.order[depth[y]], host.order[dx]))
        g.add_edge(static_cast<int>(y), static_cast<int>(x));
      if (y == 0) break;
    }
  }

  Gadget gadget;
  gadget.graph = std::move(g);
  gadget.meta.name = "standard_example";
  gadget.meta.params = {{"d", d}, {"host_vertices", n}};
  gadget.meta.claims = {{"levels", n}, {"treedepth_at_most", n}};
  RootedForestWitness forest;
  forest.parent.assign(total, -1);
  for (long long x = 1; x < total; ++x) forest.parent[x] = static_cast<int>((x - 1) / d);
  gadget.forest = std::move(forest);
  return gadget;
}

Amplified treedepth_amplification(const Graph& host, const RootedForestWitness& forest,
                                  int d, const GeneratorLimits& limits) {
  if (d < 1) throw HypothesisError("amplification parameter d must be >= 1");
  if (!verify_treedepth_witness(host, forest))
    throw HypothesisError("forest witness does not cover the host");
  auto children = forest_children(forest);

  Amplified out;
  out.host = host;
  out.host_forest = forest;
  std::vector<int> copy_parent;

  // depth-first cloning: non-root host vertices get d+1 copies per parent copy
  struct Frame {
    int host_vertex;
    int parent_copy;
  };
  std::vector<Frame> stack;
  for (int r = host.vertex_count() - 1; r >= 0; --r)
    if (forest.parent[r] == -1) stack.push_back({r, -1});
  while (!stack.empty()) {
    auto [u, pc] = stack.back();
    stack.pop_back();
    int id = static_cast<int>(out.original_of.size());
    check_cap(id + 1, limits, "amplified graph");
    out.original_of.push_back(u);
    copy_parent.push_back(pc);
    for (auto it = children[u].rbegin(); it != children[u].rend(); ++it)
      for (int l = 0; l <= d; ++l) stack.push_back({*it, id});
  }

  Graph g(static_cast<int>(out.original_of.size()));
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int y = copy_parent[x]; y != -1; y = copy_parent[y])
      if (host.has_edge(out.original_of[x], out.original_of[y])) g.add_edge(y, x);
  out.graph = std::move(g);
  out.forest.parent = std::move(copy_parent);
  return out;
}

std::optional<std::vector<int>> extract_proper_copy(const Amplified& a, const Colouring& c) {
  int n = a.graph.vertex_count();
  if (static_cast<int>(c.assignment.size()) != n)
    throw FormatError("colouring does not fit the amplified graph");
  for (int v = 0; v < n; ++v)
    if (c.assignment[v] < 1 || c.assignment[v] > c.colours)
      throw FormatError("colour out of range at amplified vertex " + std::to_string(v));

  auto copy_children = forest_children(a.forest);
  auto host_children = forest_children(a.host_forest);

  // subtree scan: does the copy subtree at x hold a same-coloured neighbour
  // of the chosen parent copy?
  auto subtree_conflicts = [&](int x, int parent_copy) {
    int beta = c.assignment[parent_copy];
    std::vector<int> stack = {x};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (c.assignment[u] == beta && a.graph.has_edge(parent_copy, u)) return true;
      for (int w : copy_children[u]) stack.push_back(w);
    }
    return false;
  };

  std::vector<int> chosen(a.host.vertex_count(), -1);
  std::vector<int> order;  // host vertices, parents before children
  for (int r = 0; r < a.host.vertex_count(); ++r)
    if (a.host_forest.parent[r] == -1) order.push_back(r);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : host_children[order[i]]) order.push_back(w);

  // roots have a unique copy: the copy-tree roots in construction order
  {
    std::vector<int> copy_roots;
    for (int x = 0; x < n; ++x)
      if (a.forest.parent[x] == -1) copy_roots.push_back(x);
    for (int x : copy_roots) chosen[a.original_of[x]] = x;
  }
  for (int u : order) {
    if (chosen[u] != -1) continue;
    int parent_copy = chosen[a.host_forest.parent[u]];
    int pick = -1;
    for (int x : copy_children[parent_copy]) {
      if (a.original_of[x] != u) continue;
      if (!subtree_conflicts(x, parent_copy)) {
        pick = x;
        break;
      }
    }
    if (pick == -1) return std::nullopt;
    chosen[u] = pick;
  }
  return chosen;
}

Gadget independent_set_tree(int k, int layer_cap, const GeneratorLimits& limits) {
  if (layer_cap < 1) throw HypothesisError("need at least one layer");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> root_path = {{}};  // ancestors, root first
  std::vector<int> parent = {-1};
  int layer_begin = 0, layer_end = 1;  // current deepest layer [begin, end)
  int total = 1;

  std::vector<std::vector<int>> adj(1);
  auto add_edge = [&](int u, int v) {
    edges.emplace_back(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
  };

  for (int layer = 2; layer <= layer_cap; ++layer) {
    int next_begin = total;
    for (int v = layer_begin; v < layer_end; ++v) {
      std::vector<int> path = root_path[v];
      path.push_back(v);
      int p = static_cast<int>(path.size());
      for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        // only independent subsets of the root path spawn a child
        bool independent = true;
        for (int i = 0; i < p && independent; ++i) {
          if (!(mask & (1u << i))) continue;
          for (int j = i + 1; j < p && independent; ++j) {
            if (!(mask & (1u << j))) continue;
            for (int w : adj[path[i]])
              if (w == path[j]) {
                independent = false;
                break;
              }
          }
        }
        if (!independent) continue;
        check_cap(total + 1, limits, "independent set tree");
        int child = total++;
        root_path.push_back(path);
        parent.push_back(v);
        adj.emplace_back();
        for (int i = 0; i < p; ++i)
          if (mask & (1u << i)) add_edge(path[i], child);
      }
    }
    layer_begin = next_begin;
    layer_end = total;
  }

  Gadget gadget;
  gadget.graph = Graph::from_edges(total, edges);
  gadget.meta.name = "independent_set_tree";
  gadget.meta.params = {{"k", k}, {"layers", layer_cap}};
  gadget.meta.claims = {{"chromatic_at_least", k},
                        {"triangle_free", 1},
                        {"treedepth_at_most", layer_cap}};
  RootedForestWitness forest;
  forest.parent = std::move(parent);
  gadget.forest = std::move(forest);
  return gadget;
}

Gadget fvn1_gadget(int d) {
  if (d < 0) throw HypothesisError("defect parameter must be >= 0");
  // star centre 0 with leaves 1..d+1; 2d+1 private leaves per star vertex;
  // apex over all private leaves
  std::vector<std::pair<int, int>> edges;
  int next = d + 2;
  std::vector<int> private_leaves;
  for (int leaf = 1; leaf <= d + 1; ++leaf) edges.emplace_back(0, leaf);
  for (int v = 0; v <= d + 1; ++v)
    for (int i = 0; i < 2 * d + 1; ++i) {
      edges.emplace_back(v, next);
      private_leaves.push_back(next);
      ++next;
    }
  int alpha = next++;
  for (int leaf : private_leaves) edges.emplace_back(leaf, alpha);

  Gadget gadget;
  gadget.graph = Graph::from_edges(next, edges);
  gadget.meta.name = "fvn1_gadget";
  gadget.meta.params = {{"d", d}};
  gadget.meta.claims = {{"fvn", 1},
                        {"triangle_free", 1},
                        {"defect_refuted_with_two_colours", d}};
  gadget.meta.named_vertices = {{"alpha", alpha}, {"centre", 0}};
  gadget.meta.named_sets = {{"private_leaves", private_leaves}};
  return gadget;
}

Gadget fvn7_gadget(int c) {
  if (c < 1) throw HypothesisError("clustering parameter must be >= 1");
  int path_edges = 4 * c * c + 4 * c + 1;
  std::vector<std::pair<int, int>> edges;
  int next = 7;
  VertexSet hubs = {0, 1, 2, 3, 4, 5, 6};
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int e = b + 1; e < 7; ++e)
        for (int f = e + 1; f < 7; ++f) {
          int hub[4] = {a, b, e, f};
          for (int i = 0; i <= path_edges; ++i) {
            int x = next++;
            if (i > 0) edges.emplace_back(x - 1, x);
            edges.emplace_back(hub[i % 4], x);
          }
        }

  Gadget gadget;
  gadget.graph = Graph::from_edges(next, edges);
  gadget.meta.name = "fvn7_gadget";
  gadget.meta.params = {{"c", c}};
  gadget.meta.claims = {{"girth", 6},
                        {"fvn_at_most", 7},
                        {"pathwidth_at_most", 8},
                        {"clustering_refuted_with_two_colours", c}};
  gadget.meta.named_sets = {{"hubs", hubs}};
  return gadget;
}

Gadget apex_grid_girth5(int m, const GeneratorLimits& limits) {
  if (m < 2) throw HypothesisError("grid side must be >= 2");
  check_cap(static_cast<long long>(m) * m * 2, limits, "apex grid");
  auto id = [m](int x, int y) { return x * m + y; };
  std::vector<std::pair<int, int>> edges;
  int next = m * m;
  VertexSet division;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x + 1 < m) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < m) {
        if ((x + y) % 2 == 0) {
          int mid = next++;
          division.push_back(mid);
          edges.emplace_back(id(x, y), mid);
          edges.emplace_back(mid, id(x, y + 1));
        } else {
          edges.emplace_back(id(x, y), id(x, y + 1));
        }
      }
    }
  int apex = next++;
  for (int v : division) edges.emplace_back(v, apex);

  Gadget gadget;
  gadget.graph = Graph::from_edges(next, edges);
  gadget.meta.name = "apex_grid_girth5";
  gadget.meta.params = {{"m", m}};
  gadget.meta.claims = {{"girth", 5}, {"apex_count", 1}};
  gadget.meta.named_vertices = {{"apex", apex}};
  gadget.meta.named_sets = {{"division", division}};
  return gadget;
}

Gadget apex23_grid_girth8(int m, const GeneratorLimits& limits) {
  if (m < 2) throw HypothesisError("grid side must be >= 2");
  check_cap(static_cast<long long>(m) * m * 3 + 23, limits, "apex grid");
  auto id = [m](int x, int y) { return x * m + y; };
  std::vector<std::pair<int, int>> grid_edges;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x + 1 < m) grid_edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < m) grid_edges.emplace_back(id(x, y), id(x, y + 1));
    }
  Graph grid = Graph::from_edges(m * m, grid_edges);
  Graph sub = subdivide(grid);
  int base = m * m;
  int divisions = sub.vertex_count() - base;

  // greedy labels: equal labels must sit at distance >= 6 in the subdivision
  std::vector<int> label(divisions, 0);
  for (int i = 0; i < divisions; ++i) {
    std::vector<bool> used(24, false);
    auto dist = bfs_distances(sub, base + i);
    for (int j = 0; j < divisions; ++j)
      if (j != i && label[j] != 0 && dist[base + j] >= 0 && dist[base + j] <= 5)
        used[label[j]] = true;
    int pick = 1;
    while (pick <= 23 && used[pick]) ++pick;
    if (pick > 23) throw Error("a division vertex saw all 23 labels within distance 5");
    label[i] = pick;
  }

  int n = sub.vertex_count() + 23;
  std::vector<std::pair<int, int>> edges = sub.edges();
  VertexSet apexes, division;
  for (int l = 1; l <= 23; ++l) apexes.push_back(sub.vertex_count() + l - 1);
  for (int i = 0; i < divisions; ++i) {
    division.push_back(base + i);
    edges.emplace_back(base + i, apexes[label[i] - 1]);
  }

  Gadget gadget;
  gadget.graph = Graph::from_edges(n, edges);
  gadget.meta.name = "apex23_grid_girth8";
  gadget.meta.params = {{"m", m}};
  gadget.meta.claims = {{"girth", 8}, {"apex_count", 23}};
  gadget.meta.named_sets = {{"apexes", apexes}, {"division", division}};
  return gadget;
}

}  // namespace gct
