#include "gct/colouring.hpp"

#include <algorithm>
#include <queue>

namespace gct {

ColouringReport check_colouring(const Graph& g, const Colouring& c) {
  int n = g.vertex_count();
  if (static_cast<int>(c.assignment.size()) != n)
    throw FormatError("colouring has " + std::to_string(c.assignment.size()) +
                      " entries for " + std::to_string(n) + " vertices");
  for (int v = 0; v < n; ++v)
    if (c.assignment[v] < 1 || c.assignment[v] > c.colours)
      throw FormatError("colour " + std::to_string(c.assignment[v]) + " at vertex " +
                        std::to_string(v) + " outside 1.." + std::to_string(c.colours));
  ColouringReport report;
  report.colouring = c;
  std::vector<int> mono_deg(n, 0);
  for (auto [u, v] : g.edges())
    if (c.assignment[u] == c.assignment[v]) {
      ++mono_deg[u];
      ++mono_deg[v];
    }
  for (int v = 0; v < n; ++v) report.defect = std::max(report.defect, mono_deg[v]);
  report.proper = (report.defect == 0) ;
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    seen[v] = true;
    int size = 1;
    std::vector<int> stack = {v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj(u))
        if (!seen[w] && c.assignment[w] == c.assignment[u]) {
          seen[w] = true;
          ++size;
          stack.push_back(w);
        }
    }
    report.clustering = std::max(report.clustering, size);
  }
  return report;
}

namespace {

// colour along the order with s colours, avoiding the colours already given
// to the s-1 leftmost neighbours of each vertex
Colouring greedy_leftmost(const Graph& g, int s, const std::vector<int>& order) {
  int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  Colouring c;
  c.colours = s;
  c.assignment.assign(n, 0);
  for (int v : order) {
    std::vector<int> nb(g.adj(v));
    std::sort(nb.begin(), nb.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    std::vector<bool> forbidden(s + 1, false);
    for (int i = 0; i < std::min<int>(s - 1, nb.size()); ++i)
      if (pos[nb[i]] < pos[v]) forbidden[c.assignment[nb[i]]] = true;
    int colour = 1;
    while (forbidden[colour]) ++colour;
    c.assignment[v] = colour;
  }
  return c;
}

long long defect_guarantee(int b, int s, int t) {
  return sat_add(b, sat_mul(t - 1, sat_binom(b, s - 1)));
}

bool verify_kst_freeness(const Graph& g, int s, int t, const DefectiveOptions& opts) {
  if (!opts.check_kst || g.vertex_count() > opts.kst_scan_max) return false;
  if (contains_kst(g, s, t))
    throw HypothesisError("graph contains a K_{" + std::to_string(s) + "," +
                          std::to_string(t) + "} subgraph");
  return true;
}

}  // namespace

ColouringReport defective_colour_via_col2(const Graph& g, int s, int t,
                                          const OrderingWitness& w,
                                          const DefectiveOptions& opts) {
  if (s < 1 || t < s) throw HypothesisError("need t >= s >= 1");
  int b = reach_bound(g, w.order, 2);
  bool verified = verify_kst_freeness(g, s, t, opts);
  auto report = check_colouring(g, greedy_leftmost(g, s, w.order));
  report.guarantee_kind = GuaranteeKind::Defect;
  report.guarantee = defect_guarantee(b, s, t);
  report.preconditions_verified = verified;
  return report;
}

ColouringReport defective_colour_rooted(const Graph& g, int s, int t,
                                        const OrderingWitness& w, int root,
                                        const DefectiveOptions& opts) {
  if (s < 2 || t < s) throw HypothesisError("need t >= s >= 2");
  if (root < 0 || root >= g.vertex_count()) throw HypothesisError("root out of range");
  int b = reach_bound(g, w.order, 2);
  bool verified = verify_kst_freeness(g, s, t, opts);
  std::vector<int> order = {root};
  for (int v : w.order)
    if (v != root) order.push_back(v);
  if (reach_bound(g, order, 2) > b + 1)
    throw Error("fronting one vertex raised the reach bound by more than one");
  auto report = check_colouring(g, greedy_leftmost(g, s, order));
  report.guarantee_kind = GuaranteeKind::Defect;
  report.guarantee = defect_guarantee(b + 1, s, t);
  report.preconditions_verified = verified;
  return report;
}

ColouringReport two_colour_circumference_girth5(const Graph& g,
                                                std::optional<int> circumference_hint) {
  int n = g.vertex_count();
  auto gi = girth(g);
  if (gi && *gi < 5)
    throw HypothesisError("girth " + std::to_string(*gi) + " below 5");
  int k = circumference_hint ? *circumference_hint : circumference(g);
  if (k < 2) throw HypothesisError("circumference below 2");

  Colouring c;
  c.colours = 2;
  c.assignment.assign(n, 0);
  auto decomposition = block_decomposition(g);
  std::vector<std::vector<int>> blocks_of(n);
  for (int b = 0; b < static_cast<int>(decomposition.blocks.size()); ++b)
    for (int v : decomposition.blocks[b]) blocks_of[v].push_back(b);
  std::vector<bool> block_done(decomposition.blocks.size(), false);
  // girth >= 5 rules out K_{2,2} subgraphs, so skip the scan per block
  DefectiveOptions block_opts;
  block_opts.check_kst = false;

  std::queue<std::pair<int, int>> queue;  // (block, anchor vertex)
  for (int start = 0; start < n; ++start) {
    if (c.assignment[start] != 0) continue;
    for (int b : blocks_of[start]) queue.emplace(b, start);
    while (!queue.empty()) {
      auto [b, anchor] = queue.front();
      queue.pop();
      if (block_done[b]) continue;
      block_done[b] = true;
      auto sub = induced_subgraph(g, decomposition.blocks[b]);
      auto witness = strong_colouring_number_greedy(sub.graph, 2);
      auto local = defective_colour_rooted(sub.graph, 2, 2, witness,
                                           sub.from_host[anchor], block_opts);
      int have = c.assignment[anchor];
      int got = local.colouring.assignment[sub.from_host[anchor]];
      bool flip = (have != 0 && have != got);
      for (int i = 0; i < sub.graph.vertex_count(); ++i) {
        int colour = local.colouring.assignment[i];
        if (flip) colour = 3 - colour;
        c.assignment[sub.to_host[i]] = colour;
      }
      for (int v : decomposition.blocks[b])
        for (int b2 : blocks_of[v])
          if (!block_done[b2]) queue.emplace(b2, v);
    }
  }

  auto report = check_colouring(g, c);
  report.guarantee_kind = GuaranteeKind::Clustering;
  long long k2 = sat_mul(k, k);
  report.guarantee = sat_pow(sat_mul(4, k2), k2);
  report.preconditions_verified = !circumference_hint.has_value();
  return report;
}

ColouringReport two_colour_fvn1_girth5(const Graph& g, std::optional<int> feedback_vertex) {
  int n = g.vertex_count();
  auto gi = girth(g);
  if (gi && *gi < 5)
    throw HypothesisError("girth " + std::to_string(*gi) + " below 5");
  int apex = -1;
  if (n > 0) {
    if (feedback_vertex) {
      apex = *feedback_vertex;
      if (apex < 0 || apex >= n) throw HypothesisError("feedback vertex out of range");
      if (!is_feedback_vertex_set(g, {apex}))
        throw HypothesisError("removing vertex " + std::to_string(apex) +
                              " leaves a cycle");
    } else {
      for (int v = 0; v < n && apex == -1; ++v)
        if (is_feedback_vertex_set(g, {v})) apex = v;
      if (apex == -1) throw HypothesisError("no single feedback vertex exists");
    }
  }

  // peel: any degree-<=1 vertex goes first; otherwise every forest leaf is
  // adjacent to the apex, and a deepest leaf plus its degree-<=2 parent go
  struct Action {
    std::vector<int> removed;     // one vertex, or {leaf, parent}
    std::vector<int> references;  // colour these differently when restoring
  };
  std::vector<Action> actions;
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  auto remove_vertex = [&](int v) {
    alive[v] = false;
    for (int w : g.adj(v))
      if (alive[w]) --deg[w];
  };
  int alive_count = n;
  while (alive_count > 0) {
    int low = -1;
    for (int v = 0; v < n && low == -1; ++v)
      if (alive[v] && deg[v] <= 1) low = v;
    if (low != -1) {
      Action a;
      a.removed = {low};
      for (int w : g.adj(low))
        if (alive[w]) a.references.push_back(w);
      remove_vertex(low);
      --alive_count;
      actions.push_back(std::move(a));
      continue;
    }
    // BFS the forest g - apex from the smallest alive non-apex vertex
    int root = -1;
    for (int v = 0; v < n && root == -1; ++v)
      if (alive[v] && v != apex) root = v;
    if (root == -1) throw Error("apex alone cannot have degree above 1");
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> bfs;
    int deepest = root;
    dist[root] = 0;
    bfs.push(root);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      if (dist[u] > dist[deepest]) deepest = u;
      for (int w : g.adj(u)) {
        if (!alive[w] || w == apex || dist[w] != -1) continue;
        dist[w] = dist[u] + 1;
        parent[w] = u;
        bfs.push(w);
      }
    }
    int leaf = deepest, par = parent[deepest];
    if (par == -1) throw Error("deepest forest vertex has no parent");
    Action a;
    a.removed = {leaf, par};
    a.references.push_back(apex);  // leaf avoids the apex colour
    int other = -1;
    for (int w : g.adj(par))
      if (alive[w] && w != leaf) other = w;
    a.references.push_back(other == -1 ? leaf : other);
    remove_vertex(leaf);
    remove_vertex(par);
    alive_count -= 2;
    actions.push_back(std::move(a));
  }

  Colouring c;
  c.colours = 2;
  c.assignment.assign(n, 0);
  for (auto it = actions.rbegin(); it != actions.rend(); ++it) {
    for (std::size_t i = 0; i < it->removed.size(); ++i) {
      int v = it->removed[i];
      int avoid = 0;
      if (it->removed.size() == 1) {
        if (!it->references.empty()) avoid = c.assignment[it->references[0]];
      } else {
        avoid = c.assignment[it->references[i]];
      }
      c.assignment[v] = (avoid == 1) ? 2 : 1;
    }
  }

  auto report = check_colouring(g, c);
  report.guarantee_kind = GuaranteeKind::Clustering;
  report.guarantee = 2;
  report.preconditions_verified = true;
  return report;
}

ColouringReport two_colour_fvn_girth7(const Graph& g, const VertexSet& apex_set) {
  int n = g.vertex_count();
  auto gi = girth(g);
  if (gi && *gi < 7)
    throw HypothesisError("girth " + std::to_string(*gi) + " below 7");
  std::vector<bool> in_apex(n, false);
  int apex_size = 0;
  for (int v : apex_set) {
    if (v < 0 || v >= n) throw HypothesisError("apex vertex out of range");
    if (!in_apex[v]) {
      in_apex[v] = true;
      ++apex_size;
    }
  }
  if (!is_feedback_vertex_set(g, apex_set))
    throw HypothesisError("removing the apex set leaves a cycle");

  constexpr int white = 1, black = 2;
  Colouring c;
  c.colours = 2;
  c.assignment.assign(n, 0);
  std::vector<bool> in_halo(n, false);  // neighbours of the apex set
  for (int v = 0; v < n; ++v) {
    if (in_apex[v]) {
      c.assignment[v] = white;
      continue;
    }
    for (int w : g.adj(v))
      if (in_apex[w]) {
        in_halo[v] = true;
        c.assignment[v] = black;
        break;
      }
  }

  // depth of every forest vertex from its component's smallest vertex
  std::vector<int> forest_depth(n, -1);
  for (int r = 0; r < n; ++r) {
    if (in_apex[r] || forest_depth[r] != -1) continue;
    forest_depth[r] = 0;
    std::queue<int> bfs;
    bfs.push(r);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : g.adj(u))
        if (!in_apex[w] && forest_depth[w] == -1) {
          forest_depth[w] = forest_depth[u] + 1;
          bfs.push(w);
        }
    }
  }

  // remaining components inherit their root: the unique shallowest vertex
  for (int v = 0; v < n; ++v) {
    if (in_apex[v] || in_halo[v] || c.assignment[v] != 0) continue;
    std::vector<int> component = {v};
    std::vector<bool> seen(n, false);
    seen[v] = true;
    for (std::size_t i = 0; i < component.size(); ++i)
      for (int w : g.adj(component[i]))
        if (!in_apex[w] && !in_halo[w] && !seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
    int root = component[0];
    for (int u : component)
      if (forest_depth[u] < forest_depth[root]) root = u;
    std::vector<int> dist(n, -1);
    std::queue<int> bfs;
    dist[root] = 0;
    bfs.push(root);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      c.assignment[u] = (dist[u] % 2 == 0) ? white : black;
      for (int w : g.adj(u))
        if (seen[w] && dist[w] == -1) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
    }
  }

  auto report = check_colouring(g, c);
  report.guarantee_kind = GuaranteeKind::Clustering;
  report.guarantee = sat_add(sat_binom(apex_size, 2), apex_size + 1);
  report.preconditions_verified = true;
  return report;
}

std::variant<Colouring, TooDense> proper_colour_degenerate(const Graph& g, int limit) {
  if (limit < 1) throw HypothesisError("colour limit must be >= 1");
  int n = g.vertex_count();
  auto [d, elim] = degeneracy(g);
  if (d <= limit - 1) {
    Colouring c;
    c.colours = limit;
    c.assignment.assign(n, 0);
    for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
      std::vector<bool> forbidden(limit + 1, false);
      for (int w : g.adj(*it))
        if (c.assignment[w] != 0) forbidden[c.assignment[w]] = true;
      int colour = 1;
      while (colour <= limit && forbidden[colour]) ++colour;
      if (colour > limit) throw Error("degenerate greedy ran out of colours");
      c.assignment[*it] = colour;
    }
    return c;
  }
  // peel to the limit-core: an induced subgraph of min degree >= limit
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  std::queue<int> peel;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < limit) peel.push(v);
  }
  while (!peel.empty()) {
    int v = peel.front();
    peel.pop();
    if (!alive[v]) continue;
    alive[v] = false;
    for (int w : g.adj(v))
      if (alive[w] && --deg[w] == limit - 1) peel.push(w);
  }
  TooDense dense;
  for (int v = 0; v < n; ++v)
    if (alive[v]) dense.witness.push_back(v);
  if (dense.witness.empty()) throw Error("degeneracy above limit but no core found");
  return dense;
}

std::variant<ColouringReport, StuckCertificate> two_colour_large_girth(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  auto remove_vertex = [&](int v) {
    alive[v] = false;
    for (int w : g.adj(v))
      if (alive[w]) --deg[w];
  };

  struct Action {
    std::vector<int> removed;
    std::vector<int> references;  // -1 when a removed vertex had no neighbour
  };
  std::vector<Action> actions;
  int alive_count = n;
  while (alive_count > 0) {
    int low = -1;
    for (int v = 0; v < n && low == -1; ++v)
      if (alive[v] && deg[v] <= 1) low = v;
    if (low != -1) {
      Action a;
      a.removed = {low};
      int nb = -1;
      for (int w : g.adj(low))
        if (alive[w]) nb = w;
      a.references = {nb};
      remove_vertex(low);
      --alive_count;
      actions.push_back(std::move(a));
      continue;
    }
    std::pair<int, int> pair = {-1, -1};
    for (auto [u, v] : g.sorted_edges()) {
      if (alive[u] && alive[v] && deg[u] == 2 && deg[v] == 2) {
        pair = {u, v};
        break;
      }
    }
    if (pair.first == -1) break;  // stuck
    auto [u, v] = pair;
    Action a;
    a.removed = {u, v};
    int au = -1, bv = -1;
    for (int w : g.adj(u))
      if (alive[w] && w != v) au = w;
    for (int w : g.adj(v))
      if (alive[w] && w != u) bv = w;
    a.references = {au, bv};
    remove_vertex(u);
    remove_vertex(v);
    alive_count -= 2;
    actions.push_back(std::move(a));
  }
  if (alive_count > 0) {
    StuckCertificate stuck;
    for (int v = 0; v < n; ++v)
      if (alive[v]) stuck.vertices.push_back(v);
    return stuck;
  }

  Colouring c;
  c.colours = 2;
  c.assignment.assign(n, 0);
  for (auto it = actions.rbegin(); it != actions.rend(); ++it)
    for (std::size_t i = 0; i < it->removed.size(); ++i) {
      int avoid = (it->references[i] == -1) ? 0 : c.assignment[it->references[i]];
      c.assignment[it->removed[i]] = (avoid == 1) ? 2 : 1;
    }

  auto report = check_colouring(g, c);
  report.guarantee_kind = GuaranteeKind::Clustering;
  report.guarantee = 2;
  report.preconditions_verified = true;
  return report;
}

}  // namespace gct
