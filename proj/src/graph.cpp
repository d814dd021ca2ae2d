#include "gct/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace gct {

namespace {
int require_nonnegative(int n) {
  if (n < 0) throw Error("negative vertex count");
  return n;
}
}  // namespace

Graph::Graph(int n) : n_(require_nonnegative(n)), adj_(n) {}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("edge endpoint out of range");
  if (u == v) throw Error("self-loop");
  if (u > v) std::swap(u, v);
  if (has_edge(u, v)) throw Error("duplicate edge");
  edges_.emplace_back(u, v);
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = (&a == &adj_[u]) ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::sorted_edges() const {
  auto e = edges_;
  std::sort(e.begin(), e.end());
  return e;
}

// ---------------------------------------------------------------- io

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("malformed header: empty input");
  long long n, m;
  {
    std::istringstream h(line);
    char extra;
    if (!(h >> n >> m) || (h >> extra))
      throw FormatError("malformed header: expected \"n m\", got \"" + line + "\"");
  }
  if (n < 0 || m < 0) throw FormatError("malformed header: negative count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw FormatError("edge count mismatch: header promises " + std::to_string(m) +
                        " edges, found " + std::to_string(i));
    long long u, v;
    {
      std::istringstream e(line);
      char extra;
      if (!(e >> u >> v) || (e >> extra))
        throw FormatError("bad edge line: \"" + line + "\"");
    }
    if (u == v)
      throw FormatError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw FormatError("vertex index out of range on edge \"" + line + "\" (n = " +
                        std::to_string(n) + ")");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw FormatError("duplicate edge \"" + line + "\"");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
      throw FormatError("trailing content after the promised edge count");
  }
  return g;
}

Graph read_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.sorted_edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << write_graph(g);
}

// ---------------------------------------------------------------- traversal

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.adj(u))
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge seen at (u,w) closes a walk of
  // length dist[u]+dist[w]+1 through the root.  The minimum over all roots
  // is exactly the girth (roots on a shortest cycle realise it).
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best != -1 && 2 * dist[u] >= best) continue;  // cannot improve
      for (int w : g.adj(u)) {
        if (w == parent[u]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else {
          int len = dist[u] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

bool has_cycle(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> state(n, 0), parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<int> stack = {s};
    state[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj(u)) {
        if (!state[w]) {
          state[w] = 1;
          parent[w] = u;
          stack.push_back(w);
        } else if (w != parent[u]) {
          return true;  // works on iterative DFS since each tree edge is unique
        }
      }
    }
  }
  return false;
}

bool is_forest(const Graph& g) {
  // independent of has_cycle: count edges per component
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack = {s};
    comp[s] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj(u))
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<int> verts(nc, 0), edges(nc, 0);
  for (int v = 0; v < n; ++v) ++verts[comp[v]];
  for (const auto& e : g.edges()) ++edges[comp[e.first]];
  for (int c = 0; c < nc; ++c)
    if (edges[c] != verts[c] - 1) return false;
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adj(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack = {s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.adj(u))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// ---------------------------------------------------------------- blocks

BlockDecomposition block_decomposition(const Graph& g) {
  // iterative Tarjan with an explicit edge stack; recursion depth on the
  // larger gadgets would be unsafe
  int n = g.vertex_count();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    size_t next_child = 0;
    int tree_children = 0;
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    if (g.degree(s) == 0) {
      disc[s] = timer++;
      out.blocks.push_back({s});
      continue;
    }
    std::vector<Frame> frames;
    frames.push_back({s, -1});
    disc[s] = low[s] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_child < g.adj(f.v).size()) {
        int w = g.adj(f.v)[f.next_child++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          estack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v});
        } else if (disc[w] < disc[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int w = f.v;
        frames.pop_back();
        if (frames.empty()) break;
        Frame& pf = frames.back();
        ++pf.tree_children;
        low[pf.v] = std::min(low[pf.v], low[w]);
        if (low[w] >= disc[pf.v]) {
          // pop the block hanging below the edge (pf.v, w)
          std::vector<int> verts;
          auto push_vertex = [&](int x) {
            if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
          };
          while (!estack.empty()) {
            auto [a, b] = estack.back();
            estack.pop_back();
            push_vertex(a);
            push_vertex(b);
            if (a == pf.v && b == w) break;
          }
          std::sort(verts.begin(), verts.end());
          out.blocks.push_back(std::move(verts));
          if (pf.parent != -1 || pf.tree_children > 1) cut[pf.v] = true;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.cut_vertices.push_back(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph out;
  out.to_host = vertices;
  std::sort(out.to_host.begin(), out.to_host.end());
  out.to_host.erase(std::unique(out.to_host.begin(), out.to_host.end()), out.to_host.end());
  out.from_host.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < out.to_host.size(); ++i) {
    int v = out.to_host[i];
    if (v < 0 || v >= g.vertex_count()) throw Error("induced_subgraph: vertex out of range");
    out.from_host[v] = static_cast<int>(i);
  }
  out.graph = Graph(static_cast<int>(out.to_host.size()));
  for (size_t i = 0; i < out.to_host.size(); ++i)
    for (int w : g.adj(out.to_host[i])) {
      int j = out.from_host[w];
      if (j > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), j);
    }
  return out;
}

// ---------------------------------------------------------------- scans

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  // orient edges along a degeneracy-style order (by degree, then index) so
  // out-degrees stay small, then check pairs of out-neighbours
  int n = g.vertex_count();
  std::vector<int> rank(n);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  });
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : g.edges()) {
    if (rank[u] < rank[v])
      out[u].push_back(v);
    else
      out[v].push_back(u);
  }
  for (int v = 0; v < n; ++v)
    for (size_t i = 0; i < out[v].size(); ++i)
      for (size_t j = i + 1; j < out[v].size(); ++j)
        if (g.has_edge(out[v][i], out[v][j]))
          return std::array<int, 3>{v, out[v][i], out[v][j]};
  return std::nullopt;
}

namespace {
bool clique_extend(const Graph& g, std::vector<int>& clique, int from, int need) {
  if (need == 0) return true;
  for (int v = from; v < g.vertex_count(); ++v) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    clique.push_back(v);
    if (clique_extend(g, clique, v + 1, need - 1)) return true;
    clique.pop_back();
  }
  return false;
}
}  // namespace

bool contains_clique(const Graph& g, int p) {
  if (p <= 0) return true;
  if (p == 1) return g.vertex_count() > 0;
  if (p == 2) return g.edge_count() > 0;
  std::vector<int> clique;
  return clique_extend(g, clique, 0, p);
}

namespace {
bool kst_extend(const Graph& g, std::vector<int>& side, int from, int need, int t,
                std::vector<int>& common) {
  if (need == 0) return static_cast<int>(common.size()) >= t;
  if (static_cast<int>(common.size()) < t) return false;
  for (int v = from; v < g.vertex_count(); ++v) {
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), g.adj(v).begin(), g.adj(v).end(),
                          std::back_inserter(next));
    // v may itself sit in `common`; it cannot be on both sides
    next.erase(std::remove(next.begin(), next.end(), v), next.end());
    if (static_cast<int>(next.size()) < t) continue;
    side.push_back(v);
    if (kst_extend(g, side, v + 1, need - 1, t, next)) return true;
    side.pop_back();
  }
  return false;
}
}  // namespace

bool contains_kst(const Graph& g, int s, int t) {
  if (s > t) std::swap(s, t);
  if (s <= 0) return true;
  int n = g.vertex_count();
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  std::vector<int> side;
  // the s-side must avoid the common neighbourhood; handled inside kst_extend
  return kst_extend(g, side, 0, s, t, all);
}

Graph subdivide(const Graph& g) {
  auto es = g.sorted_edges();
  Graph out(g.vertex_count() + static_cast<int>(es.size()));
  for (size_t i = 0; i < es.size(); ++i) {
    int mid = g.vertex_count() + static_cast<int>(i);
    out.add_edge(es[i].first, mid);
    out.add_edge(mid, es[i].second);
  }
  return out;
}

}  // namespace gct
