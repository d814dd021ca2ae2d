#include "gct/parameters.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>

namespace gct {

namespace {

void check_permutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw HypothesisError("ordering witness has wrong length");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v])
      throw HypothesisError("ordering witness is not a permutation");
    seen[v] = true;
  }
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> a(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    a[u] |= 1u << v;
    a[v] |= 1u << u;
  }
  return a;
}

constexpr int kMaskLimit = 20;  // hard cap for the 2^n dynamic programmes

}  // namespace

// ---------------------------------------------------------------- witnesses

int RootedForestWitness::depth() const {
  int d = 0;
  for (int x : depths()) d = std::max(d, x);
  return d;
}

std::vector<int> RootedForestWitness::depths() const {
  int n = static_cast<int>(parent.size());
  std::vector<int> d(n, 0);
  for (int v = 0; v < n; ++v) {
    if (d[v]) continue;
    // walk up to a known depth, then unwind
    std::vector<int> chain;
    int u = v;
    while (u != -1 && d[u] == 0) {
      chain.push_back(u);
      u = parent[u];
      if (static_cast<int>(chain.size()) > n)
        throw HypothesisError("parent pointers contain a cycle");
    }
    int base = (u == -1) ? 0 : d[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) d[*it] = ++base;
  }
  return d;
}

bool verify_treedepth_witness(const Graph& g, const RootedForestWitness& w) {
  int n = g.vertex_count();
  if (static_cast<int>(w.parent.size()) != n) return false;
  for (int v = 0; v < n; ++v)
    if (w.parent[v] < -1 || w.parent[v] >= n || w.parent[v] == v) return false;
  std::vector<int> depth;
  try {
    depth = w.depths();
  } catch (const HypothesisError&) {
    return false;
  }
  auto is_ancestor = [&](int a, int v) {
    while (v != -1 && depth[v] >= depth[a]) {
      if (v == a) return true;
      v = w.parent[v];
    }
    return false;
  };
  for (auto [u, v] : g.edges()) {
    int hi = depth[u] <= depth[v] ? u : v;
    int lo = hi == u ? v : u;
    if (!is_ancestor(hi, lo)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- reachability

VertexSet r_reachable_set(const Graph& g, const std::vector<int>& order, int r, int v) {
  int n = g.vertex_count();
  check_permutation(order, n);
  if (r < 0) throw HypothesisError("radius must be nonnegative");
  if (v < 0 || v >= n) throw HypothesisError("vertex out of range");
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<bool> in_result(n, false), seen_right(n, false);
  VertexSet result = {v};
  in_result[v] = true;
  std::vector<int> frontier = {v};
  for (int step = 1; step <= r && !frontier.empty(); ++step) {
    std::vector<int> next;
    for (int u : frontier)
      for (int w : g.adj(u)) {
        if (pos[w] < pos[v]) {
          if (!in_result[w]) {
            in_result[w] = true;
            result.push_back(w);
          }
        } else if (pos[w] > pos[v] && !seen_right[w]) {
          // strictly-right vertices may serve as path interior
          seen_right[w] = true;
          next.push_back(w);
        }
      }
    frontier.swap(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

int reach_bound(const Graph& g, const std::vector<int>& order, int r) {
  int bound = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    bound = std::max(bound, static_cast<int>(r_reachable_set(g, order, r, v).size()));
  return bound;
}

// ----------------------------------------------------- strong colouring numbers

OrderingWitness strong_colouring_number_exact(const Graph& g, int r, const ExactLimits& limits) {
  int n = g.vertex_count();
  if (r < 1) throw HypothesisError("radius must be >= 1");
  if (n > limits.order_dp_max)
    throw SizeError("strong_colouring_number_exact: " + std::to_string(n) +
                    " vertices exceeds the exhaustive threshold " +
                    std::to_string(limits.order_dp_max));
  if (n > kMaskLimit)
    throw SizeError("strong_colouring_number_exact: beyond the hard subset limit");
  if (n == 0) return {{}, r, 0};

  auto adj = adjacency_masks(g);
  const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;

  // reach count of v when exactly the set S sits strictly to its right
  auto cost = [&](int v, std::uint32_t S) {
    std::uint32_t res = 1u << v, frontier = 1u << v, vis = 0;
    for (int step = 1; step <= r && frontier; ++step) {
      std::uint32_t nb = 0;
      for (std::uint32_t f = frontier; f;) {
        int u = std::countr_zero(f);
        f &= f - 1;
        nb |= adj[u];
      }
      res |= nb & ~S;  // endpoints at or left of v
      std::uint32_t nf = nb & S & ~vis;
      vis |= nf;
      frontier = nf;
    }
    return std::popcount(res);
  };

  // F[S] = best achievable max-cost for the vertices placed before suffix S
  std::vector<std::int8_t> F(std::size_t(1) << n, 0), choice(std::size_t(1) << n, -1);
  F[full] = 0;
  for (std::uint32_t S = full; S-- > 0;) {
    int best = 127, bestv = -1;
    for (std::uint32_t rem = full & ~S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      int c = std::max(cost(v, S), static_cast<int>(F[S | (1u << v)]));
      if (c < best) {
        best = c;
        bestv = v;
      }
    }
    F[S] = static_cast<std::int8_t>(best);
    choice[S] = static_cast<std::int8_t>(bestv);
  }

  std::vector<int> right_to_left;
  std::uint32_t S = 0;
  while (S != full) {
    int v = choice[S];
    right_to_left.push_back(v);
    S |= 1u << v;
  }
  OrderingWitness w;
  w.order.assign(right_to_left.rbegin(), right_to_left.rend());
  w.radius = r;
  w.bound = reach_bound(g, w.order, r);
  if (w.bound != F[0]) throw Error("ordering DP disagrees with its own witness");
  return w;
}

OrderingWitness strong_colouring_number_greedy(const Graph& g, int r) {
  if (r < 1) throw HypothesisError("radius must be >= 1");
  auto [d, elim] = degeneracy(g);
  (void)d;
  OrderingWitness w;
  w.order.assign(elim.rbegin(), elim.rend());
  w.radius = r;
  w.bound = reach_bound(g, w.order, r);
  return w;
}

// ---------------------------------------------------------------- degeneracy

std::pair<int, std::vector<int>> degeneracy(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n), order;
  std::set<std::pair<int, int>> pq;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    pq.insert({deg[v], v});
  }
  std::vector<bool> removed(n, false);
  int value = 0;
  while (!pq.empty()) {
    auto [d, v] = *pq.begin();
    pq.erase(pq.begin());
    value = std::max(value, d);
    removed[v] = true;
    order.push_back(v);
    for (int w : g.adj(v))
      if (!removed[w]) {
        pq.erase({deg[w], w});
        --deg[w];
        pq.insert({deg[w], w});
      }
  }
  return {value, order};
}

// ---------------------------------------------------------------- treewidth

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, const ExactLimits& limits) {
  int n = g.vertex_count();
  if (n > limits.subset_dp_max)
    throw SizeError("treewidth_exact: " + std::to_string(n) + " vertices exceeds threshold " +
                    std::to_string(limits.subset_dp_max));
  if (n > kMaskLimit) throw SizeError("treewidth_exact: beyond the hard subset limit");
  if (n == 0) return {-1, {}};

  auto adj = adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1;

  // vertices outside S|{v} reachable from v through S
  auto q = [&](std::uint32_t S, int v) {
    std::uint32_t reach = adj[v], done = 0;
    for (;;) {
      std::uint32_t inside = reach & S & ~done;
      if (!inside) break;
      int u = std::countr_zero(inside);
      done |= 1u << u;
      reach |= adj[u];
    }
    return std::popcount(reach & ~S & ~(1u << v));
  };

  std::vector<std::int8_t> f(std::size_t(1) << n, 0), choice(std::size_t(1) << n, -1);
  f[0] = -1;
  for (std::uint32_t S = 1; S <= full; ++S) {
    int best = 127, bestv = -1;
    for (std::uint32_t rem = S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      std::uint32_t Sv = S & ~(1u << v);
      int c = std::max(static_cast<int>(f[Sv]), q(Sv, v));
      if (c < best) {
        best = c;
        bestv = v;
      }
    }
    f[S] = static_cast<std::int8_t>(best);
    choice[S] = static_cast<std::int8_t>(bestv);
  }
  int tw = f[full];

  // recover an optimal elimination order (choice[S] is eliminated last in S)
  std::vector<int> elim(n);
  std::uint32_t S = full;
  for (int i = n - 1; i >= 0; --i) {
    elim[i] = choice[S];
    S &= ~(1u << elim[i]);
  }

  // build the decomposition from the fill-in of that order: bag i holds
  // elim[i] plus its not-yet-eliminated fill neighbours, and hangs off the
  // bag of the earliest-eliminated vertex among those neighbours
  std::vector<int> when(n);
  for (int i = 0; i < n; ++i) when[elim[i]] = i;
  auto work = adj;
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> parent_bag(n, -1);
  std::uint32_t eliminated = 0;
  for (int i = 0; i < n; ++i) {
    int v = elim[i];
    std::uint32_t later = work[v] & ~eliminated & ~(1u << v);
    td.bags[i].push_back(v);
    int parent = -1;
    for (std::uint32_t l = later; l;) {
      int u = std::countr_zero(l);
      l &= l - 1;
      td.bags[i].push_back(u);
      work[u] |= later & ~(1u << u);
      if (parent == -1 || when[u] < when[parent]) parent = u;
    }
    std::sort(td.bags[i].begin(), td.bags[i].end());
    eliminated |= 1u << v;
    if (parent != -1) parent_bag[i] = when[parent];
  }
  int prev_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent_bag[i] != -1) {
      td.tree_edges.emplace_back(i, parent_bag[i]);
    } else {
      if (prev_root != -1) td.tree_edges.emplace_back(i, prev_root);
      prev_root = i;
    }
  }
  if (td.width() != tw) throw Error("treewidth DP disagrees with its decomposition");
  return {tw, td};
}

std::pair<int, PathDecomposition> pathwidth_exact(const Graph& g, const ExactLimits& limits) {
  int n = g.vertex_count();
  if (n > limits.subset_dp_max)
    throw SizeError("pathwidth_exact: " + std::to_string(n) + " vertices exceeds threshold " +
                    std::to_string(limits.subset_dp_max));
  if (n > kMaskLimit) throw SizeError("pathwidth_exact: beyond the hard subset limit");
  if (n == 0) return {-1, {}};

  auto adj = adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  auto boundary = [&](std::uint32_t S) {
    std::uint32_t b = 0;
    for (std::uint32_t rem = S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      if (adj[v] & ~S) b |= 1u << v;
    }
    return b;
  };

  std::vector<std::int8_t> f(std::size_t(1) << n, 0), choice(std::size_t(1) << n, -1);
  f[0] = 0;
  for (std::uint32_t S = 1; S <= full; ++S) {
    int bS = std::popcount(boundary(S));
    int best = 127, bestv = -1;
    for (std::uint32_t rem = S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      int c = std::max(static_cast<int>(f[S & ~(1u << v)]), bS);
      if (c < best) {
        best = c;
        bestv = v;
      }
    }
    f[S] = static_cast<std::int8_t>(best);
    choice[S] = static_cast<std::int8_t>(bestv);
  }
  int pw = f[full];

  std::vector<int> order(n);
  std::uint32_t S = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = choice[S];
    S &= ~(1u << order[i]);
  }
  PathDecomposition pd;
  std::uint32_t prefix = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag;
    for (std::uint32_t b = boundary(prefix); b;) {
      int u = std::countr_zero(b);
      b &= b - 1;
      bag.push_back(u);
    }
    bag.push_back(order[i]);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(std::move(bag));
    prefix |= 1u << order[i];
  }
  if (pd.width() != pw) throw Error("pathwidth DP disagrees with its decomposition");
  return {pw, pd};
}

// ---------------------------------------------------------------- treedepth

namespace {

struct TdSolver {
  int n;
  std::vector<std::uint32_t> adj;
  std::vector<std::int8_t> memo, choice;

  std::uint32_t component_of(std::uint32_t mask, int seed) {
    std::uint32_t comp = 1u << seed, frontier = comp;
    while (frontier) {
      std::uint32_t nb = 0;
      for (std::uint32_t f = frontier; f;) {
        int u = std::countr_zero(f);
        f &= f - 1;
        nb |= adj[u];
      }
      frontier = nb & mask & ~comp;
      comp |= frontier;
    }
    return comp;
  }

  int solve(std::uint32_t mask) {
    if (!mask) return 0;
    if (memo[mask] >= 0) return memo[mask];
    int result;
    std::uint32_t first = component_of(mask, std::countr_zero(mask));
    if (first != mask) {
      result = std::max(solve(first), solve(mask & ~first));
    } else if (std::popcount(mask) == 1) {
      result = 1;
    } else {
      result = n + 1;
      int best = -1;
      for (std::uint32_t rem = mask; rem;) {
        int v = std::countr_zero(rem);
        rem &= rem - 1;
        int r = 1 + solve(mask & ~(1u << v));
        if (r < result) {
          result = r;
          best = v;
        }
      }
      choice[mask] = static_cast<std::int8_t>(best);
    }
    memo[mask] = static_cast<std::int8_t>(result);
    return result;
  }

  void build(std::uint32_t mask, int parent, std::vector<int>& par) {
    while (mask) {
      std::uint32_t c = component_of(mask, std::countr_zero(mask));
      mask &= ~c;
      if (std::popcount(c) == 1) {
        par[std::countr_zero(c)] = parent;
        continue;
      }
      int v = choice[c];
      par[v] = parent;
      build(c & ~(1u << v), v, par);
    }
  }
};

}  // namespace

std::pair<int, RootedForestWitness> treedepth_exact(const Graph& g, const ExactLimits& limits) {
  int n = g.vertex_count();
  if (n > limits.subset_dp_max)
    throw SizeError("treedepth_exact: " + std::to_string(n) + " vertices exceeds threshold " +
                    std::to_string(limits.subset_dp_max));
  if (n > kMaskLimit) throw SizeError("treedepth_exact: beyond the hard subset limit");
  RootedForestWitness w;
  if (n == 0) return {0, w};
  TdSolver solver{n, adjacency_masks(g),
                  std::vector<std::int8_t>(std::size_t(1) << n, -1),
                  std::vector<std::int8_t>(std::size_t(1) << n, -1)};
  const std::uint32_t full = (1u << n) - 1;
  int td = solver.solve(full);
  w.parent.assign(n, -1);
  solver.build(full, -1, w.parent);
  if (!verify_treedepth_witness(g, w) || w.depth() != td)
    throw Error("treedepth recursion disagrees with its witness");
  return {td, w};
}

// ---------------------------------------------------------------- verifiers

bool verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  int n = g.vertex_count();
  int b = static_cast<int>(td.bags.size());
  for (auto [x, y] : td.tree_edges)
    if (x < 0 || y < 0 || x >= b || y >= b || x == y) return false;
  if (b > 0 && static_cast<int>(td.tree_edges.size()) != b - 1) return false;
  // the bag graph must be one tree
  std::vector<std::vector<int>> badj(b);
  for (auto [x, y] : td.tree_edges) {
    badj[x].push_back(y);
    badj[y].push_back(x);
  }
  if (b > 0) {
    std::vector<bool> seen(b, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : badj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++cnt;
          stack.push_back(y);
        }
    }
    if (cnt != b) return false;
  }
  std::vector<std::vector<int>> bags_of(n);
  for (int i = 0; i < b; ++i)
    for (int v : td.bags[i]) {
      if (v < 0 || v >= n) return false;
      bags_of[v].push_back(i);
    }
  for (int v = 0; v < n; ++v)
    if (bags_of[v].empty()) return false;
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : bags_of[u]) {
      if (std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end()) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  // bags containing v must induce a connected subtree
  for (int v = 0; v < n; ++v) {
    std::vector<bool> in_set(b, false), seen(b, false);
    for (int i : bags_of[v]) in_set[i] = true;
    std::vector<int> stack = {bags_of[v][0]};
    seen[bags_of[v][0]] = true;
    int cnt = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : badj[x])
        if (in_set[y] && !seen[y]) {
          seen[y] = true;
          ++cnt;
          stack.push_back(y);
        }
    }
    if (cnt != static_cast<int>(bags_of[v].size())) return false;
  }
  return true;
}

bool verify_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  int n = g.vertex_count();
  int b = static_cast<int>(pd.bags.size());
  std::vector<int> first(n, -1), last(n, -1);
  for (int i = 0; i < b; ++i)
    for (int v : pd.bags[i]) {
      if (v < 0 || v >= n) return false;
      if (first[v] == -1) first[v] = i;
      last[v] = i;
    }
  for (int v = 0; v < n; ++v)
    if (first[v] == -1) return false;
  // occurrences must be contiguous
  for (int i = 0; i < b; ++i)
    for (int v : pd.bags[i])
      if (i < first[v] || i > last[v]) return false;
  std::vector<std::vector<bool>> present(b, std::vector<bool>(n, false));
  for (int i = 0; i < b; ++i)
    for (int v : pd.bags[i]) present[i][v] = true;
  for (int v = 0; v < n; ++v)
    for (int i = first[v]; i <= last[v]; ++i)
      if (!present[i][v]) return false;
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i = 0; i < b && !covered; ++i) covered = present[i][u] && present[i][v];
    if (!covered) return false;
  }
  return true;
}

// ---------------------------------------------------------------- feedback

bool is_feedback_vertex_set(const Graph& g, const VertexSet& s) {
  std::vector<bool> removed(g.vertex_count(), false);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) throw HypothesisError("feedback set vertex out of range");
    removed[v] = true;
  }
  VertexSet rest;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) rest.push_back(v);
  return !has_cycle(induced_subgraph(g, rest).graph);
}

namespace {

struct FvnSolver {
  const Graph& g;
  std::vector<bool> alive;

  int alive_degree(int v) {
    int d = 0;
    for (int w : g.adj(v))
      if (alive[w]) ++d;
    return d;
  }

  // shortest cycle among alive vertices, or empty
  std::vector<int> shortest_cycle() {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> best_cycle;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      if (best == 3) break;
      std::fill(dist.begin(), dist.end(), -1);
      std::fill(parent.begin(), parent.end(), -1);
      std::queue<int> q;
      dist[s] = 0;
      q.push(s);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (best != -1 && 2 * dist[u] >= best) continue;
        for (int w : g.adj(u)) {
          if (!alive[w] || w == parent[u]) continue;
          if (dist[w] == -1) {
            dist[w] = dist[u] + 1;
            parent[w] = u;
            q.push(w);
          } else {
            int len = dist[u] + dist[w] + 1;
            if (best == -1 || len < best) {
              best = len;
              best_cycle.clear();
              for (int x = u; x != -1; x = parent[x]) best_cycle.push_back(x);
              for (int x = w; x != s; x = parent[x]) best_cycle.push_back(x);
            }
          }
        }
      }
    }
    return best_cycle;
  }

  std::optional<VertexSet> solve(int k, VertexSet& removed) {
    auto cyc = shortest_cycle();
    if (cyc.empty()) return removed;
    if (k == 0) return std::nullopt;
    // a minimum feedback set may always be assumed to hit a cycle in a
    // vertex of degree >= 3 (shifting along the cycle preserves it), except
    // on an isolated cycle where any single vertex works
    std::vector<int> candidates;
    for (int v : cyc)
      if (alive_degree(v) >= 3) candidates.push_back(v);
    if (candidates.empty()) candidates = {*std::min_element(cyc.begin(), cyc.end())};
    std::sort(candidates.begin(), candidates.end());
    for (int v : candidates) {
      alive[v] = false;
      removed.push_back(v);
      auto res = solve(k - 1, removed);
      if (res) return res;
      removed.pop_back();
      alive[v] = true;
    }
    return std::nullopt;
  }
};

}  // namespace

std::pair<int, VertexSet> feedback_vertex_number(const Graph& g) {
  FvnSolver solver{g, std::vector<bool>(g.vertex_count(), true)};
  for (int k = 0; k <= g.vertex_count(); ++k) {
    VertexSet removed;
    auto res = solver.solve(k, removed);
    if (res) {
      std::sort(res->begin(), res->end());
      return {k, *res};
    }
  }
  throw Error("feedback search failed");  // unreachable
}

// ---------------------------------------------------------------- circumference

int circumference(const Graph& g) {
  if (!has_cycle(g)) return 2;  // forest convention
  int n = g.vertex_count();
  int best = 0;
  std::vector<bool> visited(n, false);
  int avail = 0;

  std::vector<int> path;
  auto dfs = [&](auto&& self, int s, int u) -> void {
    if (best == n) return;
    if (static_cast<int>(path.size()) + avail <= best) return;  // cannot beat best
    for (int w : g.adj(u)) {
      if (w == s && path.size() >= 3) {
        best = std::max(best, static_cast<int>(path.size()));
      } else if (w > s && !visited[w]) {
        visited[w] = true;
        --avail;
        path.push_back(w);
        self(self, s, w);
        path.pop_back();
        ++avail;
        visited[w] = false;
      }
    }
  };

  for (int s = 0; s < n && best < n; ++s) {
    if (g.degree(s) < 2) continue;
    avail = n - s - 1;  // vertices > s, none visited yet
    std::fill(visited.begin(), visited.end(), false);
    visited[s] = true;
    path = {s};
    dfs(dfs, s, s);
  }
  return best;
}

// ---------------------------------------------------------------- hadwiger

namespace {

struct HadSearch {
  int n;
  std::vector<std::uint32_t> adj;
  std::uint32_t full;
  int best = 0;
  std::vector<std::uint32_t> best_sets;
  std::vector<std::uint32_t> sets;      // branch sets so far
  std::vector<std::uint32_t> set_nb;    // their neighbourhood masks

  std::uint32_t mask_ge(int v) const { return full & ~((v >= 32) ? ~0u : ((1u << v) - 1)); }

  void record() {
    if (static_cast<int>(sets.size()) > best) {
      best = static_cast<int>(sets.size());
      best_sets = sets;
    }
  }

  // grow candidate branch sets containing seed, each connected subset once
  void grow(std::uint32_t B, std::uint32_t nb, std::uint32_t ext, std::uint32_t banned,
            std::uint32_t used, int seed, std::uint32_t allowed) {
    int t = static_cast<int>(sets.size());
    if (t + 1 + std::popcount(mask_ge(seed + 1) & ~used & ~B) <= best) return;
    bool adjacent_to_all = true;
    for (std::uint32_t s : sets)
      if (!(nb & s)) {
        adjacent_to_all = false;
        break;
      }
    if (adjacent_to_all) {
      sets.push_back(B);
      set_nb.push_back(nb);
      extend(used | B, seed + 1);
      sets.pop_back();
      set_nb.pop_back();
    }
    std::uint32_t local_banned = banned;
    while (ext) {
      int u = std::countr_zero(ext);
      ext &= ext - 1;
      std::uint32_t new_ext = ext | (adj[u] & allowed & ~B & ~local_banned & ~ext);
      grow(B | (1u << u), nb | adj[u], new_ext & ~(1u << u), local_banned, used, seed, allowed);
      local_banned |= 1u << u;
    }
  }

  void extend(std::uint32_t used, int min_seed) {
    record();
    int t = static_cast<int>(sets.size());
    for (int v = min_seed; v < n; ++v) {
      if (!((~used >> v) & 1)) continue;
      if (t + std::popcount(mask_ge(v) & ~used) <= best) break;
      std::uint32_t allowed = mask_ge(v) & ~used;
      grow(1u << v, adj[v], adj[v] & allowed, 0, used, v, allowed);
    }
  }
};

}  // namespace

std::pair<int, MinorModel> hadwiger_number(const Graph& g, const ExactLimits& limits) {
  int n = g.vertex_count();
  if (n > limits.hadwiger_max)
    throw SizeError("hadwiger_number: " + std::to_string(n) + " vertices exceeds threshold " +
                    std::to_string(limits.hadwiger_max));
  if (n > kMaskLimit) throw SizeError("hadwiger_number: beyond the hard subset limit");
  MinorModel model;
  if (n == 0) return {0, model};
  HadSearch search{n, adjacency_masks(g), (1u << n) - 1, 0, {}, {}, {}};
  search.extend(0, 0);
  for (std::uint32_t s : search.best_sets) {
    std::vector<int> verts;
    for (std::uint32_t rem = s; rem;) {
      verts.push_back(std::countr_zero(rem));
      rem &= rem - 1;
    }
    model.branch_sets.push_back(std::move(verts));
  }
  return {search.best, model};
}

}  // namespace gct
