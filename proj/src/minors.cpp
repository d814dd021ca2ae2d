#include "gct/minors.hpp"

#include <algorithm>
#include <queue>

namespace gct {

ModelCheck verify_model(const Graph& g, const MinorModel& m) {
  int n = g.vertex_count();
  ModelCheck check;
  std::vector<int> owner(n, -1);
  int covered = 0;
  for (int i = 0; i < static_cast<int>(m.branch_sets.size()); ++i) {
    const auto& set = m.branch_sets[i];
    if (set.empty()) {
      check.valid = false;
      check.offending_set = i;
      check.problem = "branch set is empty";
      return check;
    }
    for (int v : set) {
      if (v < 0 || v >= n) {
        check.valid = false;
        check.offending_set = i;
        check.problem = "branch set vertex out of range";
        return check;
      }
      if (owner[v] != -1) {
        check.valid = false;
        check.offending_set = i;
        check.problem = "branch sets overlap at vertex " + std::to_string(v);
        return check;
      }
      owner[v] = i;
      ++covered;
    }
  }
  for (int i = 0; i < static_cast<int>(m.branch_sets.size()); ++i) {
    const auto& set = m.branch_sets[i];
    // connectivity within the set
    std::vector<int> stack = {set[0]};
    std::vector<bool> seen(n, false);
    seen[set[0]] = true;
    int cnt = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj(u))
        if (owner[w] == i && !seen[w]) {
          seen[w] = true;
          ++cnt;
          stack.push_back(w);
        }
    }
    if (cnt != static_cast<int>(set.size())) {
      check.valid = false;
      check.offending_set = i;
      check.problem = "branch set is not connected";
      return check;
    }
  }
  check.covers_all = (covered == n);
  return check;
}

Graph contract_model(const Graph& g, const MinorModel& m) {
  auto check = verify_model(g, m);
  if (!check.valid)
    throw HypothesisError("invalid minor model, set " + std::to_string(check.offending_set) +
                          ": " + check.problem);
  int t = static_cast<int>(m.branch_sets.size());
  std::vector<int> owner(g.vertex_count(), -1);
  for (int i = 0; i < t; ++i)
    for (int v : m.branch_sets[i]) owner[v] = i;
  std::vector<std::pair<int, int>> quotient_edges;
  for (auto [u, v] : g.edges()) {
    int a = owner[u], b = owner[v];
    if (a == -1 || b == -1 || a == b) continue;
    quotient_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(quotient_edges.begin(), quotient_edges.end());
  quotient_edges.erase(std::unique(quotient_edges.begin(), quotient_edges.end()),
                       quotient_edges.end());
  return Graph::from_edges(t, quotient_edges);
}

MinorModel mader_extract(const Graph& g, int k) {
  if (k < 1) throw HypothesisError("extraction needs k >= 1");
  int n = g.vertex_count();
  if (n == 0) throw HypothesisError("extraction needs a nonempty graph");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2)
      throw HypothesisError("minimum degree below 2 at vertex " + std::to_string(v));
  for (auto [u, v] : g.edges())
    if (g.degree(u) == 2 && g.degree(v) == 2)
      throw HypothesisError("adjacent degree-2 vertices " + std::to_string(u) + "," +
                            std::to_string(v));
  auto gi = girth(g);
  if (gi && *gi < 8 * k + 3)
    throw HypothesisError("girth " + std::to_string(*gi) + " below required " +
                          std::to_string(8 * k + 3));

  // greedy centres, pairwise distance >= 2k+1, smallest indices first
  std::vector<int> dist_to_x(n, -1);
  std::vector<int> centres;
  auto relax_from = [&](int src) {
    std::queue<int> q;
    dist_to_x[src] = 0;
    q.push(src);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.adj(u))
        if (dist_to_x[w] == -1 || dist_to_x[w] > dist_to_x[u] + 1) {
          dist_to_x[w] = dist_to_x[u] + 1;
          q.push(w);
        }
    }
  };
  for (int v = 0; v < n; ++v)
    if (dist_to_x[v] == -1 || dist_to_x[v] >= 2 * k + 1) {
      centres.push_back(v);
      relax_from(v);
    }
  if (static_cast<int>(centres.size()) < 2)
    throw Error("centre selection yielded fewer than two centres");

  // disjoint balls of radius k around the centres
  std::vector<int> owner(n, -1), depth(n, -1);
  for (int i = 0; i < static_cast<int>(centres.size()); ++i) {
    std::queue<int> q;
    owner[centres[i]] = i;
    depth[centres[i]] = 0;
    q.push(centres[i]);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (depth[u] == k) continue;
      for (int w : g.adj(u)) {
        if (owner[w] == -1) {
          owner[w] = i;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (owner[w] != i && depth[w] + depth[u] + 1 <= 2 * k) {
          throw Error("radius-k balls around centres intersect");
        }
      }
    }
  }

  // attach the remaining layers, nearest centre sets first
  for (int layer = k + 1; layer <= 2 * k; ++layer) {
    std::vector<std::pair<int, int>> claims;  // (set index, vertex)
    for (int v = 0; v < n; ++v) {
      if (owner[v] != -1 || dist_to_x[v] != layer) continue;
      int best = -1;
      for (int w : g.adj(v))
        if (dist_to_x[w] == layer - 1 && owner[w] != -1)
          if (best == -1 || owner[w] < best) best = owner[w];
      if (best == -1) throw Error("layered attachment found no grown neighbour");
      claims.emplace_back(best, v);
    }
    for (auto [set, v] : claims) owner[v] = set;
  }
  for (int v = 0; v < n; ++v)
    if (owner[v] == -1) throw Error("vertex " + std::to_string(v) + " left uncovered");

  MinorModel model;
  model.branch_sets.resize(centres.size());
  for (int v = 0; v < n; ++v) model.branch_sets[owner[v]].push_back(v);
  for (auto& set : model.branch_sets) std::sort(set.begin(), set.end());
  return model;
}

}  // namespace gct
