#include "gct/oracle.hpp"

#include <algorithm>

namespace gct {

namespace {

struct Searcher {
  const Graph& g;
  int colours;
  ColourMode mode;
  int bound;
  long long budget_max;
  long long nodes = 0;

  std::vector<int> colour;    // 0 = unset
  std::vector<int> mono_deg;  // defect bookkeeping
  std::vector<int> dsu_parent, dsu_size;
  struct Attach {
    int child, parent;
  };
  std::vector<Attach> trail;  // rollback log for the union-find (no compression)
  std::vector<int> roots_scratch;

  Searcher(const Graph& g_, const ColourabilityQuery& q, long long max_nodes)
      : g(g_),
        colours(q.colours),
        mode(q.mode),
        bound(q.bound),
        budget_max(max_nodes),
        colour(g_.vertex_count(), 0),
        mono_deg(g_.vertex_count(), 0),
        dsu_parent(g_.vertex_count()),
        dsu_size(g_.vertex_count(), 1) {
    for (int v = 0; v < g_.vertex_count(); ++v) dsu_parent[v] = v;
  }

  int find(int v) const {
    while (dsu_parent[v] != v) v = dsu_parent[v];
    return v;
  }

  void count_node() {
    if (++nodes > budget_max)
      throw BudgetError("colourability search exceeded " + std::to_string(budget_max) +
                        " nodes");
  }

  bool place(int v, int c) {
    switch (mode) {
      case ColourMode::Proper: {
        for (int w : g.adj(v))
          if (colour[w] == c) return false;
        colour[v] = c;
        return true;
      }
      case ColourMode::Defect: {
        int cnt = 0;
        for (int w : g.adj(v))
          if (colour[w] == c) {
            if (mono_deg[w] + 1 > bound) return false;
            ++cnt;
          }
        if (cnt > bound) return false;
        for (int w : g.adj(v))
          if (colour[w] == c) ++mono_deg[w];
        mono_deg[v] = cnt;
        colour[v] = c;
        return true;
      }
      case ColourMode::Clustering: {
        roots_scratch.clear();
        long long total = 1;
        for (int w : g.adj(v))
          if (colour[w] == c) {
            int r = find(w);
            bool seen = false;
            for (int x : roots_scratch)
              if (x == r) {
                seen = true;
                break;
              }
            if (!seen) {
              roots_scratch.push_back(r);
              total += dsu_size[r];
            }
          }
        if (total > bound) return false;
        colour[v] = c;
        int rv = v;
        for (int r : roots_scratch) {
          if (dsu_size[rv] < dsu_size[r] || (dsu_size[rv] == dsu_size[r] && rv > r))
            std::swap(rv, r);
          dsu_parent[r] = rv;
          dsu_size[rv] += dsu_size[r];
          trail.push_back({r, rv});
        }
        return true;
      }
    }
    return false;
  }

  void unplace(int v, int c, std::size_t trail_mark) {
    switch (mode) {
      case ColourMode::Proper:
        break;
      case ColourMode::Defect:
        for (int w : g.adj(v))
          if (colour[w] == c && w != v) --mono_deg[w];
        mono_deg[v] = 0;
        break;
      case ColourMode::Clustering:
        while (trail.size() > trail_mark) {
          auto [child, parent] = trail.back();
          trail.pop_back();
          dsu_parent[child] = child;
          dsu_size[parent] -= dsu_size[child];
        }
        break;
    }
    colour[v] = 0;
  }

  // canonical colours: a vertex may open at most one colour beyond those used
  bool solve(const std::vector<int>& order, std::size_t i, int used) {
    if (i == order.size()) return true;
    int v = order[i];
    int cmax = std::min(colours, used + 1);
    for (int c = 1; c <= cmax; ++c) {
      count_node();
      std::size_t mark = trail.size();
      if (place(v, c)) {
        if (solve(order, i + 1, std::max(used, c))) return true;
        unplace(v, c, mark);
      }
    }
    return false;
  }

  // full enumeration, no canonicalisation
  void enumerate(int v, std::vector<Colouring>& out) {
    if (v == g.vertex_count()) {
      Colouring c;
      c.colours = colours;
      c.assignment = colour;
      out.push_back(std::move(c));
      return;
    }
    for (int c = 1; c <= colours; ++c) {
      count_node();
      std::size_t mark = trail.size();
      if (place(v, c)) {
        enumerate(v + 1, out);
        unplace(v, c, mark);
      }
    }
  }
};

void validate_query(const ColourabilityQuery& q) {
  if (q.colours < 1) throw HypothesisError("at least one colour is required");
  if (q.bound < 0) throw HypothesisError("defect / clustering bound must be >= 0");
}

std::optional<ColourabilityResult> single_colour_shortcut(const Graph& g,
                                                          const ColourabilityQuery& q) {
  ColourabilityResult res;
  Colouring all_one;
  all_one.colours = q.colours;
  all_one.assignment.assign(g.vertex_count(), 1);
  switch (q.mode) {
    case ColourMode::Proper:
      if (q.colours == 1) {
        res.colourable = (g.edge_count() == 0);
        if (res.colourable) res.witness = all_one;
        return res;
      }
      if (q.colours == 2) {
        auto sides = bipartition(g);
        res.colourable = sides.has_value();
        if (res.colourable) {
          Colouring c;
          c.colours = 2;
          c.assignment.resize(g.vertex_count());
          for (int v = 0; v < g.vertex_count(); ++v) c.assignment[v] = (*sides)[v] + 1;
          res.witness = std::move(c);
        }
        return res;
      }
      return std::nullopt;
    case ColourMode::Defect:
      if (q.colours == 1) {
        res.colourable = (g.max_degree() <= q.bound);
        if (res.colourable) res.witness = all_one;
        return res;
      }
      return std::nullopt;
    case ColourMode::Clustering:
      if (q.colours == 1) {
        res.colourable = true;
        for (const auto& comp : connected_components(g))
          if (static_cast<int>(comp.size()) > q.bound) res.colourable = false;
        if (res.colourable) res.witness = all_one;
        return res;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

ColourabilityResult is_colourable(const Graph& g, const ColourabilityQuery& q,
                                  const OracleBudget& budget) {
  validate_query(q);
  if (auto shortcut = single_colour_shortcut(g, q)) return *shortcut;

  ColourabilityResult res;
  res.colourable = true;
  std::vector<int> assignment(g.vertex_count(), 0);
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    auto [d, elim] = degeneracy(sub.graph);
    (void)d;
    std::vector<int> order(elim.rbegin(), elim.rend());
    Searcher searcher(sub.graph, q, budget.max_nodes - res.nodes);
    bool ok;
    try {
      ok = searcher.solve(order, 0, 0);
    } catch (const BudgetError&) {
      throw BudgetError("colourability search exceeded " +
                        std::to_string(budget.max_nodes) + " nodes");
    }
    res.nodes += searcher.nodes;
    if (!ok) {
      res.colourable = false;
      return res;
    }
    for (int i = 0; i < sub.graph.vertex_count(); ++i)
      assignment[sub.to_host[i]] = searcher.colour[i];
  }
  Colouring c;
  c.colours = q.colours;
  c.assignment = std::move(assignment);
  res.witness = std::move(c);
  return res;
}

std::vector<Colouring> all_colourings(const Graph& g, const ColourabilityQuery& q,
                                      const OracleBudget& budget) {
  validate_query(q);
  Searcher searcher(g, q, budget.max_nodes);
  std::vector<Colouring> out;
  searcher.enumerate(0, out);
  return out;
}

int chromatic_number(const Graph& g, const OracleBudget& budget) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k) {
    if (is_colourable(g, {k, ColourMode::Proper, 0}, budget).colourable) return k;
  }
}

int min_defect(const Graph& g, int colours, const OracleBudget& budget) {
  for (int d = 0;; ++d) {
    if (is_colourable(g, {colours, ColourMode::Defect, d}, budget).colourable) return d;
  }
}

int min_clustering(const Graph& g, int colours, const OracleBudget& budget) {
  if (g.vertex_count() == 0) return 0;
  for (int c = 1;; ++c) {
    if (is_colourable(g, {colours, ColourMode::Clustering, c}, budget).colourable) return c;
  }
}

EquivalenceReport verify_equivalence(const OrderedHost& host, int d, int k,
                                           const OracleBudget& budget,
                                           const GeneratorLimits& limits) {
  if (k < 1) throw HypothesisError("colour count must be >= 1");
  auto gadget = standard_example(host, d, limits);
  EquivalenceReport report;
  report.defect_route =
      is_colourable(gadget.graph, {k, ColourMode::Defect, d - 1}, budget).colourable;
  report.clustering_route =
      is_colourable(gadget.graph, {k, ColourMode::Clustering, d}, budget).colourable;
  report.proper_route =
      is_colourable(gadget.graph, {k, ColourMode::Proper, 0}, budget).colourable;
  report.host_route =
      is_colourable(host.graph, {k, ColourMode::Proper, 0}, budget).colourable;
  return report;
}

}  // namespace gct
