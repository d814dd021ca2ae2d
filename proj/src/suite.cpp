#include "gct/suite.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "gct/colouring.hpp"
#include "gct/constructions.hpp"
#include "gct/families.hpp"
#include "gct/minors.hpp"
#include "gct/oracle.hpp"
#include "gct/parameters.hpp"

namespace gct::suite {

namespace {

struct Failure {
  std::string msg;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure{msg};
}

// Pinned seeds: the corpora are part of the contract, not fresh randomness.
constexpr std::uint64_t kGirth5Seed = 0x5eed0005;
constexpr std::uint64_t kSmallSeed = 0x5eed0011;
constexpr std::uint64_t kTreeSeed = 0x5eed0008;

// 200 graphs of girth >= 5 on <= 30 vertices: subdivided random cubic graphs
// (girth >= 6) and random edge subgraphs of those (girth only grows).
std::vector<Graph> girth5_corpus() {
  SplitMix rng(kGirth5Seed);
  std::vector<Graph> out;
  const int sizes[] = {4, 6, 8, 10, 12};
  while (out.size() < 200) {
    Graph g = subdivide(random_cubic(sizes[rng.below(5)], rng));
    if (out.size() % 2 == 1) g = random_edge_subgraph(g, 60 + rng.below(41), rng);
    out.push_back(std::move(g));
  }
  return out;
}

// 500 graphs on 1..10 vertices with uniform edge density.
std::vector<Graph> small_corpus() {
  SplitMix rng(kSmallSeed);
  std::vector<Graph> out;
  while (out.size() < 500) {
    int n = 1 + rng.below(10);
    out.push_back(random_graph(n, rng.below(101), rng));
  }
  return out;
}

std::string a01_equivalence() {
  std::vector<std::pair<std::string, Graph>> hosts;
  hosts.emplace_back("K2", complete_graph(2));
  hosts.emplace_back("K3", complete_graph(3));
  hosts.emplace_back("P3", path_graph(3));
  hosts.emplace_back("C5", cycle_graph(5));
  int combos = 0;
  for (const auto& [name, h] : hosts) {
    OrderedHost host;
    host.graph = h;
    host.order.resize(h.vertex_count());
    for (int i = 0; i < h.vertex_count(); ++i) host.order[i] = i;
    int chi = chromatic_number(h);
    for (int d = 1; d <= 2; ++d) {
      long long size = 0, level = 1;
      for (int i = 0; i < h.vertex_count(); ++i) {
        size += level;
        level *= d;
      }
      if (size > 400) continue;  // amplified graph too large for this criterion
      for (int k = 1; k <= 3; ++k) {
        std::string where = name + " d=" + std::to_string(d) + " k=" + std::to_string(k);
        auto rep = verify_equivalence(host, d, k);
        require(rep.consistent(), where + ": the four colourability routes disagree");
        require(rep.host_route == (chi <= k),
                where + ": host route disagrees with the chromatic number");
        ++combos;
      }
    }
  }
  return std::to_string(combos) + " host/d/k combinations, all four routes agree";
}

std::string a02_fvn1_gadget() {
  for (int d = 0; d <= 1; ++d) {
    std::string where = "d=" + std::to_string(d);
    auto gad = fvn1_gadget(d);
    const Graph& g = gad.graph;
    require(!find_triangle(g).has_value(), where + ": gadget contains a triangle");
    int alpha = gad.meta.named_vertices.at("alpha");
    require(has_cycle(g), where + ": gadget is acyclic");
    require(is_feedback_vertex_set(g, {alpha}),
            where + ": the apex is not a feedback vertex");
    auto res = is_colourable(g, {2, ColourMode::Defect, d});
    require(!res.colourable,
            where + ": unexpectedly 2-colourable with defect " + std::to_string(d));
  }
  return "d=0 (5 vertices) and d=1 (13 vertices): triangle-free, feedback vertex "
         "number 1, not 2-colourable with defect d";
}

std::string a03_fvn7_gadget() {
  auto gad = fvn7_gadget(1);
  const Graph& g = gad.graph;
  require(g.vertex_count() == 357,
          "expected 357 vertices, got " + std::to_string(g.vertex_count()));
  auto gi = girth(g);
  require(gi.has_value() && *gi == 6, "girth is not 6");
  VertexSet hubs = gad.meta.named_sets.at("hubs");
  require(hubs.size() == 7, "expected 7 hub vertices");
  require(is_feedback_vertex_set(g, hubs), "the hubs are not a feedback vertex set");
  std::vector<char> is_hub(g.vertex_count(), 0);
  for (int v : hubs) is_hub[v] = 1;
  VertexSet rest;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!is_hub[v]) rest.push_back(v);
  auto sub = induced_subgraph(g, rest);
  require(is_forest(sub.graph), "removing the hubs leaves a cycle");
  require(sub.graph.max_degree() <= 2,
          "removing the hubs leaves a vertex of degree > 2");
  require(!is_colourable(g, {2, ColourMode::Proper, 0}).colourable,
          "gadget is unexpectedly bipartite");
  return "girth 6, 7 hubs meet every cycle, complement is a union of paths, "
         "not properly 2-colourable";
}

std::string a04_independent_set_tree() {
  GeneratorLimits lim;
  lim.vertex_cap = 100000;
  auto gad = independent_set_tree(3, 6, lim);
  const Graph& g = gad.graph;
  require(!find_triangle(g).has_value(), "tree contains a triangle");
  require(!bipartition(g).has_value(), "tree is bipartite, expected an odd cycle");
  require(gad.forest.has_value(), "construction lost its layer forest");
  require(verify_treedepth_witness(g, *gad.forest), "layer forest is not a valid witness");
  int depth = gad.forest->depth();
  require(depth <= 6, "witness depth " + std::to_string(depth) + " > 6");
  return std::to_string(g.vertex_count()) + " vertices under cap 100000, " +
         "triangle-free, odd cycle present, witness depth " + std::to_string(depth);
}

std::string a05_defective_bound() {
  auto corpus = girth5_corpus();
  long long worst_defect = 0, worst_limit = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    std::string where = "graph " + std::to_string(i);
    auto gi = girth(g);
    require(!gi.has_value() || *gi >= 5, where + ": girth below 5");
    auto w = strong_colouring_number_greedy(g, 2);
    auto rep = defective_colour_via_col2(g, 2, 2, w);
    long long limit = sat_add(w.bound, sat_binom(w.bound, 1));
    require(rep.defect <= limit, where + ": defect " + std::to_string(rep.defect) +
                                     " exceeds " + std::to_string(limit));
    worst_defect = std::max<long long>(worst_defect, rep.defect);
    worst_limit = std::max(worst_limit, limit);
  }
  return "200 graphs: max recomputed defect " + std::to_string(worst_defect) +
         ", max allowed " + std::to_string(worst_limit);
}

std::string a06_rooted_root_proper() {
  auto corpus = girth5_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    auto w = strong_colouring_number_greedy(g, 2);
    auto rep = defective_colour_rooted(g, 2, 2, w, 0);
    int c0 = rep.colouring.assignment[0];
    for (int u : g.adj(0))
      require(rep.colouring.assignment[u] != c0,
              "graph " + std::to_string(i) +
                  ": designated vertex 0 has a same-coloured neighbour");
  }
  return "200 graphs: designated vertex properly coloured on every instance";
}

std::string a07_fvn_girth7() {
  auto rep14 = two_colour_fvn_girth7(cycle_graph(14), {0});
  require(rep14.clustering <= 2, "C14: clustering " + std::to_string(rep14.clustering) +
                                     " > 2 with a single feedback vertex");
  Graph sh = subdivide(heawood_graph());
  auto [fvn, witness] = feedback_vertex_number(sh);
  long long a = static_cast<long long>(witness.size());
  long long bound = sat_add(sat_binom(a, 2), a + 1);
  auto rep = two_colour_fvn_girth7(sh, witness);
  require(rep.clustering <= bound,
          "subdivided Heawood: clustering " + std::to_string(rep.clustering) +
              " exceeds " + std::to_string(bound));
  return "C14: clustering " + std::to_string(rep14.clustering) +
         " <= 2; subdivided Heawood: feedback vertex number " + std::to_string(fvn) +
         ", clustering " + std::to_string(rep.clustering) + " <= " +
         std::to_string(bound);
}

std::string a08_peeling() {
  SplitMix rng(kTreeSeed);
  int instances = 0;
  auto check2 = [&](const Graph& g, const std::string& what) {
    auto res = two_colour_large_girth(g);
    auto* rep = std::get_if<ColouringReport>(&res);
    require(rep != nullptr, what + ": reduction unexpectedly got stuck");
    require(rep->clustering <= 2,
            what + ": clustering " + std::to_string(rep->clustering) + " > 2");
    ++instances;
  };
  for (int n = 1; n <= 100; ++n) {
    check2(path_graph(n), "path on " + std::to_string(n));
    if (n >= 2) check2(star_graph(n - 1), "star on " + std::to_string(n));
    check2(random_tree(n, rng), "random tree on " + std::to_string(n));
    if (n >= 3) check2(cycle_graph(n), "cycle on " + std::to_string(n));
  }
  auto pet = two_colour_large_girth(petersen_graph());
  auto* stuck = std::get_if<StuckCertificate>(&pet);
  require(stuck != nullptr, "Petersen: expected the reduction to get stuck");
  require(stuck->vertices.size() == 10,
          "Petersen: stuck certificate should contain all 10 vertices");
  return std::to_string(instances) +
         " trees and cycles with clustering <= 2; Petersen yields a stuck certificate";
}

std::string a09_minor_extraction() {
  Graph sh = subdivide(heawood_graph());
  MinorModel model = mader_extract(sh, 1);
  auto chk = verify_model(sh, model);
  require(chk.valid, "model invalid: " + chk.problem);
  require(chk.covers_all, "branch sets do not cover every vertex");
  std::vector<int> owner(sh.vertex_count(), -1);
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i)
    for (int v : model.branch_sets[i]) owner[v] = static_cast<int>(i);
  std::set<std::pair<int, int>> between;
  for (auto [u, v] : sh.edges()) {
    int a = owner[u], b = owner[v];
    if (a == b) continue;
    require(between.insert({std::min(a, b), std::max(a, b)}).second,
            "two branch sets are joined by more than one edge");
  }
  Graph q = contract_model(sh, model);
  require(q.vertex_count() >= 2, "contraction has fewer than two vertices");
  int mindeg = q.degree(0);
  for (int v = 1; v < q.vertex_count(); ++v) mindeg = std::min(mindeg, q.degree(v));
  require(mindeg >= 2,
          "contraction min degree " + std::to_string(mindeg) + " < 2");
  return std::to_string(model.branch_sets.size()) +
         " branch sets cover all 35 vertices; contraction min degree " +
         std::to_string(mindeg);
}

std::string a10_apex_grids() {
  for (int m = 4; m <= 10; ++m) {
    std::string where = "apex grid m=" + std::to_string(m);
    auto gad = apex_grid_girth5(m);
    auto gi = girth(gad.graph);
    require(gi.has_value() && *gi == 5, where + ": girth is not 5");
    long long v = gad.graph.vertex_count(), e = gad.graph.edge_count();
    require(3 * e <= 8 * v, where + ": edge bound 3|E| <= 8|V| fails (" +
                                std::to_string(e) + " edges, " + std::to_string(v) +
                                " vertices)");
  }
  for (int m = 5; m <= 8; ++m) {
    std::string where = "23-apex grid m=" + std::to_string(m);
    auto gad = apex23_grid_girth8(m);
    auto gi = girth(gad.graph);
    require(gi.has_value() && *gi == 8, where + ": girth is not 8");
  }
  return "girth-5 grids m=4..10 within the edge bound; girth-8 grids m=5..8 exact";
}

std::string a11_parameter_chain() {
  auto corpus = small_corpus();
  ExactLimits lim;
  lim.order_dp_max = 10;  // corpus goes one vertex past the library default
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    std::string where = "graph " + std::to_string(i);
    int tw = treewidth_exact(g).first;
    int pw = pathwidth_exact(g).first;
    int td = treedepth_exact(g).first;
    int had = hadwiger_number(g).first;
    int fvn = feedback_vertex_number(g).first;
    int cir = circumference(g);
    int dg = degeneracy(g).first;
    require(had - 1 <= tw, where + ": had-1 > tw");
    require(tw <= pw, where + ": tw > pw");
    require(pw <= td - 1, where + ": pw > td-1");
    require(tw <= fvn + 1, where + ": tw > fvn+1");
    require(tw <= cir - 1, where + ": tw > cir-1");
    for (int r = 1; r <= 3; ++r) {
      int colr = strong_colouring_number_exact(g, r, lim).bound;
      require(colr <= tw + 1,
              where + ": col_" + std::to_string(r) + " > tw+1");
      if (r == 1)
        require(colr == dg + 1, where + ": col_1 != degeneracy+1");
    }
  }
  return "500 graphs: every inequality of the parameter chain holds";
}

std::string a12_oracle_consistency() {
  auto corpus = small_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    std::string where = "graph " + std::to_string(i);
    for (int k = 2; k <= 3; ++k) {
      bool p = is_colourable(g, {k, ColourMode::Proper, 0}).colourable;
      bool d0 = is_colourable(g, {k, ColourMode::Defect, 0}).colourable;
      bool c1 = is_colourable(g, {k, ColourMode::Clustering, 1}).colourable;
      require(p == d0 && d0 == c1,
              where + " k=" + std::to_string(k) +
                  ": proper / defect 0 / clustering 1 disagree");
    }
    int prev_d = -1, prev_c = -1;
    for (int k = 1; k <= 3; ++k) {
      int md = min_defect(g, k);
      int mc = min_clustering(g, k);
      if (k > 1) {
        require(md <= prev_d, where + ": min defect grew from k=" +
                                  std::to_string(k - 1) + " to k=" + std::to_string(k));
        require(mc <= prev_c, where + ": min clustering grew from k=" +
                                  std::to_string(k - 1) + " to k=" + std::to_string(k));
      }
      prev_d = md;
      prev_c = mc;
    }
  }
  return "500 graphs, k in {1,2,3}: modes agree and minima are monotone";
}

std::string a13_proper_copy_extraction() {
  struct Case {
    std::string name;
    Graph host;
    std::vector<int> parent;
  };
  std::vector<Case> cases;
  cases.push_back({"K2", complete_graph(2), {-1, 0}});
  cases.push_back({"P3", path_graph(3), {-1, 0, 1}});
  long long total = 0;
  for (const auto& cs : cases) {
    RootedForestWitness w;
    w.parent = cs.parent;
    for (int d = 1; d <= 2; ++d) {
      std::string where = cs.name + " d=" + std::to_string(d);
      auto amp = treedepth_amplification(cs.host, w, d);
      auto cols = all_colourings(amp.graph, {2, ColourMode::Defect, d});
      require(!cols.empty(), where + ": no colouring satisfies the query");
      for (const auto& c : cols) {
        auto emb = extract_proper_copy(amp, c);
        require(emb.has_value(),
                where + ": extraction failed on a defect-" + std::to_string(d) +
                    " colouring");
        for (int u = 0; u < cs.host.vertex_count(); ++u)
          require(amp.original_of[(*emb)[u]] == u,
                  where + ": embedding maps a host vertex to a copy of another");
        for (auto [u, v] : cs.host.edges()) {
          require(amp.graph.has_edge((*emb)[u], (*emb)[v]),
                  where + ": embedding misses a host edge");
          require(c.assignment[(*emb)[u]] != c.assignment[(*emb)[v]],
                  where + ": embedded copy is not properly coloured");
        }
        ++total;
      }
    }
  }
  return std::to_string(total) +
         " colourings across 4 host/d pairs, every extracted copy proper";
}

void print_line(std::ostream& out, const CriterionResult& r) {
  std::ostringstream tm;
  tm << std::fixed << std::setprecision(2) << r.seconds;
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.label << ": "
      << r.detail << " (" << tm.str() << "s)\n";
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream* progress) {
  struct Item {
    const char* id;
    const char* label;
    std::function<std::string()> body;
  };
  const Item items[] = {
      {"A01", "four colourability routes agree on amplified hosts", a01_equivalence},
      {"A02", "single-feedback-vertex gadget refutes defect d", a02_fvn1_gadget},
      {"A03", "seven-hub gadget: girth, feedback set, non-bipartite", a03_fvn7_gadget},
      {"A04", "independent-set tree forces a third colour", a04_independent_set_tree},
      {"A05", "defective colouring meets its degree bound", a05_defective_bound},
      {"A06", "rooted colouring leaves the root properly coloured", a06_rooted_root_proper},
      {"A07", "feedback-set two-colouring meets its clustering bound", a07_fvn_girth7},
      {"A08", "peeling two-colouring: clustering 2 or stuck certificate", a08_peeling},
      {"A09", "minor extraction on the subdivided Heawood graph", a09_minor_extraction},
      {"A10", "apex grids: girth and edge count", a10_apex_grids},
      {"A11", "exact parameters satisfy the inequality chain", a11_parameter_chain},
      {"A12", "oracle modes agree and minima are monotone", a12_oracle_consistency},
      {"A13", "every admissible colouring yields a proper host copy", a13_proper_copy_extraction},
  };
  std::vector<CriterionResult> results;
  for (const auto& item : items) {
    CriterionResult r;
    r.id = item.id;
    r.label = item.label;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = item.body();
      r.pass = true;
    } catch (const Failure& f) {
      r.pass = false;
      r.detail = f.msg;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("unexpected exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) print_line(*progress, r);
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

void print_table(std::ostream& out, const std::vector<CriterionResult>& results) {
  int passed = 0;
  for (const auto& r : results) {
    print_line(out, r);
    if (r.pass) ++passed;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
}

}  // namespace gct::suite
