#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gct/colouring.hpp"
#include "gct/constructions.hpp"
#include "gct/families.hpp"
#include "gct/minors.hpp"
#include "gct/oracle.hpp"
#include "gct/parameters.hpp"
#include "gct/suite.hpp"

using nlohmann::json;

namespace {

// exit codes: 0 ok/true, 1 false/negative, 2 usage or format,
// 3 precondition/hypothesis/size, 4 budget exceeded
constexpr int kOk = 0, kFalse = 1, kUsage = 2, kPrecondition = 3, kBudget = 4;

std::string g_command;
std::optional<std::string> g_input_digest;
std::chrono::steady_clock::time_point g_start;

std::string hex64(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << x;
  return out.str();
}

gct::Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gct::FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  g_input_digest = hex64(gct::fnv1a_digest(text));
  return gct::read_graph(text);
}

// Named specs: K<n>, P<n>, C<n>, S<n> (star with n leaves), G<m> (m x m grid),
// petersen, heawood; anything else is read as an edge-list file.
gct::Graph load_graph_or_named(const std::string& spec) {
  if (spec == "petersen") return gct::petersen_graph();
  if (spec == "heawood") return gct::heawood_graph();
  if (spec.size() >= 2 && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(1));
    } catch (...) {
      return load_graph(spec);
    }
    switch (spec[0]) {
      case 'K': return gct::complete_graph(n);
      case 'P': return gct::path_graph(n);
      case 'C': return gct::cycle_graph(n);
      case 'S': return gct::star_graph(n);
      case 'G': return gct::grid_graph(n);
      default: break;
    }
  }
  return load_graph(spec);
}

json run_object() {
  json r;
  r["command"] = g_command;
  if (g_input_digest) r["input_digest"] = *g_input_digest;
  r["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
  return r;
}

void emit_json(json j, const std::string& out_path) {
  j["run"] = run_object();
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw gct::Error("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

json report_to_json(const std::string& algorithm, const gct::ColouringReport& rep) {
  json j;
  j["algorithm"] = algorithm;
  j["outcome"] = "colouring";
  j["colours"] = rep.colouring.colours;
  j["assignment"] = rep.colouring.assignment;
  j["defect"] = rep.defect;
  j["clustering"] = rep.clustering;
  j["proper"] = rep.proper;
  switch (rep.guarantee_kind) {
    case gct::GuaranteeKind::None: j["guarantee_kind"] = "none"; break;
    case gct::GuaranteeKind::Defect: j["guarantee_kind"] = "defect"; break;
    case gct::GuaranteeKind::Clustering: j["guarantee_kind"] = "clustering"; break;
  }
  j["guarantee"] = rep.guarantee;
  j["preconditions_verified"] = rep.preconditions_verified;
  return j;
}

gct::Colouring colouring_from_json(const json& j) {
  const json& body = j.contains("colouring") ? j.at("colouring") : j;
  gct::Colouring c;
  c.colours = body.at("colours").get<int>();
  c.assignment = body.at("assignment").get<std::vector<int>>();
  return c;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gct::FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw gct::FormatError(path + ": " + e.what());
  }
  return j;
}

gct::MinorModel model_from_json(const json& j) {
  gct::MinorModel m;
  m.branch_sets = j.at("branch_sets").get<std::vector<std::vector<int>>>();
  return m;
}

struct GenCommon {
  std::string out;
  int subdivide_rounds = 0;
  long long vertex_cap = 1'000'000;
};

void add_gen_common(CLI::App* cmd, GenCommon& gc) {
  cmd->add_option("-o,--output", gc.out, "output edge-list file (stdout if omitted)");
  cmd->add_option("--subdivide", gc.subdivide_rounds,
                  "subdivide every edge this many times after generating")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--vertex-cap", gc.vertex_cap, "abort above this many vertices");
}

void finish_gen(gct::Graph g, gct::GadgetMeta meta, const GenCommon& gc) {
  for (int i = 0; i < gc.subdivide_rounds; ++i) g = gct::subdivide(g);
  if (gc.subdivide_rounds > 0) meta.params["subdivide"] = gc.subdivide_rounds;
  if (gc.out.empty()) {
    std::cout << gct::write_graph(g);
    return;
  }
  gct::write_graph_file(g, gc.out);
  json m;
  m["name"] = meta.name;
  m["params"] = meta.params;
  m["claims"] = meta.claims;
  m["named_vertices"] = meta.named_vertices;
  m["named_sets"] = meta.named_sets;
  m["vertices"] = g.vertex_count();
  m["edges"] = g.edge_count();
  m["run"] = run_object();
  std::ofstream out(gc.out + ".meta.json");
  if (!out) throw gct::Error("cannot write " + gc.out + ".meta.json");
  out << m.dump(2) << "\n";
}

void add_limit_options(CLI::App* cmd, gct::ExactLimits& lim) {
  cmd->add_option("--order-dp-max", lim.order_dp_max,
                  "size threshold for the exact ordering search");
  cmd->add_option("--subset-dp-max", lim.subset_dp_max,
                  "size threshold for the subset dynamic programmes");
  cmd->add_option("--hadwiger-max", lim.hadwiger_max,
                  "size threshold for the clique-minor search");
}

void write_witness(const std::string& path, json j) {
  if (path.empty()) return;
  j["run"] = run_object();
  std::ofstream out(path);
  if (!out) throw gct::Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace

int run(int argc, char** argv) {
  std::ostringstream cmdline;
  for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];
  g_command = cmdline.str();
  g_start = std::chrono::steady_clock::now();

  CLI::App app{"graph colouring toolkit: defective and clustered colouring, "
               "exact width parameters, gadget generators, minor extraction"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // ---------- gen ----------
  auto* gen = app.add_subcommand("gen", "generate graphs and gadgets");
  gen->require_subcommand(1);
  GenCommon gc;

  {
    auto* c = gen->add_subcommand("fvn1", "single-feedback-vertex gadget");
    static int d = 1;
    c->add_option("--d", d, "defect to refute with two colours")->check(CLI::NonNegativeNumber);
    add_gen_common(c, gc);
    c->callback([&] {
      auto gad = gct::fvn1_gadget(d);
      finish_gen(std::move(gad.graph), std::move(gad.meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("fvn7", "seven-hub girth-6 gadget");
    static int cparam = 1;
    c->add_option("--c", cparam, "clustering to refute with two colours")
        ->check(CLI::PositiveNumber);
    add_gen_common(c, gc);
    c->callback([&] {
      auto gad = gct::fvn7_gadget(cparam);
      finish_gen(std::move(gad.graph), std::move(gad.meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("ist", "independent-set tree");
    static int k = 3, layers = 6;
    c->add_option("--k", k, "forced chromatic number")->check(CLI::PositiveNumber);
    c->add_option("--layers", layers, "number of layers")->check(CLI::PositiveNumber);
    add_gen_common(c, gc);
    c->callback([&] {
      auto gad = gct::independent_set_tree(k, layers, {gc.vertex_cap});
      finish_gen(std::move(gad.graph), std::move(gad.meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("apex-grid5", "girth-5 grid with one apex");
    static int m = 4;
    c->add_option("--m", m, "grid side")->check(CLI::PositiveNumber);
    add_gen_common(c, gc);
    c->callback([&] {
      auto gad = gct::apex_grid_girth5(m, {gc.vertex_cap});
      finish_gen(std::move(gad.graph), std::move(gad.meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("apex-grid8", "girth-8 grid with 23 apexes");
    static int m = 5;
    c->add_option("--m", m, "grid side")->check(CLI::PositiveNumber);
    add_gen_common(c, gc);
    c->callback([&] {
      auto gad = gct::apex23_grid_girth8(m, {gc.vertex_cap});
      finish_gen(std::move(gad.graph), std::move(gad.meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand(
        "std-example", "closure-of-a-tree amplification of an ordered host");
    static std::string host_spec;
    static int d = 1;
    static std::vector<int> order;
    c->add_option("--host", host_spec, "host graph (file or named spec)")->required();
    c->add_option("--d", d, "tree arity")->check(CLI::PositiveNumber);
    c->add_option("--order", order, "host vertex order (default 0,1,...)")->delimiter(',');
    add_gen_common(c, gc);
    c->callback([&] {
      gct::OrderedHost host;
      host.graph = load_graph_or_named(host_spec);
      host.order = order;
      if (host.order.empty()) {
        host.order.resize(host.graph.vertex_count());
        for (int i = 0; i < host.graph.vertex_count(); ++i) host.order[i] = i;
      }
      auto gad = gct::standard_example(host, d, {gc.vertex_cap});
      finish_gen(std::move(gad.graph), std::move(gad.meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("family", "named graph family");
    static std::string name;
    c->add_option("--name", name,
                  "K<n>, P<n>, C<n>, S<n>, G<m>, petersen, heawood, or a file")
        ->required();
    add_gen_common(c, gc);
    c->callback([&] {
      gct::GadgetMeta meta;
      meta.name = name;
      finish_gen(load_graph_or_named(name), std::move(meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("random", "uniform random graph");
    static int n = 10, percent = 50;
    static std::uint64_t seed = 1;
    c->add_option("--n", n, "vertices")->check(CLI::NonNegativeNumber);
    c->add_option("--edge-percent", percent, "edge probability in percent");
    c->add_option("--seed", seed, "generator seed");
    add_gen_common(c, gc);
    c->callback([&] {
      gct::SplitMix rng(seed);
      gct::GadgetMeta meta;
      meta.name = "random";
      meta.params["n"] = n;
      meta.params["edge_percent"] = percent;
      meta.params["seed"] = static_cast<long long>(seed);
      finish_gen(gct::random_graph(n, percent, rng), std::move(meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("cubic", "random cubic graph (pairing model)");
    static int n = 10;
    static std::uint64_t seed = 1;
    c->add_option("--n", n, "vertices (even, >= 4)");
    c->add_option("--seed", seed, "generator seed");
    add_gen_common(c, gc);
    c->callback([&] {
      gct::SplitMix rng(seed);
      gct::GadgetMeta meta;
      meta.name = "cubic";
      meta.params["n"] = n;
      meta.params["seed"] = static_cast<long long>(seed);
      finish_gen(gct::random_cubic(n, rng), std::move(meta), gc);
    });
  }
  {
    auto* c = gen->add_subcommand("tree", "random tree");
    static int n = 10;
    static std::uint64_t seed = 1;
    c->add_option("--n", n, "vertices")->check(CLI::NonNegativeNumber);
    c->add_option("--seed", seed, "generator seed");
    add_gen_common(c, gc);
    c->callback([&] {
      gct::SplitMix rng(seed);
      gct::GadgetMeta meta;
      meta.name = "tree";
      meta.params["n"] = n;
      meta.params["seed"] = static_cast<long long>(seed);
      finish_gen(gct::random_tree(n, rng), std::move(meta), gc);
    });
  }

  // ---------- param ----------
  auto* param = app.add_subcommand("param", "compute a graph parameter");
  param->require_subcommand(1);
  static std::string ppath, pwitness;
  static gct::ExactLimits plim;

  auto add_param_common = [&](CLI::App* c) {
    c->add_option("graph", ppath, "edge-list file or named spec")->required();
    c->add_option("--witness", pwitness, "write the witness as JSON to this file");
    add_limit_options(c, plim);
  };
  {
    auto* c = param->add_subcommand("girth", "shortest cycle length");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto gi = gct::girth(g);
      if (gi)
        std::cout << *gi << "\n";
      else
        std::cout << "infinity\n";
    });
  }
  {
    auto* c = param->add_subcommand("degeneracy", "max over subgraphs of min degree");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto [d, order] = gct::degeneracy(g);
      std::cout << d << "\n";
      write_witness(pwitness, json{{"elimination_order", order}});
    });
  }
  {
    auto* c = param->add_subcommand("col", "strong colouring number col_r");
    static int r = 2;
    static bool greedy = false;
    c->add_option("--r", r, "radius")->check(CLI::PositiveNumber);
    c->add_flag("--greedy", greedy, "degeneracy-order upper bound instead of exact");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto w = greedy ? gct::strong_colouring_number_greedy(g, r)
                      : gct::strong_colouring_number_exact(g, r, plim);
      std::cout << w.bound << "\n";
      write_witness(pwitness,
                    json{{"order", w.order}, {"radius", w.radius}, {"bound", w.bound}});
    });
  }
  {
    auto* c = param->add_subcommand("tw", "treewidth");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto [tw, td] = gct::treewidth_exact(g, plim);
      std::cout << tw << "\n";
      write_witness(pwitness, json{{"bags", td.bags}, {"tree_edges", td.tree_edges}});
    });
  }
  {
    auto* c = param->add_subcommand("pw", "pathwidth");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto [pw, pd] = gct::pathwidth_exact(g, plim);
      std::cout << pw << "\n";
      write_witness(pwitness, json{{"bags", pd.bags}});
    });
  }
  {
    auto* c = param->add_subcommand("td", "treedepth");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto [td, forest] = gct::treedepth_exact(g, plim);
      std::cout << td << "\n";
      write_witness(pwitness, json{{"parent", forest.parent}});
    });
  }
  {
    auto* c = param->add_subcommand("fvn", "feedback vertex number");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto [k, set] = gct::feedback_vertex_number(g);
      std::cout << k << "\n";
      write_witness(pwitness, json{{"vertices", set}});
    });
  }
  {
    auto* c = param->add_subcommand("circumference", "longest cycle length (2 on forests)");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      std::cout << gct::circumference(g) << "\n";
    });
  }
  {
    auto* c = param->add_subcommand("hadwiger", "largest clique minor");
    add_param_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(ppath);
      auto [h, model] = gct::hadwiger_number(g, plim);
      std::cout << h << "\n";
      write_witness(pwitness, json{{"branch_sets", model.branch_sets}});
    });
  }

  // ---------- colour ----------
  auto* colour = app.add_subcommand("colour", "run a colouring procedure");
  colour->require_subcommand(1);
  static std::string cpath, cout_path;
  static gct::DefectiveOptions copts;

  auto add_colour_common = [&](CLI::App* c) {
    c->add_option("graph", cpath, "edge-list file or named spec")->required();
    c->add_option("-o,--output", cout_path, "write the JSON report here (stdout if omitted)");
  };
  {
    auto* c = colour->add_subcommand("via-col2",
                                     "greedy colouring along the radius-2 greedy order");
    static int s = 2, t = 2;
    static bool skip_scan = false;
    c->add_option("--s", s, "colours");
    c->add_option("--t", t, "forbidden K_{s,t} parameter");
    c->add_flag("--skip-kst-scan", skip_scan, "do not scan for a K_{s,t} subgraph first");
    add_colour_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(cpath);
      auto w = gct::strong_colouring_number_greedy(g, 2);
      copts.check_kst = !skip_scan;
      auto rep = gct::defective_colour_via_col2(g, s, t, w, copts);
      emit_json(report_to_json("via-col2", rep), cout_path);
    });
  }
  {
    auto* c = colour->add_subcommand("rooted",
                                     "same, with a designated properly coloured vertex");
    static int s = 2, t = 2, root = 0;
    c->add_option("--s", s, "colours");
    c->add_option("--t", t, "forbidden K_{s,t} parameter");
    c->add_option("--root", root, "designated vertex")->required();
    add_colour_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(cpath);
      auto w = gct::strong_colouring_number_greedy(g, 2);
      auto rep = gct::defective_colour_rooted(g, s, t, w, root, copts);
      emit_json(report_to_json("rooted", rep), cout_path);
    });
  }
  {
    auto* c = colour->add_subcommand("circumference-girth5",
                                     "2-colouring by blocks, girth >= 5");
    static int hint = -1;
    c->add_option("--hint", hint, "claimed circumference (skips the exact computation)");
    add_colour_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(cpath);
      std::optional<int> h;
      if (hint >= 0) h = hint;
      auto rep = gct::two_colour_circumference_girth5(g, h);
      emit_json(report_to_json("circumference-girth5", rep), cout_path);
    });
  }
  {
    auto* c = colour->add_subcommand("fvn1-girth5",
                                     "2-colouring with one feedback vertex, girth >= 5");
    static int apex = -1;
    c->add_option("--apex", apex, "feedback vertex (searched if omitted)");
    add_colour_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(cpath);
      std::optional<int> a;
      if (apex >= 0) a = apex;
      auto rep = gct::two_colour_fvn1_girth5(g, a);
      emit_json(report_to_json("fvn1-girth5", rep), cout_path);
    });
  }
  {
    auto* c = colour->add_subcommand("fvn-girth7",
                                     "2-colouring with a feedback set, girth >= 7");
    static std::vector<int> apex_set;
    c->add_option("--apex-set", apex_set, "feedback vertex set")
        ->required()
        ->delimiter(',');
    add_colour_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(cpath);
      auto rep = gct::two_colour_fvn_girth7(g, apex_set);
      emit_json(report_to_json("fvn-girth7", rep), cout_path);
    });
  }
  {
    auto* c = colour->add_subcommand("large-girth", "peeling 2-colouring, clustering 2");
    add_colour_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(cpath);
      auto res = gct::two_colour_large_girth(g);
      if (auto* rep = std::get_if<gct::ColouringReport>(&res)) {
        emit_json(report_to_json("large-girth", *rep), cout_path);
      } else {
        json j;
        j["algorithm"] = "large-girth";
        j["outcome"] = "stuck";
        j["vertices"] = std::get<gct::StuckCertificate>(res).vertices;
        emit_json(std::move(j), cout_path);
        exit_code = kFalse;
      }
    });
  }
  {
    auto* c = colour->add_subcommand("degenerate", "proper colouring via degeneracy");
    static int limit = 3;
    c->add_option("--limit", limit, "colour budget")->required();
    add_colour_common(c);
    c->callback([&] {
      auto g = load_graph_or_named(cpath);
      auto res = gct::proper_colour_degenerate(g, limit);
      if (auto* col = std::get_if<gct::Colouring>(&res)) {
        auto rep = gct::check_colouring(g, *col);
        emit_json(report_to_json("degenerate", rep), cout_path);
      } else {
        json j;
        j["algorithm"] = "degenerate";
        j["outcome"] = "too-dense";
        j["witness"] = std::get<gct::TooDense>(res).witness;
        emit_json(std::move(j), cout_path);
        exit_code = kFalse;
      }
    });
  }

  // ---------- check ----------
  {
    auto* c = app.add_subcommand("check", "recompute defect/clustering of a colouring");
    static std::string gpath, jpath, out_path;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("colouring", jpath, "colouring JSON (flat or a colour report)")->required();
    c->add_option("-o,--output", out_path, "write the JSON report here");
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      auto col = colouring_from_json(load_json(jpath));
      auto rep = gct::check_colouring(g, col);
      emit_json(report_to_json("check", rep), out_path);
    });
  }

  // ---------- minor ----------
  auto* minor = app.add_subcommand("minor", "branch-set models and contractions");
  minor->require_subcommand(1);
  {
    auto* c = minor->add_subcommand("extract", "dense-minor extraction at girth >= 8k+3");
    static std::string gpath, out_path;
    static int k = 1;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("--k", k, "extraction parameter")->check(CLI::PositiveNumber);
    c->add_option("-o,--output", out_path, "write the model JSON here");
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      auto model = gct::mader_extract(g, k);
      json j;
      j["branch_sets"] = model.branch_sets;
      emit_json(std::move(j), out_path);
    });
  }
  {
    auto* c = minor->add_subcommand("verify", "check a branch-set model");
    static std::string gpath, mpath;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("model", mpath, "model JSON")->required();
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      auto chk = gct::verify_model(g, model_from_json(load_json(mpath)));
      json j;
      j["valid"] = chk.valid;
      j["covers_all"] = chk.covers_all;
      j["offending_set"] = chk.offending_set;
      j["problem"] = chk.problem;
      emit_json(std::move(j), "");
      if (!chk.valid) exit_code = kFalse;
    });
  }
  {
    auto* c = minor->add_subcommand("contract", "contract the branch sets");
    static std::string gpath, mpath, out_path;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("model", mpath, "model JSON")->required();
    c->add_option("-o,--output", out_path, "output edge-list file (stdout if omitted)");
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      auto q = gct::contract_model(g, model_from_json(load_json(mpath)));
      if (out_path.empty())
        std::cout << gct::write_graph(q);
      else
        gct::write_graph_file(q, out_path);
    });
  }

  // ---------- oracle ----------
  auto* oracle = app.add_subcommand("oracle", "exhaustive colourability queries");
  oracle->require_subcommand(1);
  static gct::OracleBudget budget;
  {
    auto* c = oracle->add_subcommand("colourable", "decide a colourability query");
    static std::string gpath, out_path;
    static int k = 2, defect = -1, clustering = -1;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("--k", k, "number of colours")->required();
    auto* od = c->add_option("--defect", defect, "allowed defect");
    auto* oc = c->add_option("--clustering", clustering, "allowed clustering");
    od->excludes(oc);
    c->add_option("--max-nodes", budget.max_nodes, "search node budget");
    c->add_option("-o,--output", out_path, "write witness JSON here");
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      gct::ColourabilityQuery q;
      q.colours = k;
      if (defect >= 0) {
        q.mode = gct::ColourMode::Defect;
        q.bound = defect;
      } else if (clustering >= 0) {
        q.mode = gct::ColourMode::Clustering;
        q.bound = clustering;
      }
      auto res = gct::is_colourable(g, q, budget);
      std::cout << (res.colourable ? "true" : "false") << "\n";
      if (!out_path.empty()) {
        json j;
        j["colourable"] = res.colourable;
        j["nodes"] = res.nodes;
        if (res.witness) {
          j["colours"] = res.witness->colours;
          j["assignment"] = res.witness->assignment;
        }
        emit_json(std::move(j), out_path);
      }
      if (!res.colourable) exit_code = kFalse;
    });
  }
  {
    auto* c = oracle->add_subcommand("chromatic", "chromatic number");
    static std::string gpath;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("--max-nodes", budget.max_nodes, "search node budget");
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      std::cout << gct::chromatic_number(g, budget) << "\n";
    });
  }
  {
    auto* c = oracle->add_subcommand("min-defect", "smallest feasible defect");
    static std::string gpath;
    static int k = 2;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("--k", k, "number of colours")->required();
    c->add_option("--max-nodes", budget.max_nodes, "search node budget");
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      std::cout << gct::min_defect(g, k, budget) << "\n";
    });
  }
  {
    auto* c = oracle->add_subcommand("min-clustering", "smallest feasible clustering");
    static std::string gpath;
    static int k = 2;
    c->add_option("graph", gpath, "edge-list file or named spec")->required();
    c->add_option("--k", k, "number of colours")->required();
    c->add_option("--max-nodes", budget.max_nodes, "search node budget");
    c->callback([&] {
      auto g = load_graph_or_named(gpath);
      std::cout << gct::min_clustering(g, k, budget) << "\n";
    });
  }

  // ---------- equivalence ----------
  {
    auto* c = app.add_subcommand(
        "equivalence", "four colourability routes through the amplified host");
    static std::string host_spec;
    static int d = 1, k = 2;
    static std::vector<int> order;
    static long long cap = 1'000'000;
    c->add_option("--host", host_spec, "host graph (file or named spec)")->required();
    c->add_option("--d", d, "amplification parameter")->check(CLI::PositiveNumber);
    c->add_option("--k", k, "number of colours")->check(CLI::PositiveNumber);
    c->add_option("--order", order, "host vertex order (default 0,1,...)")->delimiter(',');
    c->add_option("--max-nodes", budget.max_nodes, "search node budget");
    c->add_option("--vertex-cap", cap, "abort above this many amplified vertices");
    c->callback([&] {
      gct::OrderedHost host;
      host.graph = load_graph_or_named(host_spec);
      host.order = order;
      if (host.order.empty()) {
        host.order.resize(host.graph.vertex_count());
        for (int i = 0; i < host.graph.vertex_count(); ++i) host.order[i] = i;
      }
      auto rep = gct::verify_equivalence(host, d, k, budget, {cap});
      json j;
      j["defect_route"] = rep.defect_route;
      j["clustering_route"] = rep.clustering_route;
      j["proper_route"] = rep.proper_route;
      j["host_route"] = rep.host_route;
      j["consistent"] = rep.consistent();
      emit_json(std::move(j), "");
      if (!rep.consistent()) exit_code = kFalse;
    });
  }

  // ---------- suite ----------
  {
    auto* c = app.add_subcommand("suite", "run the full acceptance battery");
    c->callback([&] {
      auto results = gct::suite::run_all(&std::cout);
      int passed = 0;
      for (const auto& r : results)
        if (r.pass) ++passed;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      if (!gct::suite::all_passed(results)) exit_code = kFalse;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 returns 0 for --help/--version; anything else is a usage error
    return code == 0 ? kOk : kUsage;
  }
  return exit_code;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gct::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kUsage;
  } catch (const gct::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const gct::SizeError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kPrecondition;
  } catch (const gct::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}
