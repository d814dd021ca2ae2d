#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "gct/families.hpp"
#include "gct/graph.hpp"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(GCT_BINARY_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = ::pclose(pipe);
  if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

const fs::path& tmp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("gct-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string at(const std::string& name) { return (tmp_dir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cli: generation writes canonical edge lists and sidecar metadata") {
  auto direct = run_cli("gen family --name C5");
  CHECK(direct.status == 0);
  CHECK(direct.out == gct::write_graph(gct::cycle_graph(5)));

  auto gen = run_cli("gen fvn1 --d 1 -o " + at("g.el"));
  REQUIRE(gen.status == 0);
  gct::Graph g = gct::read_graph_file(at("g.el"));
  CHECK(g.vertex_count() == 13);
  json meta = json::parse(slurp(at("g.el.meta.json")));
  CHECK(meta.at("name") == "fvn1_gadget");
  CHECK(meta.at("vertices") == 13);
  CHECK(meta.at("named_vertices").at("alpha") == 12);
  CHECK(meta.at("run").contains("command"));
}

TEST_CASE("cli: the defect-1 gadget defeats two colours at defect 1") {
  REQUIRE(run_cli("gen fvn1 --d 1 -o " + at("g1.el")).status == 0);
  auto refuted = run_cli("oracle colourable " + at("g1.el") + " --k 2 --defect 1");
  CHECK(refuted.status == 1);
  CHECK(refuted.out == "false\n");
  auto allowed = run_cli("oracle colourable " + at("g1.el") + " --k 2 --defect 2");
  CHECK(allowed.status == 0);
  CHECK(allowed.out == "true\n");
}

TEST_CASE("cli: the girth-5 apex grid reports girth 5") {
  REQUIRE(run_cli("gen apex-grid5 --m 6 -o " + at("a.el")).status == 0);
  auto girth = run_cli("param girth " + at("a.el"));
  CHECK(girth.status == 0);
  CHECK(girth.out == "5\n");
}

TEST_CASE("cli: feedback-set colouring of the 14-cycle stays in pairs") {
  REQUIRE(run_cli("gen family --name C14 -o " + at("c14.el")).status == 0);
  auto col = run_cli("colour fvn-girth7 " + at("c14.el") + " --apex-set 0");
  REQUIRE(col.status == 0);
  json rep = json::parse(col.out);
  CHECK(rep.at("algorithm") == "fvn-girth7");
  CHECK(rep.at("outcome") == "colouring");
  CHECK(rep.at("clustering").get<int>() <= 2);
  CHECK(rep.at("guarantee") == 2);
  CHECK(rep.at("preconditions_verified") == true);
  CHECK(rep.at("run").contains("input_digest"));
  CHECK(rep.at("run").at("command").get<std::string>().find("fvn-girth7") !=
        std::string::npos);
}

TEST_CASE("cli: named specs serve the parameter commands") {
  CHECK(run_cli("param tw C5").out == "2\n");
  CHECK(run_cli("param td petersen").out == "6\n");
  CHECK(run_cli("param pw heawood").out == "6\n");
  CHECK(run_cli("param girth P6").out == "infinity\n");
  CHECK(run_cli("param girth K4").out == "3\n");
  CHECK(run_cli("param circumference heawood").out == "14\n");
  CHECK(run_cli("param fvn heawood").out == "4\n");
  CHECK(run_cli("param degeneracy G4").out == "2\n");
  CHECK(run_cli("param hadwiger petersen").out == "5\n");
  CHECK(run_cli("oracle chromatic petersen").out == "3\n");
  CHECK(run_cli("oracle min-defect C5 --k 2").out == "1\n");
  CHECK(run_cli("oracle min-clustering C5 --k 2").out == "2\n");
  auto bip = run_cli("oracle colourable heawood --k 2");
  CHECK(bip.status == 0);
  CHECK(bip.out == "true\n");
}

TEST_CASE("cli: witness files") {
  auto tw = run_cli("param tw C5 --witness " + at("tw.json"));
  REQUIRE(tw.status == 0);
  json w = json::parse(slurp(at("tw.json")));
  CHECK(w.contains("bags"));
  CHECK(w.at("run").contains("elapsed_seconds"));
}

TEST_CASE("cli: colouring reports round-trip through check") {
  {
    std::ofstream out(at("c4.el"));
    out << gct::write_graph(gct::cycle_graph(4));
  }
  {
    std::ofstream out(at("c4col.json"));
    out << json{{"colours", 2}, {"assignment", {1, 2, 1, 2}}}.dump();
  }
  auto chk = run_cli("check " + at("c4.el") + " " + at("c4col.json"));
  REQUIRE(chk.status == 0);
  json rep = json::parse(chk.out);
  CHECK(rep.at("proper") == true);
  CHECK(rep.at("defect") == 0);
  CHECK(rep.at("clustering") == 1);

  // a full colour report is accepted as the colouring input unchanged
  auto col = run_cli("colour fvn1-girth5 C5 -o " + at("c5rep.json"));
  REQUIRE(col.status == 0);
  auto back = run_cli("check C5 " + at("c5rep.json"));
  REQUIRE(back.status == 0);
  json rep2 = json::parse(back.out);
  CHECK(json::parse(slurp(at("c5rep.json"))).at("clustering") == rep2.at("clustering"));
}

TEST_CASE("cli: minor extraction pipeline") {
  REQUIRE(run_cli("gen family --name heawood --subdivide 1 -o " + at("sh.el")).status == 0);
  json meta = json::parse(slurp(at("sh.el.meta.json")));
  CHECK(meta.at("params").at("subdivide") == 1);
  REQUIRE(run_cli("minor extract " + at("sh.el") + " --k 1 -o " + at("model.json")).status == 0);
  auto verify = run_cli("minor verify " + at("sh.el") + " " + at("model.json"));
  REQUIRE(verify.status == 0);
  json v = json::parse(verify.out);
  CHECK(v.at("valid") == true);
  CHECK(v.at("covers_all") == true);
  auto contract = run_cli("minor contract " + at("sh.el") + " " + at("model.json"));
  REQUIRE(contract.status == 0);
  gct::Graph q = gct::read_graph(contract.out);
  for (int u = 0; u < q.vertex_count(); ++u) CHECK(q.degree(u) >= 2);

  // a broken model is reported and fails with status 1
  {
    std::ofstream out(at("badmodel.json"));
    out << json{{"branch_sets", {{0}, {0}}}}.dump();
  }
  auto bad = run_cli("minor verify " + at("sh.el") + " " + at("badmodel.json"));
  CHECK(bad.status == 1);
  CHECK(json::parse(bad.out).at("valid") == false);
}

TEST_CASE("cli: equivalence routes agree in both directions") {
  auto yes = run_cli("equivalence --host K3 --d 2 --k 3");
  REQUIRE(yes.status == 0);
  json jy = json::parse(yes.out);
  CHECK(jy.at("consistent") == true);
  CHECK(jy.at("defect_route") == true);
  CHECK(jy.at("host_route") == true);

  auto no = run_cli("equivalence --host K3 --d 2 --k 2");
  REQUIRE(no.status == 0);
  json jn = json::parse(no.out);
  CHECK(jn.at("consistent") == true);
  CHECK(jn.at("defect_route") == false);
  CHECK(jn.at("clustering_route") == false);
  CHECK(jn.at("proper_route") == false);
  CHECK(jn.at("host_route") == false);
}

TEST_CASE("cli: negative outcomes use status 1 with an outcome object") {
  auto stuck = run_cli("colour large-girth petersen");
  CHECK(stuck.status == 1);
  json js = json::parse(stuck.out);
  CHECK(js.at("outcome") == "stuck");
  CHECK(js.at("vertices").size() == 10);

  auto dense = run_cli("colour degenerate K4 --limit 3");
  CHECK(dense.status == 1);
  CHECK(json::parse(dense.out).at("outcome") == "too-dense");
  auto fine = run_cli("colour degenerate K4 --limit 4");
  CHECK(fine.status == 0);
  CHECK(json::parse(fine.out).at("proper") == true);
}

TEST_CASE("cli: exit codes distinguish usage, hypothesis and budget failures") {
  CHECK(run_cli("param girth " + at("does-not-exist.el")).status == 2);
  CHECK(run_cli("param girth").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("oracle colourable C5 --k 2 --defect 1 --clustering 2").status == 2);
  CHECK(run_cli("--help").status == 0);

  CHECK(run_cli("colour fvn-girth7 K4 --apex-set 0").status == 3);
  CHECK(run_cli("colour fvn1-girth5 K4").status == 3);
  CHECK(run_cli("param col petersen").status == 3);  // above the exact-search threshold
  CHECK(run_cli("param col petersen --greedy").status == 0);

  CHECK(run_cli("oracle chromatic petersen --max-nodes 3").status == 4);
}

TEST_CASE("cli: generation is deterministic under a fixed seed") {
  auto a = run_cli("gen random --n 20 --edge-percent 30 --seed 5");
  auto b = run_cli("gen random --n 20 --edge-percent 30 --seed 5");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run_cli("gen random --n 20 --edge-percent 30 --seed 6").out);
  auto c1 = run_cli("gen cubic --n 10 --seed 2");
  auto c2 = run_cli("gen cubic --n 10 --seed 2");
  CHECK(c1.out == c2.out);
  auto t1 = run_cli("gen tree --n 12 --seed 3");
  CHECK(t1.status == 0);
  CHECK(gct::is_forest(gct::read_graph(t1.out)));
}
