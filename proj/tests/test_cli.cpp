#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flagorder/cli.hpp"

using flagorder::CliResult;
using flagorder::run_cli;
using nlohmann::json;

namespace {

const std::string kDir = SCENARIO_DIR;

json run_json(std::vector<std::string> args, int expected_exit) {
  args.push_back("--json");
  const CliResult r = run_cli(args);
  CAPTURE(r.err);
  REQUIRE(r.exit_code == expected_exit);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("member command") {
  const json pass = run_json({"member", "--vars", "x1,x2", "--group", "perm(1 2)", "--elem",
                              "(1/(x2-x1))*(perm(1 2)-id)", "--degree-bound", "6"},
                             0);
  CHECK(pass["command"] == "member");
  CHECK(pass["status"] == "pass");
  CHECK(pass["mode"] == "exact_squarefree");
  CHECK(pass["data"]["verdict"]["status"] == "member");
  CHECK(pass["data"]["verdict"]["degree_bound"] == 6);

  const json fail = run_json({"member", "--vars", "x1,x2", "--group", "perm(1 2)", "--elem", "(1/x1)*id"}, 1);
  CHECK(fail["status"] == "fail");
  CHECK(fail["data"]["verdict"]["witness"] == "1");
  REQUIRE_FALSE(fail["witnesses"].empty());

  const json partial = run_json({"member", "--vars", "x1,x2", "--group", "perm(1 2)", "--elem",
                                 "(1/(x2-x1))*(perm(1 2)-id)", "--mode", "bounded"},
                                0);
  CHECK(partial["status"] == "partial");
  CHECK(partial["degree_bound"] == 6);
}

TEST_CASE("report JSON is compact with sorted keys") {
  const CliResult r = run_cli({"member", "--vars", "x1,x2", "--group", "perm(1 2)", "--elem",
                               "(1/(x2-x1))*(perm(1 2)-id)", "--json"});
  CHECK(r.out.rfind("{\"checks\":", 0) == 0);
  CHECK(r.out.find("\"command\":\"member\"") != std::string::npos);
  CHECK(r.out.find("timing_ms") == std::string::npos);
  const CliResult t = run_cli({"member", "--vars", "x1,x2", "--group", "perm(1 2)", "--elem", "id", "--json",
                               "--timing"});
  CHECK(json::parse(t.out).contains("timing_ms"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"member", "--vars", "x1"}).exit_code == 2);
  CHECK(run_cli({"member", "--vars", "x1", "--elem", "x1 +"}).exit_code == 2);
  CHECK(run_cli({"member", "--vars", "x1", "--elem", "x1", "--mode", "fast"}).exit_code == 2);
  const CliResult help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("left to") != std::string::npos);
}

TEST_CASE("evaluation, multiplication and Demazure commands") {
  const json e = run_json({"eval", "--vars", "x1,x2", "--elem", "(1/(x2-x1))*(perm(1 2)-id)", "--arg", "x1^2"}, 0);
  CHECK(e["data"]["result"] == "x1 + x2");
  const json co = run_json({"eval", "--vars", "x1,x2", "--elem", "x1*perm(1 2)", "--arg", "x1", "--co"}, 0);
  CHECK(co["data"]["result"] == "x2^2");
  const json m = run_json({"mul", "--vars", "x1,x2", "--elem", "x1*perm(1 2)", "--elem2", "x1*perm(1 2)"}, 0);
  CHECK(m["data"]["result"] == "(x1*x2)*id");
  const json d = run_json({"demazure", "--vars", "x1,x2,x3", "--group", "perm(1 2),perm(2 3)", "--index", "2",
                           "--arg", "x2"},
                          0);
  CHECK(d["data"]["result"] == "1");
}

TEST_CASE("ideal, morphism, tensor, witnesses and axioms commands") {
  const json i = run_json({"ideal-member", "--vars", "x1,x2,x3", "--group", "perm(1 2),perm(2 3)", "--ideal",
                           "x2,x3", "--elem", "perm(2 3)", "--compare", "id"},
                          0);
  CHECK(i["data"]["class_equality"] == "equal_up_to_degree");
  const json m = run_json({"morphism", "apply", "--vars", "x,y", "--group", "sign(x),sign(y)", "--vars2",
                           "x1,x2,x3,x4", "--group2", "perm(1 2),perm(2 3),perm(3 4)", "--phi", "x2-x1,x4-x3",
                           "--psi", "perm(1 2),perm(3 4)", "--complement", "x1+x2,x3+x4", "--elem",
                           "(1/x)*(sign(x)-id)"},
                          0);
  CHECK(m["status"] == "pass");
  const json t = run_json({"tensor", "check", "--vars", "x", "--monoid", "shift(x:-1)", "--vars2", "y", "--monoid2",
                           "shift(y:-1)", "--gens", "x;shift(x:-1);shift(x:1)", "--gens2", "y;shift(y:-1);shift(y:1)",
                           "--word-len", "2"},
                          0);
  CHECK(t["status"] == "partial");
  const json w = run_json({"witnesses", "--vars", "x1,x2", "--group", "perm(1 2)", "--elems", "id;perm(1 2)",
                           "--candidates", "1,x1,x2"},
                          0);
  CHECK(w["data"]["witnesses"] == json::array({"1", "x1"}));
  const json a = run_json({"axioms", "--vars", "x11,x21,x22", "--group", "perm(2 3)", "--monoid", "shift(x11:-1)",
                           "--word-len", "3"},
                          0);
  CHECK(a["status"] == "partial");
}

TEST_CASE("scenario list and klein scenario") {
  const json l = run_json({"scenario", "list"}, 0);
  CHECK(l["data"]["scenarios"].size() == 7);
  const json k = run_json({"scenario", "run", "klein4_s4"}, 0);
  int images = 0;
  for (const auto& c : k["checks"]) {
    if (c["name"] == "image_d_x" || c["name"] == "image_d_y") {
      CHECK(c["status"] == "pass");
      ++images;
    }
  }
  CHECK(images == 2);
  CHECK(run_cli({"scenario", "run", "nosuch"}).exit_code == 1);
  CHECK(run_cli({"scenario", "run", "gt_chain(9)"}).exit_code == 1);
}

TEST_CASE("shipped fixtures exit as declared") {
  std::ifstream in(kDir + "/manifest.json");
  REQUIRE(in);
  const json manifest = json::parse(in);
  for (const auto& f : manifest["fixtures"]) {
    std::vector<std::string> argv;
    for (const auto& a : f["argv"]) {
      std::string s = a.get<std::string>();
      const auto pos = s.find("{dir}");
      if (pos != std::string::npos) s.replace(pos, 5, kDir);
      argv.push_back(s);
    }
    CAPTURE(f["name"].get<std::string>());
    CHECK(run_cli(argv).exit_code == f["expect_exit"].get<int>());
  }
}

TEST_CASE("scenario output is deterministic") {
  const std::vector<std::string> args = {"scenario", "run", "nilhecke(3)", "--samples", kDir + "/nilhecke3.txt",
                                         "--json"};
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
