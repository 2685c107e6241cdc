#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qschur/cli.hpp"
#include "qschur/serialize.hpp"

using namespace qschur;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/qschur_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"atom"}).code == 2);  // missing required --gamma
  RunResult bad = run({"atom", "--gamma", "0,2,1", "--method", "bogus"});
  CHECK(bad.code == 2);
  CHECK(!bad.err.empty());
}

TEST_CASE("atom with method=all agrees and exits 0") {
  RunResult r = run({"atom", "--gamma", "0,2,1", "--n", "3", "--method", "all"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["methods"]["pibar"] == j["methods"]["ct"]);
  CHECK(j["methods"]["pibar"] == j["methods"]["keys"]);
  CHECK(j["methods"]["pibar"] == j["methods"]["paths"]);
}

TEST_CASE("expand-product includes the worked beta") {
  RunResult r = run({"expand-product", "--alpha", "1,3,2,2", "--lambda", "3,2,1,1"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  bool found = false;
  for (const auto& term : j["terms"]) {
    if (term["beta"] == json::array({1, 2, 3, 1, 5, 3})) {
      found = true;
      CHECK(term["coeff"].get<long>() >= 1);
    }
  }
  CHECK(found);
}

TEST_CASE("output determinism and JSON round-trip") {
  RunResult a = run({"macdonald", "--gamma", "0,1"});
  RunResult b = run({"macdonald", "--gamma", "0,1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  XPoly p = xpoly_from_json(json::parse(a.out));
  CHECK(xpoly_to_json(p).dump(2) + "\n" == a.out);

  RunResult latex = run({"--format", "latex", "macdonald", "--gamma", "0,1"});
  CHECK(latex.code == 0);
  CHECK(latex.out.find("\\frac") != std::string::npos);
}

TEST_CASE("macdonald --at specializes the parameters") {
  RunResult r = run({"--format", "text", "macdonald", "--gamma", "0,1", "--at", "q=0,t=0"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1 + x2\n");
  RunResult rb = run({"--format", "text", "macdonald", "--gamma", "0,1", "--basement", "2,1"});
  CHECK(rb.code == 0);
}

TEST_CASE("insert reproduces the worked insertion") {
  std::string path = write_temp(
      "rct.json", R"({"rows": [[1],[3],[4,3,2],[5,4,2],[5,4]]})");
  RunResult r = run({"insert", "--rct", path, "--word", "4"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["tableau"]["rows"] ==
        json::array({{1}, {3}, {4, 3, 2}, {4}, {5, 4, 2}, {5, 4}}));
  CHECK(j["steps"][0]["new_box"] == json::array({4, 1}));
  std::remove(path.c_str());
}

TEST_CASE("bijection subcommand applies psi and its inverse") {
  std::string path = write_temp("cap.json", R"({"rows": [[1,0,3,0,0,2,2],[0,3,0,0,2,2],
    [1,0,0,2,2],[0,0,2,2],[0,1,2],[1,2],[2]]})");
  RunResult r = run({"bijection", "--kind", "psi", "--in", path});
  CHECK(r.code == 0);
  json ct = json::parse(r.out);
  CHECK(ct["rows"] == json::array({{1}, {3, 2, 2}, {6, 4}, {7, 7}}));

  std::string ct_path = write_temp("ct.json", r.out);
  RunResult back = run({"bijection", "--kind", "psi", "--in", ct_path, "--inverse", "--n", "7"});
  CHECK(back.code == 0);
  json cap = json::parse(back.out);
  CHECK(cap["rows"][0] == json::array({1, 0, 3, 0, 0, 2, 2}));
  std::remove(path.c_str());
  std::remove(ct_path.c_str());
}

TEST_CASE("verify runs a small suite and exits 0") {
  RunResult r = run({"verify", "exact", "--max-size", "2", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  RunResult h = run({"verify", "hecke", "--max-size", "2", "--n", "2"});
  CHECK(h.code == 0);
}

TEST_CASE("--out writes to a file") {
  std::string path = "/tmp/qschur_test_out.json";
  RunResult r = run({"--out", path, "macdonald", "--gamma", "1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  json j = json::parse(f);
  CHECK(j["n"] == 2);
  std::remove(path.c_str());
}
