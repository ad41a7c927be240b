#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// End-to-end checks of the installed command surface: exit codes, canonical
// stdout bytes, and the json report schema.

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string("\"") + CLI_PATH + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  REQUIRE(WIFEXITED(st));
  r.rc = WEXITSTATUS(st);
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.is_open());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check reports laws and exit codes") {
  const RunResult ok = run("check " + fixture("proj2.json"));
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "C1: holds"));
  CHECK(contains(ok.out, "C3: holds"));

  const RunResult fail =
      run("check --axiom C6 " + fixture("psb_c8_not_c6.json"));
  CHECK(fail.rc == 1);
  CHECK(contains(fail.out, "C6: fails"));

  const std::string mutant = temp_file(
      "condalg-cli-mutant.json",
      R"({"type": "conditional-algebra", "atoms": 2,
          "cond": [[0,1,2,3],[0,1,2,3],[0,1,2,3],[0,3,2,3]]})");
  const RunResult m = run("check " + mutant);
  CHECK(m.rc == 1);
  CHECK(contains(m.out, "C2: fails"));

  CHECK(run("check /nonexistent/algebra.json").rc == 2);
  const std::string bad = temp_file("condalg-cli-bad.json", "not json");
  const RunResult b = run("check " + bad);
  CHECK(b.rc == 2);
  CHECK(contains(b.out, "input error"));
}

TEST_CASE("classify prints the variety profile") {
  const RunResult g = run("classify " + fixture("glob2.json"));
  CHECK(g.rc == 0);
  for (const char* tag : {"CA", "PSB", "PsC", "SIA", "S2IA"})
    CHECK(contains(g.out, std::string(tag) + ": holds"));

  const RunResult p = run("classify " + fixture("proj2.json"));
  CHECK(p.rc == 0);  // CA member, so not a failure
  CHECK(contains(p.out, "PSB: fails"));

  const std::string mutant = temp_file(
      "condalg-cli-mutant.json",
      R"({"type": "conditional-algebra", "atoms": 2,
          "cond": [[0,1,2,3],[0,1,2,3],[0,1,2,3],[0,3,2,3]]})");
  CHECK(run("classify " + mutant).rc == 1);
}

TEST_CASE("dual, cm and em print canonical documents") {
  const RunResult d = run("dual " + fixture("proj2.json"));
  CHECK(d.rc == 0);
  CHECK(d.out == slurp(fixture("proj2_frame.json")));

  const RunResult c = run("cm " + fixture("proj2_frame.json"));
  CHECK(c.rc == 0);
  CHECK(c.out == slurp(fixture("proj2.json")));

  const RunResult e = run("em " + fixture("proj2.json"));
  CHECK(e.rc == 0);
  CHECK(e.out == slurp(fixture("proj2.json")));
}

TEST_CASE("roundtrip picks the direction from the document type") {
  const RunResult a = run("roundtrip " + fixture("chain3.json"));
  CHECK(a.rc == 0);
  CHECK(contains(a.out, "co-es-roundtrip: holds"));
  const RunResult f = run("roundtrip " + fixture("proj2_frame.json"));
  CHECK(f.rc == 0);
  CHECK(contains(f.out, "es-co-roundtrip: holds"));
}

TEST_CASE("correspond and canonicity validate their law ids") {
  const RunResult ok = run("correspond --axiom C6 " + fixture("glob2.json"));
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "C6 correspondence: holds"));
  CHECK(run("correspond --axiom C1 " + fixture("glob2.json")).rc == 2);

  const RunResult can =
      run("canonicity --cond T5 " + fixture("proj2_frame.json"));
  CHECK(can.rc == 0);
  CHECK(contains(can.out, "T5 canonicity: holds"));
  CHECK(run("canonicity --cond A4 " + fixture("proj2_frame.json")).rc == 2);
}

TEST_CASE("structure listings") {
  const RunResult s = run("subalgebras " + fixture("glob2.json"));
  CHECK(s.rc == 0);
  CHECK(contains(s.out, "subalgebra 0: {0, 3} (conditional)"));
  CHECK(contains(s.out, "subalgebra duality: holds"));

  const RunResult c = run("congruences " + fixture("chain3.json"));
  CHECK(c.rc == 0);
  CHECK(contains(c.out, "theta(Y) with Y = {0, 1}"));
  CHECK(contains(c.out, "congruence duality: holds"));
}

TEST_CASE("mma and extensions commands") {
  const RunResult m = run("mma " + fixture("proj2.json"));
  CHECK(m.rc == 0);
  CHECK(contains(m.out, "M1: holds"));
  CHECK(contains(m.out, "box transfer: holds"));

  const RunResult e = run("extensions " + fixture("chain3.json"));
  CHECK(e.rc == 0);
  CHECK(contains(e.out, "smoothness: holds"));
  CHECK(contains(e.out, "extension transfer: holds"));
}

TEST_CASE("search emits documents and a json report") {
  const RunResult t = run("search --atoms 1 --require C1,C2,C3");
  CHECK(t.rc == 0);
  CHECK(contains(t.out, "\"atoms\": 1"));

  const RunResult j =
      run("search --atoms 1 --require C1,C2,C3 --format json");
  CHECK(j.rc == 0);
  const nlohmann::json rep = nlohmann::json::parse(j.out);
  CHECK(rep.at("command") == "search");
  CHECK(rep.contains("inputs"));
  CHECK(rep.at("verdicts").is_array());
  CHECK(rep.contains("seed"));
  CHECK(rep.contains("elapsed_ms"));
  CHECK(rep.at("output").at("count") == 3);
  CHECK(rep.at("output").at("results").size() == 3);

  const RunResult k = run(
      "search --atoms 1 --require C1,C2,C3,C1star --format json");
  CHECK(nlohmann::json::parse(k.out).at("output").at("count") == 2);

  const RunResult r = run(
      "search --atoms 3 --require C1,C2,C3 --forbid C6 --limit 1 --seed 1 "
      "--kind random-table --format json");
  CHECK(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out).at("output").at("count") == 1);

  CHECK(run("search --atoms 2 --require C3").rc == 2);
  CHECK(run("search --atoms 9 --require C1,C2,C3").rc == 2);
}

TEST_CASE("json failure reports carry the counterexample") {
  const RunResult j = run("check --axiom C6 --format json " +
                          fixture("psb_c8_not_c6.json"));
  CHECK(j.rc == 1);
  const nlohmann::json rep = nlohmann::json::parse(j.out);
  const nlohmann::json& v = rep.at("verdicts").at(0);
  CHECK(v.at("law") == "C6");
  CHECK(v.at("holds") == false);
  CHECK(v.at("counterexample").is_object());
}

TEST_CASE("verify-suite gates on all eleven criteria") {
  const RunResult ok = run("verify-suite");
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "verdict: ALL PASS"));

  const RunResult j = run("verify-suite --format json");
  CHECK(j.rc == 0);
  const nlohmann::json rep = nlohmann::json::parse(j.out);
  CHECK(rep.at("output").at("criteria").size() == 11);
  for (const auto& c : rep.at("output").at("criteria"))
    CHECK(c.at("passed") == true);

  const std::string seeded =
      temp_file("condalg-cli-seed.json", R"({"seed": 123})");
  const RunResult s = run("verify-suite --config " + seeded);
  CHECK(s.rc == 0);
  CHECK(contains(s.out, "seed 123"));
  CHECK(contains(s.out, "verdict: ALL PASS"));
}

TEST_CASE("verify-suite flags an injected mutant") {
  const std::string cfg =
      temp_file("condalg-cli-mutcfg.json", R"({"inject_mutant": true})");
  const RunResult r = run("verify-suite --config " + cfg);
  CHECK(r.rc == 1);
  CHECK(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "check_CA failed on proj2"));
  CHECK(contains(r.out, "verdict: FAIL"));

  const std::string junk =
      temp_file("condalg-cli-junkcfg.json", R"({"samples": 1})");
  const RunResult u = run("verify-suite --config " + junk);
  CHECK(u.rc == 2);
  CHECK(contains(u.out, "input error"));
}

TEST_CASE("argument errors exit with code 2") {
  CHECK(run("frobnicate").rc == 2);
  CHECK(run("check").rc == 2);
  CHECK(run("check --format yaml " + fixture("proj2.json")).rc == 2);
  CHECK(run("correspond " + fixture("glob2.json")).rc == 2);
  CHECK(run("").rc == 2);
}
