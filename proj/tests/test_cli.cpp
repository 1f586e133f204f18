#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hecke/commands.hpp"
#include "hecke/corpus.hpp"
#include "json.hpp"

using namespace hecke;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / ("hecke_test_" + stem)).string();
}

}  // namespace

TEST_CASE("info prints the class-group constants") {
  const auto r = run({"info", "--named", "X5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "h=4 h2=2 h'=4"));
  CHECK(contains(r.out, "Cl0 X   = Z/4"));
  CHECK(contains(r.out, "(half)"));

  const auto j = nlohmann::json::parse(run({"info", "--named", "X6", "--format", "json"}).out);
  CHECK(j["schema"] == "hecke-report/1");
  CHECK(j["status"] == "pass");
  CHECK(j["constants"]["h2"] == 4);
}

TEST_CASE("curves given by coefficients") {
  const auto a = run({"info", "--p", "3", "--coeffs", "[0,0,0,1,2]"});
  const auto b = run({"info", "--p", "3", "--coeffs", "[1,2]"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(contains(a.out, "h=4"));
  CHECK(contains(b.out, "h=4"));
  CHECK(run({"info", "--p", "2", "--k", "2", "--coeffs", "0,0,1,0,[0,1]"}).code == 0);
}

TEST_CASE("verify and graph") {
  const auto v = run({"verify", "--named", "X6", "--depth", "6"});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "4 components"));

  const auto g = run({"graph", "--named", "X2", "--x", "inf", "--depth", "4"});
  CHECK(g.code == 0);
  std::istringstream in(g.out);
  std::size_t nodes = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find("->") == std::string::npos && line.size() > 2 && line.back() == ';') ++nodes;
  CHECK(nodes == 9);
  CHECK(contains(g.out, "\"c[0,0]\" -> \"c[1,0]\" [label=\"3\"];"));

  const auto j = nlohmann::json::parse(run({"graph", "--named", "X5", "--x", "1", "--format", "json"}).out);
  CHECK(j["schema"] == "hecke-graph/1");
  CHECK(j["x"] == 1);
}

TEST_CASE("the numeric subcommands succeed on the corpus") {
  for (const char* name : {"X2", "X5", "X6", "E23"}) {
    CAPTURE(name);
    CHECK(run({"cusp", "--named", name}).code == 0);
    CHECK(run({"zeta", "--named", name}).code == 0);
    CHECK(run({"toroidal", "--named", name}).code == 0);
    CHECK(run({"pullback", "--named", name}).code == 0);
    CHECK(run({"eisenstein", "--named", name, "--s", "0.3+0.2i"}).code == 0);
  }
  const auto t = run({"toroidal", "--named", "E23"});
  CHECK(contains(t.out, "1 or 2, undecided"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"info"}).code == 2);
  CHECK(run({"info", "--named", "X99"}).code == 2);
  CHECK(run({"info", "--p", "3", "--coeffs", "[0,0]"}).code == 2);  // singular
  CHECK(run({"info", "--p", "4", "--coeffs", "[1,1]"}).code == 2);  // not prime
  CHECK(run({"graph", "--named", "X2", "--x", "7"}).code == 2);
  CHECK(run({"graph", "--named", "X2", "--depth", "1"}).code == 2);
  CHECK(run({"eisenstein", "--named", "X2", "--s", "banana"}).code == 2);
  CHECK(run({"scan", "--q", "7"}).code == 2);  // sampling required above q = 5
  const auto r = run({"info", "--p", "3", "--coeffs", "[0,0]"});
  CHECK(contains(r.err, "SingularCurve"));
}

TEST_CASE("the field cap is read from the environment") {
  ::setenv("HECKE_CAP", "8", 1);
  CHECK(run({"info", "--named", "X4"}).code == 2);  // X' lives over F_16
  CHECK(run({"info", "--named", "X2"}).code == 0);
  ::unsetenv("HECKE_CAP");
  CHECK(run({"info", "--named", "X4"}).code == 0);
}

TEST_CASE("corpus dump round trips through a file") {
  const auto d = run({"info", "--dump-corpus"});
  REQUIRE(d.code == 0);
  const auto parsed = corpus_from_jsonl(d.out);
  REQUIRE(parsed.size() == builtin_corpus().size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].name == builtin_corpus()[i].name);
    CHECK(parsed[i].coeffs == builtin_corpus()[i].coeffs);
  }
  const std::string path = temp_path("corpus.jsonl");
  std::ofstream(path) << d.out;
  CHECK(run({"info", "--corpus", path, "--named", "E23"}).code == 0);
  const auto s = run({"scan", "--corpus", path, "--format", "json"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["status"] == "pass");
  std::remove(path.c_str());
}

TEST_CASE("scan is exhaustive for small q and byte-stable") {
  const auto a = run({"scan", "--q", "3", "--format", "json"});
  const auto b = run({"scan", "--q", "3", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["curves"].size() == 162);

  const auto r1 = run({"scan", "--q", "7", "--random", "5", "--seed", "3", "--format", "json"});
  const auto r2 = run({"scan", "--q", "7", "--random", "5", "--seed", "3", "--format", "json"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("output can go to a file") {
  const std::string path = temp_path("zeta.json");
  CHECK(run({"zeta", "--named", "X4", "--format", "json", "--output", path}).code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["command"] == "zeta");
  std::remove(path.c_str());
}
