#include "catch_amalgamated.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Out {
  int code = -1;
  std::string text;
};

// Runs vkt with `args` through the shell; stderr is discarded.
Out vkt(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string(VKT_BINARY) + " " + args;
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  cmd += " 2>/dev/null";
  Out o;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) o.text.append(buf, n);
  const int st = pclose(p);
  o.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return o;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("vkt-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& body) {
  const fs::path f = scratch() / name;
  std::ofstream(f) << body;
  return f.string();
}

}  // namespace

TEST_CASE("gen and obstruction on K5") {
  const Out g = vkt("gen --kind vk-complex --d 1");
  REQUIRE(g.code == 0);
  const Json c = Json::parse(g.text);
  CHECK(c["facets"].size() == 10);
  const std::string f = write("k5.json", g.text);
  const Out o = vkt("obstruction -i " + f);
  CHECK(o.code == 0);
  const Json r = Json::parse(o.text);
  CHECK(r["vanishes"] == false);
  CHECK(r["r"] == 2);
  const Out w = vkt("obstruction --emit-witness -i " + f);
  CHECK(Json::parse(w.text)["witness"].size() == 15);
}

TEST_CASE("stdin input and text output") {
  const std::string f = write("bd.json", vkt("gen --kind boundary-simplex --dim 2").text);
  const Out t = vkt("--format text gen --kind skeleton --k 1 -i " + f);
  CHECK(t.code == 0);
  CHECK(t.text.find("0 1\n") != std::string::npos);
  const Out o = vkt("obstruction --target-dim 2 -i -", write("g.txt", t.text));
  CHECK(o.code == 0);
  CHECK(Json::parse(o.text)["vanishes"] == true);
}

TEST_CASE("walks are deterministic") {
  const Out a = vkt("pachner walk --dim 2 --steps 5 --seed 7");
  const Out b = vkt("pachner walk --dim 2 --steps 5 --seed 7");
  REQUIRE(a.code == 0);
  CHECK(a.text == b.text);
  const Json j = Json::parse(a.text);
  CHECK(j["trace"].size() == 5);
  CHECK(j["seed"] == 7);
  CHECK(vkt("pachner walk --dim 2 --steps 5 --seed 8").text != a.text);
}

TEST_CASE("exit codes") {
  CHECK(vkt("").code == 2);
  CHECK(vkt("bogus").code == 2);
  CHECK(vkt("obstruction -i /nonexistent/file.json").code == 2);
  CHECK(vkt("obstruction -i " + write("bad.json", "{\"facets\": [[1,1]]}")).code == 2);
  const std::string bd = write("bd2.json", vkt("gen --kind boundary-simplex --dim 2").text);
  // the edge {0,1} has a non-missing opposite edge, so the flip does not apply
  CHECK(vkt("pachner apply --sigma 0,1 --tau 2,3 -i " + bd).code == 1);
  CHECK(vkt("pachner apply --sigma 0,1,2 --tau 4 -i " + bd).code == 0);
  const std::string k5 = write("k5b.json", vkt("gen --kind vk-complex --d 1").text);
  CHECK(vkt("dancis --d 1 -i " + k5).code == 1);
  const Out ok = vkt("dancis --d 1 -i " + write("sk.json", vkt("gen --kind skeleton --k 1 -i " + bd).text));
  CHECK(ok.code == 0);
}

TEST_CASE("missing faces and homology") {
  const std::string sq = write("sq.txt", "0 1\n1 2\n2 3\n0 3\n");
  const Out m = vkt("missing --k 1 -i " + sq);
  CHECK(m.code == 0);
  CHECK(Json::parse(m.text).dump().find("[0,2]") != std::string::npos);
  const Out h = vkt("homology --coeff int -i " + sq);
  CHECK(h.code == 0);
  CHECK(h.text.find("1") != std::string::npos);
}

TEST_CASE("manifest records the run and replays it") {
  const std::string man = (scratch() / "m.json").string();
  const Out a = vkt("--manifest " + man + " pachner walk --dim 2 --steps 4 --seed 3");
  REQUIRE(a.code == 0);
  std::ifstream in(man);
  const Json m = Json::parse(in);
  CHECK(m["command"] == "pachner walk");
  CHECK(m["seed"] == 3);
  CHECK(m["exit_code"] == 0);
  CHECK(m["tool_version"] == "0.1.0");
  const Out b = vkt("replay " + man);
  CHECK(b.code == 0);
  CHECK(b.text == a.text);
}

TEST_CASE("verify runs selected criteria") {
  const Out v = vkt("verify --only 1,9");
  CHECK(v.code == 0);
  const Json j = Json::parse(v.text);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["id"] == 1);
  CHECK(j[1]["passed"] == true);
}
