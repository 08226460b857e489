#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "gsc/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gsc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gsc_unit_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("classify prints six flags") {
  const auto r = run({"classify", fixture("classic_pattern.txt")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* t : {"V", "H", "D1", "D2", "C1", "C2"}) CHECK(j[t] == false);
  CHECK(j.contains("witnesses"));
}

TEST_CASE("render writes the PGM") {
  const auto path = temp_path("l2.pgm");
  const auto r = run({"render", "--seq", fixture("seqA.json"), "--level", "2", "--out", path});
  REQUIRE(r.code == 0);
  const auto bytes = slurp(path);
  const std::string header = "P5\n9 9\n255\n";
  REQUIRE(bytes.size() == header.size() + 81);
  CHECK(bytes.substr(0, header.size()) == header);
  CHECK(std::count(bytes.begin() + header.size(), bytes.end(), '\0') == 27);
  std::remove(path.c_str());
}

TEST_CASE("check-theorem on SEQ-C") {
  const auto r = run({"check-theorem", "--seq", fixture("seqC.json")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "guaranteed_totally_disconnected");
  CHECK(j["witnesses"]["T1"]["type"] == "V");
  CHECK(j["witnesses"]["T2"]["type"] == "D1");
}

TEST_CASE("audit, trend, paths, components and dimension reports") {
  auto r = run({"audit-lemma", "--seq", fixture("seqA.json"), "--lemma", "1", "--k", "2,3,3,3,4,4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound_x"] == "2/3");
  CHECK(j["bound_y"] == "2/9");
  CHECK(j["violations"].empty());

  r = run({"trend", "--seq", fixture("classic.json"), "--levels", "3"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["levels"].size() == 4);
  CHECK(j["levels"][3]["worst_x"] == "1/1");

  r = run({"verify-paths", "--seq", fixture("seqA.json"), "--k1", "2", "--k2", "3", "--k3", "3", "--curves",
           "--corridors"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["family_size"] == 3);
  CHECK(j["periodic"] == true);
  CHECK(j["curves"]["all_verified"] == true);
  CHECK(j["corridors"].size() == 3);

  r = run({"components", "--seq", fixture("seqA.json"), "--level", "2"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["cells"] == 54);
  CHECK(j["count"] == 3);

  r = run({"dimension", "--seq", fixture("classic.json"), "--levels", "2"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["levels"][1]["white_count"] == "64");
  CHECK(r.out.find("1.89278926071") != std::string::npos);
}

TEST_CASE("gen-example writes a loadable dim2 file") {
  const auto path = temp_path("dim2.json");
  REQUIRE(run({"gen-example", "--kind", "dim2", "--levels", "3", "--out", path}).code == 0);
  const auto r = run({"dimension", "--seq", path, "--levels", "6"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["levels"][5]["width"] == "5040");
  CHECK(j["levels"][5]["estimate"].get<double>() > 1.75);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify", fixture("classic_pattern.txt"), "--bogus"}).code == 2);
  CHECK(run({"check-theorem", "--seq", "/nonexistent.json"}).code == 2);
  CHECK(run({"classify", fixture("seqA.json")}).code == 2);

  auto r = run({"verify-paths", "--seq", fixture("classic.json"), "--k1", "2", "--k2", "3", "--k3", "3"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  CHECK(run({"render", "--seq", fixture("seqA.json"), "--level", "5", "--out", temp_path("x.pgm")}).code == 1);
  CHECK(run({"--cap", "10", "components", "--seq", fixture("seqC.json"), "--level", "3"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output does not depend on thread count") {
  const std::vector<std::string> base{"components", "--seq", fixture("seqC.json"), "--level", "4"};
  auto one = base, four = base;
  one.insert(one.begin(), {"--threads", "1"});
  four.insert(four.begin(), {"--threads", "4"});
  CHECK(run(one).out == run(four).out);
}
