#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " STARCONF_CLI " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("starconf_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::vector<std::string> strings(const Json& points) {
  std::vector<std::string> out;
  for (const auto& p : points) {
    std::string s;
    for (const auto& c : p) s += (s.empty() ? "" : ",") + c.get<std::string>();
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("construct hadamard-star gives the nine CI points") {
  const auto r = run("construct hadamard-star --line \"x+y-z\" --x 1,2,3,4 --y -1,-2,-3");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  std::vector<std::string> expected{"1,2,6", "1,3,8", "1,4,10", "1,6,12", "1,8,15", "1,12,20", "1,2,0", "1,3,0", "1,6,2"};
  std::sort(expected.begin(), expected.end());
  CHECK(strings(j["points"]) == expected);
  CHECK(j["hyperplanes"].size() == 7);
  CHECK(j["conics"].size() == 1);
}

TEST_CASE("construct contact-star") {
  const auto r = run("construct contact-star --n 2 --params 0,1,2");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["points"].size() == 3);
  CHECK(j["hyperplanes"][0] == Json::parse(R"(["0","0","1"])"));
  CHECK(j["hyperplanes"][1] == Json::parse(R"(["1","-2","1"])"));
  CHECK(run("construct contact-star --n 2 --params 0,1,1").status == 2);
}

TEST_CASE("construct line-power in P^3") {
  const auto r = run("construct line-power --n 3 --through \"1,1,2,0;1,-1,0,-2\" --x 2");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["is_rnc"] == true);
  CHECK(j["avoids_delta"] == true);
  CHECK(j["points"][0] == Json::parse(R"(["1","8","27","1"])"));
}

TEST_CASE("construct octagon") {
  const auto r = run("construct octagon --params 0,1,2,3,5,7,-1,-3");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["points"].size() == 8);
  CHECK(j["checks"]["residual_collinearity"] == true);
  CHECK(j["checks"]["pencil_rank"].get<int>() <= 3);
}

TEST_CASE("hvector from a file and from fat points") {
  const auto star = run("construct hadamard-star --line \"x+y-z\" --x 1,2,3,4 --y -1,-2,-3");
  const auto path = temp_file("nine.json", star.out);
  const auto r = run("hvector --in " + path.string());
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["h"] == Json::parse("[1,2,3,2,1]"));
  const auto fat = run("hvector --fat 2,2,2,2,2 --seed 3");
  REQUIRE(fat.status == 0);
  CHECK(Json::parse(fat.out)["h"] == Json::parse("[1,2,3,4,4,1]"));
  std::filesystem::remove(path);
}

TEST_CASE("verify examples pass") {
  CHECK(run("verify lem3.6 --r 6 --s 2").status == 0);
  CHECK(run("verify prop5.1 --trials 20").status == 0);
  const auto r = run("verify thm4.2 --r 2..5 --s 2..5 --seed 7");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["verdict"] == "PASS");
}

TEST_CASE("explore reports the five-star mismatch") {
  const auto r = run("explore conj4.7 --sizes 3,3,3,3,3 --trials 1");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j["mismatches"].size() == 1);
  CHECK(j["mismatches"][0]["h_stars"] == Json::parse("[1,2,3,4,5]"));
  CHECK(j["mismatches"][0]["h_fat"] == Json::parse("[1,2,3,4,4,1]"));
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run("verify thm9.9").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("hvector --in /nonexistent/file.json").status == 2);
  const auto bad = temp_file("bad.json", "{not json");
  CHECK(run("hvector --in " + bad.string()).status == 2);
  CHECK(run("verify thm4.2 --r 9..2").status == 2);
  const auto p3 = temp_file("p3.json", R"({"n": 3, "points": [[1,0,0,0]]})");
  CHECK(run("svg --in " + p3.string()).status == 2);
  std::filesystem::remove(bad);
  std::filesystem::remove(p3);
}

TEST_CASE("identical command and seed give identical bytes") {
  const auto a = run("verify prop5.3 --trials 3 --seed 42");
  const auto b = run("verify prop5.3 --trials 3 --seed 42");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto env = run("verify prop5.3 --trials 3", "STARCONF_SEED=42");
  CHECK(env.out == a.out);
  CHECK(run("verify prop5.3 --trials 3 --seed 43").out != a.out);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "starconf_cli_test_out.json";
  std::filesystem::remove(path);
  const auto r = run("verify brianchon --trials 2 --seed 1 --out " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(Json::parse(text.str())["verdict"] == "PASS");
  std::filesystem::remove(path);
}

TEST_CASE("svg of a constructed configuration") {
  const auto star = run("construct contact-star --n 2 --params 0,1,2,3");
  const auto path = temp_file("star.json", star.out);
  const auto r = run("svg --in " + path.string());
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out.find("<polyline") != std::string::npos);
  CHECK(r.out == run("svg --in " + path.string()).out);
  std::filesystem::remove(path);
}
