// Drives the installed command-line binary end to end. The binary path and
// samples directory are injected by the build.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "test_support.hpp"
#include "tmw/tmw.hpp"

#ifndef TMW_CLI_PATH
#define TMW_CLI_PATH ""
#endif
#ifndef TMW_SAMPLES_DIR
#define TMW_SAMPLES_DIR ""
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + std::string(TMW_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string sample(const std::string& name) { return std::string(TMW_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("enumerate --genus 2 prints the seven classes", "[cli]") {
  const auto r = run_cli("enumerate --genus 2");
  REQUIRE(r.exit_code == 0);
  const auto j = tmw::Json::parse(r.output);
  CHECK(j["classes"].size() == 7);
  CHECK(j["counts_by_edges"]["3"] == 2);

  // identical invocations are byte-identical
  CHECK(run_cli("enumerate --genus 2").output == r.output);

  // every emitted graph re-parses to an isomorphic graph
  for (const auto& cls : j["classes"]) {
    const auto graph = tmw::graph_from_json(cls["graph"]);
    CHECK(tmw::canonical_form(graph).hex() == cls["key"].get<std::string>());
  }
}

TEST_CASE("poset, complex, check-reversal", "[cli]") {
  const auto poset = run_cli("poset --genus 2");
  REQUIRE(poset.exit_code == 0);
  const auto pj = tmw::Json::parse(poset.output);
  CHECK(pj["covers"].size() == 8);

  const auto dot = run_cli("poset --genus 2 --format dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.output.find("digraph strata") != std::string::npos);

  const auto cx = run_cli("complex --genus 1 --legs 1");
  REQUIRE(cx.exit_code == 0);
  const auto cj = tmw::Json::parse(cx.output);
  CHECK(cj["cones"].size() == 2);
  CHECK(cj["dim"] == 1);

  const auto rev = run_cli("check-reversal --genus 2");
  REQUIRE(rev.exit_code == 0);
  const auto rj = tmw::Json::parse(rev.output);
  CHECK(rj["pass"] == true);
  CHECK(rj["matched_covers"] == 8);
}

TEST_CASE("contract on the theta sample", "[cli]") {
  const auto r = run_cli("contract --input " + sample("theta.json") + " --edges e1");
  REQUIRE(r.exit_code == 0);
  const auto graph = tmw::graph_from_json(tmw::Json::parse(r.output));
  CHECK(tmw::is_isomorphic(graph, tmw::test::two_loops()));

  // multiple edges, bare ids
  const auto all = run_cli("contract --input " + sample("theta.json") + " --edges 1,2,3");
  REQUIRE(all.exit_code == 0);
  const auto point = tmw::graph_from_json(tmw::Json::parse(all.output));
  CHECK(point.edges().empty());
  CHECK(tmw::genus(point) == 2);

  const auto bad = run_cli("contract --input " + sample("theta.json") + " --edges e9");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("unknown edge id") != std::string::npos);
}

TEST_CASE("tropicalize a nodal model", "[cli]") {
  const auto r = run_cli("tropicalize --input " + sample("model_theta.json"));
  REQUIRE(r.exit_code == 0);
  const auto j = tmw::Json::parse(r.output);
  REQUIRE(j.contains("lengths"));
  CHECK(j["lengths"]["1"] == "1");
  CHECK(j["lengths"]["2"] == "2");
  CHECK(j["lengths"]["3"] == "inf");

  const auto bad = run_cli("tropicalize --input " + sample("model_unit.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("not a node") != std::string::npos);
}

TEST_CASE("jinv", "[cli]") {
  const auto singular = run_cli("jinv --a -3 --b 2");
  REQUIRE(singular.exit_code == 0);
  CHECK(singular.output == "Delta = 0\nsingular\n");

  const auto smooth = run_cli("jinv --a 1 --b 0");
  REQUIRE(smooth.exit_code == 0);
  CHECK(smooth.output == "Delta = 4\nj = 1\n");

  const auto rational = run_cli("jinv --a 1/2 --b -1/3");
  REQUIRE(rational.exit_code == 0);
  CHECK(rational.output.find("Delta = 7/2") != std::string::npos);

  const auto malformed = run_cli("jinv --a x --b 2");
  CHECK(malformed.exit_code == 1);
}

TEST_CASE("validation failures exit 1", "[cli]") {
  CHECK(run_cli("enumerate --genus 0 --legs 1").exit_code == 1);
  CHECK(run_cli("enumerate").exit_code == 1);            // missing required flag
  CHECK(run_cli("contract --input /nonexistent.json").exit_code == 1);

  // malformed JSON reports a byte position
  const auto broken = sample("broken.json");
  {
    std::ofstream out(broken);
    out << "{\"vertices\": [}";
  }
  const auto r = run_cli("contract --input " + broken);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("parse error at") != std::string::npos);  // includes the position
  std::remove(broken.c_str());
}

TEST_CASE("complexity guard", "[cli]") {
  // the default limit is g+n <= 8; nothing is computed past the guard
  const auto blocked = run_cli("enumerate --genus 9");
  CHECK(blocked.exit_code == 1);
  CHECK(blocked.output.find("guard") != std::string::npos);

  // TMW_MAX_COMPLEXITY overrides the limit in both directions
  const auto lowered = run_cli("enumerate --genus 4", "TMW_MAX_COMPLEXITY=3 ");
  CHECK(lowered.exit_code == 1);
  CHECK(lowered.output.find("guard") != std::string::npos);
  CHECK(run_cli("enumerate --genus 4", "TMW_MAX_COMPLEXITY=4 ").exit_code == 0);

  // --force bypasses the guard entirely
  CHECK(run_cli("enumerate --genus 4 --force", "TMW_MAX_COMPLEXITY=3 ").exit_code == 0);
}
