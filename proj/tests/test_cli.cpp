#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <tuple>

#include "catoric/poly.hpp"

using nlohmann::json;

namespace {

const char* kRuleArgA = "'1 + x^-1*y + y + x*y + y^2 + x^-1*y^2'";

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_tool(const std::string& args) {
  std::string cmd =
      std::string(CATORIC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  if (WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("classify: lineon report") {
  CliResult r = run_tool("classify --rule " + std::string(kRuleArgA) +
                         " --m '1 + y + x*y'");
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["schema"] == "1");
  CHECK(o["class"] == "lineon");
  CHECK(o["axis"] == json::array({-1, 1}));
  CHECK(o["period"] == 1);
  CHECK(o["g"] == "x + y");
  // emitted polynomials re-parse
  CHECK(catoric::parse(o["g"].get<std::string>()) == catoric::parse("x + y"));
}

TEST_CASE("classify: fracton report and formats") {
  CliResult r = run_tool("classify --rule " + std::string(kRuleArgA) +
                         " --m '1'");
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["class"] == "fracton");
  CHECK(o["g"] == "x + y + x*y + x^2*y + y^2 + x*y^2");
  CHECK_FALSE(o.contains("axis"));

  CliResult both = run_tool("classify --rule " + std::string(kRuleArgA) +
                            " --m '1 + y + x*y' --format both");
  REQUIRE(both.exit_code == 0);
  CHECK(both.out.find("\"class\":\"lineon\"") != std::string::npos);
  CHECK(both.out.find("class: lineon") != std::string::npos);
  CHECK(both.out.find("axis: (-1, 1)") != std::string::npos);
}

TEST_CASE("classify: usage and domain errors") {
  CHECK(run_tool("classify --rule " + std::string(kRuleArgA) + " --m '0'")
            .exit_code == 2);
  CHECK(run_tool("classify --rule " + std::string(kRuleArgA)).exit_code == 2);
  CHECK(run_tool("classify --rule " + std::string(kRuleArgA) +
                 " --m '1' --bogus 3")
            .exit_code == 2);
  CHECK(run_tool("").exit_code == 2);

  // malformed polynomial: domain error with machine-readable payload
  CliResult bad = run_tool("classify --rule 'x +' --m '1'");
  CHECK(bad.exit_code == 1);
  json o = json::parse(bad.out);
  CHECK(o["schema"] == "1");
  CHECK(o.contains("error"));

  // rules must contain the constant term
  CliResult notrule = run_tool("classify --rule '1 + x' --m '1'");
  CHECK(notrule.exit_code == 1);
}

TEST_CASE("gsd: pinned counts and size check") {
  CliResult r = run_tool("gsd --rule " + std::string(kRuleArgA) + " --L 6");
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["schema"] == "1");
  CHECK(o["L"] == 6);
  CHECK(o["qubits"] == 108);
  CHECK(o["rank"] == 106);
  CHECK(o["gsd"] == 4);

  CliResult small = run_tool("gsd --rule " + std::string(kRuleArgA) +
                             " --L 4");
  CHECK(small.exit_code == 1);
  CHECK(json::parse(small.out).contains("error"));
}

TEST_CASE("decompose: identity re-verified") {
  CliResult r = run_tool("decompose --rule " + std::string(kRuleArgA));
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  catoric::Poly2 p_part = catoric::parse(o["P"].get<std::string>());
  catoric::Poly2 q_part = catoric::parse(o["Q"].get<std::string>());
  catoric::Poly2 rebuilt =
      catoric::add(catoric::mul(catoric::parse("1 + x"), p_part),
                   catoric::mul(catoric::parse("1 + y"), q_part));
  CHECK(rebuilt == catoric::parse("1 + x^-1*y + y + x*y + y^2 + x^-1*y^2"));
  CHECK(catoric::gcd2(p_part, q_part) == catoric::Poly2::one());
}

TEST_CASE("circuit: four gates at pinned offsets") {
  CliResult r = run_tool("circuit --rule " + std::string(kRuleArgA));
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  REQUIRE(o["gates"].size() == 4);
  std::multiset<std::tuple<int, int, int>> got, want{
      {2, -1, -1}, {2, -1, 1}, {2, 0, 0}, {3, -1, -1}};
  for (const json& g : o["gates"])
    got.insert({g["target_sublattice"].get<int>(), g["dx"].get<int>(),
                g["dy"].get<int>()});
  CHECK(got == want);
}

TEST_CASE("evolve: row report and ascii grid") {
  CliResult r =
      run_tool("evolve --rule '1 + y + x*y' --w '1' --depth 3");
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["order"] == 1);
  CHECK(o["depth"] == 3);
  CHECK(o["rows"] == json::array({"1", "1 + x", "1 + x^2"}));

  CliResult a = run_tool(
      "evolve --rule '1 + y + x*y' --w '1' --depth 3 --format ascii");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out.find("X..\nXX.\nX.X") != std::string::npos);
  CHECK(a.out.find("top-left cell (i, j) = (0, 0)") != std::string::npos);

  // two-row seed with a Laurent term
  CliResult two = run_tool("evolve --rule " + std::string(kRuleArgA) +
                           " --w '1, x^-1' --depth 3");
  REQUIRE(two.exit_code == 0);
  CHECK(json::parse(two.out)["rows"][2] == "x^-2");

  CHECK(run_tool("evolve --rule '1 + y + x*y' --w 'y' --depth 3").exit_code ==
        1);  // seed rows must be univariate in x
}

TEST_CASE("verify: slab symmetry verdict") {
  CliResult r = run_tool("verify --rule " + std::string(kRuleArgA) +
                         " --w '1, x^-1' --depth 7 --width 15");
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["schema"] == "1");
  CHECK(o["symmetric"] == true);
  CHECK(o["depth"] == 7);
  CHECK(o["width"] == 15);

  CliResult narrow = run_tool("verify --rule " + std::string(kRuleArgA) +
                              " --w '1' --depth 7 --width 2");
  CHECK(narrow.exit_code == 1);
}

TEST_CASE("fuse: checkerboard point pair") {
  CliResult r = run_tool(
      "fuse --rule '1 + x + y + x*y' --m1 '1' --m2 '1' --window 3");
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["pass"] == true);
  CHECK(o["class1"]["class"] == "fracton");
  CHECK(o["class2"]["class"] == "fracton");
  CHECK(o["observed"]["window"] == 3);
  CHECK(o["observed"]["channels"].size() == 3);
  CHECK(o["observed"]["includes_vacuum"] == true);
  CHECK(o["observed"]["vacuum_placements"] ==
        json::array({json::array({0, 0})}));
  CHECK(o["violations"].empty());
}

TEST_CASE("config file supplies flag values") {
  std::string path = "/tmp/catoric_cli_config_test.txt";
  {
    std::ofstream cfg(path);
    cfg << "# torus settings\n";
    cfg << "rule = \"1 + x^-1*y + y + x*y + y^2 + x^-1*y^2\"\n";
    cfg << "L = 6\n";
  }
  CliResult r = run_tool("gsd --config " + path);
  REQUIRE(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["gsd"] == 4);
  CHECK(o["L"] == 6);
  std::remove(path.c_str());

  CHECK(run_tool("gsd --config /nonexistent/path.cfg").exit_code == 2);
}

TEST_CASE("paper-examples: built-in suite passes") {
  CliResult r = run_tool("paper-examples");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all reference examples pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("ok ") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_tool("--help >/dev/null").exit_code == 0);
}

TEST_SUITE_END();
