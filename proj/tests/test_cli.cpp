// End-to-end checks of the installed command-line surface: exit codes,
// report schema and byte stability. The binary path comes from LEFDEC_BIN.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("LEFDEC_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "LEFDEC_BIN must point at the CLI binary");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("verify passes with the pinned dims") {
  RunResult r = run_cli("verify --preset siegel --g 1 --n 2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dims"]["closure"] == 2);
  CHECK(j["dims"]["centralizer"] == 2);
  CHECK(j["dims"]["diagram"] == 2);
  CHECK(j["verdicts"]["pass"] == true);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("verify --n 0 --preset siegel").exit_code == 2);
  CHECK(run_cli("verify --preset siegel").exit_code == 2);  // missing --n
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify --n 1 --preset unknown").exit_code == 2);
}

TEST_CASE("splitting-field failures exit with code 3") {
  RunResult r = run_cli("decompose --preset cm --d 1 --i 2 --r 2");
  CHECK(r.exit_code == 3);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["type"] == "splitting_field_required");
  // over the gaussian field the decomposition goes through
  RunResult ok = run_cli("decompose --preset cm --d 1 --i 2 --r 2 --minpoly 1,0,1");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("budget failures exit with code 3") {
  RunResult r =
      run_cli("verify --preset siegel --g 2 --n 4 --max-operator-dim 20");
  CHECK(r.exit_code == 3);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["type"] == "size_budget_exceeded");
}

TEST_CASE("golden report for the smallest datum") {
  // frozen bytes guard the whole serialization path against drift
  const std::string golden =
      R"({"command":"verify","components":[],"config_echo":{"E_basis":[[["1","0"],["0","1"]]],"budgets":{"idempotent_retries":8,"max_closure_waves":64,"max_operator_dim":5000},"extra_generators":[],"field":{"min_poly":["0","1"]},"g":1,"params":{"g":1},"phi":[["0","1"],["-1","0"]],"seed":0,"source":"preset:siegel"},"dims":{"centralizer":1,"closure":1,"diagram":1,"n":1},"seed":0,"timings_ms":{},"verdicts":{"centralizer_eq_diagram":true,"closure_eq_centralizer":true,"diagram_eq_closure":true,"pass":true},"warnings":[],"witnesses":[]})"
      "\n";
  RunResult r = run_cli("verify --preset siegel --g 1 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden);
}

TEST_CASE("a second imaginary-quadratic datum works end to end") {
  RunResult v = run_cli("verify --preset cm --d 5 --n 2");
  CHECK(v.exit_code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["dims"]["closure"] == 6);
  // the center splits over Q(sqrt(-5)), not over Q
  CHECK(run_cli("decompose --preset cm --d 5 --i 2 --r 2").exit_code == 3);
  RunResult d =
      run_cli("decompose --preset cm --d 5 --i 2 --r 2 --minpoly 5,0,1");
  CHECK(d.exit_code == 0);
  auto dj = nlohmann::json::parse(d.out);
  REQUIRE(dj["components"].size() == 3);
  CHECK(dj["components"][2]["rank"] == 4);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string cmd = "verify --preset cm --d 1 --n 2 --seed 5";
  RunResult a = run_cli(cmd), b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const std::string dec = "decompose --preset siegel --g 1 --i 2 --r 2";
  CHECK(run_cli(dec).out == run_cli(dec).out);
}

TEST_CASE("config files drive the same pipeline") {
  std::string path = "cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"g": 1,
             "phi": [["0","1"],["-1","0"]],
             "E_basis": [[["1","0"],["0","1"]]],
             "seed": 3})";
  }
  RunResult r = run_cli("verify --n 2 --config " + path);
  std::remove(path.c_str());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["config_echo"]["source"] == "config");
  CHECK(j["seed"] == 3);
}

TEST_CASE("invalid config data names the invariant with exit 2") {
  std::string path = "cli_test_bad_config.json";
  {
    std::ofstream f(path);
    f << R"({"g": 1,
             "phi": [["1","0"],["0","1"]],
             "E_basis": [[["1","0"],["0","1"]]]})";
  }
  RunResult r = run_cli("verify --n 1 --config " + path);
  std::remove(path.c_str());
  CHECK(r.exit_code == 2);
  auto j = nlohmann::json::parse(r.out);
  std::string type = j["error"]["type"];
  CHECK(type.find("phi_alternating") != std::string::npos);
}

TEST_CASE("oracle-diagram agrees and reports counts") {
  RunResult r = run_cli("oracle-diagram --preset cm --d 1 --n 2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dims"]["matchings"] == 3);
  CHECK(j["dims"]["diagram"] == 6);
  CHECK(j["verdicts"]["pass"] == true);
}

TEST_CASE("timings stay out of the default report") {
  RunResult without = run_cli("verify --preset siegel --g 1 --n 1");
  auto j1 = nlohmann::json::parse(without.out);
  CHECK(j1["timings_ms"].empty());
  RunResult with = run_cli("verify --preset siegel --g 1 --n 1 --timings");
  auto j2 = nlohmann::json::parse(with.out);
  CHECK(!j2["timings_ms"].empty());
}

TEST_CASE("report command aggregates and exits zero on a clean datum") {
  RunResult r = run_cli("report --preset siegel --g 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdicts"]["pass"] == true);
}

TEST_CASE("results are independent of the thread count") {
  const std::string base = "decompose --preset siegel --g 1 --i 2 --r 2";
  RunResult one = run_cli(base + " --threads 1");
  RunResult four = run_cli(base + " --threads 4");
  CHECK(one.exit_code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("the top wedge of the cm datum decomposes over Q") {
  // the 1-dim top wedge needs no splitting field: one rank-1 twist line
  RunResult r = run_cli("decompose --preset cm --d 1 --i 2 --r 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["components"].size() == 1);
  CHECK(j["components"][0]["rank"] == 1);
  CHECK(j["components"][0]["twist"] == -1);
}

TEST_SUITE_END();
