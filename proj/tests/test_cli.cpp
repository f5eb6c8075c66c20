// End-to-end checks of the command line tool: JSON payloads against the
// closed-form oracles, CSV/JSON value equality, and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

namespace {

struct CommandResult {
  std::string output;
  int exit_code = -1;
};

CommandResult run_cli(const std::string& args) {
  CommandResult result;
  const std::string cmd = std::string(ORTHOZEROS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

TEST_CASE("zeros subcommand matches the cubic oracle") {
  const CommandResult r = run_cli("zeros --family laguerre --alpha 0 --n 3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["spec"]["family"] == "laguerre");
  CHECK(j["spec"]["degree"] == 3);
  const auto exact = oracles::cubic_roots(-9.0, 18.0, -6.0);
  REQUIRE(j["zero_set"]["zeros"].size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(j["zero_set"]["zeros"][k].get<double>() - exact[k]) <= 1e-10);
  }
}

TEST_CASE("classify subcommand reports the partition and verdicts") {
  const CommandResult r = run_cli("classify --family ultraspherical --alpha 0.5 --n 7");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  const auto& partition = j["classification"]["report"]["partition"];
  REQUIRE(partition.size() == 2);
  CHECK(partition[0]["label"] == "convex");
  CHECK(partition[0]["lo"] == -1.0);
  CHECK(partition[0]["hi"] == 0.0);
  CHECK(partition[1]["label"] == "concave");
  for (const auto& t : j["classification"]["empirical"]["triples"]) {
    const std::string verdict = t["verdict"].get<std::string>();
    CHECK((verdict == "agrees" || verdict == "below_tolerance"));
  }
}

TEST_CASE("bounds subcommand exits clean with no violations") {
  const CommandResult r = run_cli("bounds --family jacobi --alpha 20 --beta 0 --n 3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["bound_suite"]["violations"].empty());
  REQUIRE(j["bound_suite"]["records"].size() == 2);
  CHECK(j["bound_suite"]["records"][0]["lower_satisfied"] == true);
}

TEST_CASE("csv output repeats the json values byte for byte") {
  const std::string csv_path = "cli_zeros_test.csv";
  const CommandResult r =
      run_cli("zeros --family jacobi --alpha 0 --beta 0 --n 4 --csv " + csv_path);
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  std::ifstream in(csv_path);
  REQUIRE(in.good());
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "kind,index,value");
  for (int k = 0; k < 4; ++k) {
    REQUIRE(std::getline(in, line).good());
    const std::string expected =
        "zero," + std::to_string(k + 1) + "," + j["zero_set"]["zeros"][k].dump();
    CHECK(line == expected);
  }
  in.close();
  std::remove(csv_path.c_str());
}

TEST_CASE("exit codes distinguish usage, parameter, and numerical errors") {
  CHECK(run_cli("zeros --family nosuch --alpha 0 --n 3").exit_code == 1);
  CHECK(run_cli("zeros --family laguerre --alpha -1 --n 3").exit_code == 1);
  CHECK(run_cli("zeros --family laguerre --alpha 0 --n 300").exit_code == 3);
  CHECK(run_cli("zeros --family laguerre --alpha 0 --n 3 --beta 1").exit_code == 1);
  CHECK(run_cli("verify").exit_code == 1);
  CHECK(run_cli("normal-form --family jacobi --alpha 1 --beta 1 --n 4 --t-grid bogus")
            .exit_code == 1);
}
