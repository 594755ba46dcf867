#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cartk/cli.hpp"
#include "cartk/poly.hpp"

using namespace cartk;
using Json = nlohmann::json;

TEST_CASE("tau subcommand on the documented example") {
  CliResult r = run_cli({"tau", "--char", "3", "--vars", "x", "--f", "x", "--t",
                         "3/2", "--twist", "1"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["result"]["shift"] == "0");
  REQUIRE(j["result"]["basis"].size() == 1);
  CHECK(j["result"]["basis"][0] == "x");
}

TEST_CASE("counterexample subcommand on the documented example") {
  CliResult r = run_cli({"counterexample", "--char", "3", "--s", "1"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["member"] == false);
  CHECK(j["summary"] == "NON-MEMBER witness x^3");

  CliResult tsv =
      run_cli({"counterexample", "--char", "3", "--s", "1", "--format", "tsv"});
  CHECK(tsv.exit_code == 0);
  CHECK(tsv.output == "NON-MEMBER witness x^3\n");
}

TEST_CASE("identical invocations give byte-identical output") {
  std::vector<std::string> args = {"jumps", "--char", "3",      "--vars", "x",
                                   "--f",   "x^2",   "--lo",    "0",      "--hi",
                                   "1",     "--denom-bound",    "5"};
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  Json j = Json::parse(a.output);
  REQUIRE(j["jumps"].size() == 2);
  CHECK(j["jumps"][0] == "1/2");
  CHECK(j["jumps"][1] == "1");
}

TEST_CASE("serialized values re-parse into the ring") {
  CliResult r = run_cli({"tau", "--char", "5", "--vars", "x,y", "--f", "x*y",
                         "--t", "1", "--twist", "1"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  RingHandle ring = make_ring(5, {"x", "y"}, 0);
  for (const auto& s : j["result"]["basis"]) {
    Polynomial g = parse_polynomial(s.get<std::string>(), ring);
    CHECK(to_string(g) == s.get<std::string>());
  }
}

TEST_CASE("vfilt and axioms subcommands") {
  CliResult r = run_cli({"vfilt", "--char", "3", "--vars", "x", "--n", "2", "--s",
                         "1", "--window", "-1/2:2"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["entries"].size() == 4);

  CliResult ax = run_cli({"axioms", "--char", "3", "--vars", "x", "--n", "2",
                          "--s", "1", "--window", "-1/2:2"});
  REQUIRE(ax.exit_code == 0);
  Json aj = Json::parse(ax.output);
  CHECK(aj["all_pass"] == true);
}

TEST_CASE("compare subcommand") {
  CliResult r = run_cli({"compare", "--char", "3", "--vars", "x", "--n", "1",
                         "--s", "0", "--window", "0:2"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["all_pass"] == true);
}

TEST_CASE("exit codes") {
  // Help is a successful invocation.
  CliResult help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("tau") != std::string::npos);
  // Unknown flag: usage error.
  CHECK(run_cli({"tau", "--char", "3", "--bogus", "1"}).exit_code == 1);
  // Missing subcommand: usage error.
  CHECK(run_cli({}).exit_code == 1);
  // Bad polynomial: usage error with a one-line reason.
  CliResult bad = run_cli({"tau", "--char", "3", "--vars", "x", "--f", "x+z",
                           "--t", "1"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("error") != std::string::npos);
  // Exhausted pair budget: budget error.
  CliResult tight = run_cli({"tau", "--char", "3", "--vars", "x,y", "--f", "x+y",
                             "--t", "1", "--budget", "0"});
  CHECK(tight.exit_code == 2);
}
