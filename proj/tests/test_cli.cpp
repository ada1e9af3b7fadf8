#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcournot/cli.hpp"
#include "qcournot/serialize.hpp"

using namespace qcournot;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path, std::ios::binary);
  file << content;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classical command") {
  const CliResult result = run({"classical"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "q*=(30,30) Π=(900,900)"));
  CHECK(contains(result.out, "CS=1200"));
  CHECK(contains(result.out, "W=3000"));
  CHECK(result.err.empty());
}

TEST_CASE("entangled command") {
  const CliResult result = run({"entangled"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "E[Π]=(1050,750)"));
  CHECK(contains(result.out, "(30,30) p=0.5000"));
  CHECK(contains(result.out, "(40,20) p=0.5000"));
}

TEST_CASE("grover command reproduces the amplified symmetric pair") {
  const CliResult result = run({"grover", "--grid", "10,20,30,40", "--iterations", "2",
                                "--restriction", "symmetric", "--seed", "7"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "selected (20,20)"));
  CHECK(contains(result.out, "p=0.9084"));
  CHECK(contains(result.out, "Π=(1000,1000)"));
}

TEST_CASE("dhoyer command reports the final best profit") {
  const CliResult result =
      run({"dhoyer", "--grid", "10,20,30,40", "--opponent", "20", "--seed", "1"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "final best 1200"));
  CHECK(contains(result.out, "termination=natural"));
}

TEST_CASE("dhoyer with a one-round budget gets cut off") {
  // seed 8 starts at index 1, so the single allowed round is a search round
  const CliResult result = run({"dhoyer", "--seed", "8", "--max-rounds", "1"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "termination=budget-terminated"));
}

TEST_CASE("mortgage command") {
  const CliResult loan = run({"mortgage", "200000", "0.05", "360"});
  CHECK(loan.code == 0);
  CHECK(loan.out == "payment=1073.64 total=386511.57\n");

  const CliResult flat = run({"mortgage", "120000", "0", "120"});
  CHECK(flat.code == 0);
  CHECK(flat.out == "payment=1000.00 total=120000.00\n");

  const CliResult scaled = run({"mortgage", "100000", "0.05", "360"});
  CHECK(contains(scaled.out, "payment=536.82"));

  const CliResult bad = run({"mortgage", "200000", "0.05", "0"});
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "months"));
}

TEST_CASE("table command matches the golden spreadsheet byte for byte") {
  const CliResult result =
      run({"table", "--attach-grover", "--iterations", "2", "--restriction", "symmetric"});
  CHECK(result.code == 0);
  CHECK(result.out == read_file(std::filesystem::path(QCOURNOT_GOLDEN_DIR) /
                                "table_4x4_amplified.csv"));
}

TEST_CASE("table without a ladder omits the amplitude columns") {
  const CliResult result = run({"table"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "q1,q2,Q,P,P.q1,tc1,Pi1,p.q2,tc2,Pi2,totalPi,CS,W\n"));
  CHECK_FALSE(contains(result.out, "NEW AMP"));
}

TEST_CASE("single-cell table row") {
  const CliResult result = run({"table", "--grid", "30"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "30,30,60,40,1200,300,900,1200,300,900,1800,1200,3000\n"));
}

TEST_CASE("compare command") {
  SUBCASE("default pairing: equilibrium vs amplified pair") {
    const CliResult result = run({"compare", "--seed", "7"});
    CHECK(result.code == 0);
    CHECK(contains(result.out, "QuantumParetoImproves"));
    CHECK(contains(result.out, "(600,600)"));
  }

  SUBCASE("a fixed asymmetric pair is incomparable") {
    const CliResult result = run({"compare", "--pure", "40,20"});
    CHECK(result.code == 0);
    CHECK(contains(result.out, "Incomparable"));
  }

  SUBCASE("identical sub-configs are equivalent") {
    const auto config = write_temp("qc_compare_equiv.json", R"({
      "version": 1,
      "classical": {"kind": "classical"},
      "quantum": {"kind": "classical"}
    })");
    const CliResult result = run({"compare", "--config", config.string()});
    CHECK(result.code == 0);
    CHECK(contains(result.out, "Equivalent"));
  }

  SUBCASE("the quantum side can be an adaptive search") {
    // seed 1 settles on q1=40 against the fixed rival: profits (1200,600)
    const auto config = write_temp("qc_compare_dhoyer.json", R"({
      "version": 1,
      "quantum": {"kind": "dhoyer", "opponent": 20, "seed": 1}
    })");
    const CliResult result = run({"compare", "--config", config.string()});
    CHECK(result.code == 0);
    CHECK(contains(result.out, "Incomparable"));
  }
}

TEST_CASE("json output round-trips") {
  const std::vector<std::vector<std::string>> commands = {
      {"classical", "--format", "json"},
      {"entangled", "--format", "json"},
      {"grover", "--seed", "7", "--iterations", "2", "--format", "json"},
      {"grover", "--seed", "2", "--restriction", "none", "--format", "json"},
      {"dhoyer", "--seed", "1", "--format", "json"},
      {"dhoyer", "--seed", "8", "--max-rounds", "1", "--format", "json"},
  };
  for (const auto& command : commands) {
    CAPTURE(command[0]);
    const CliResult result = run(command);
    REQUIRE(result.code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(result.out);
    const ScenarioResult record = scenario_from_json(parsed);
    CHECK(scenario_to_json(record) == parsed);
  }
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::vector<std::string>> commands = {
      {"grover", "--seed", "9"},
      {"dhoyer", "--seed", "9", "--schedule", "randomized"},
      {"table", "--attach-grover", "--format", "csv"},
      {"compare", "--seed", "11", "--format", "json"},
  };
  for (const auto& command : commands) {
    CAPTURE(command[0]);
    const CliResult first = run(command);
    const CliResult second = run(command);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("config file drives a run and flags override it") {
  const auto config = write_temp("qc_grover.json", R"({
    "version": 1,
    "market": {"a": 100, "b": 1, "c": 10},
    "grid": [10, 20, 30, 40],
    "iterations": 2,
    "restriction": "symmetric",
    "seed": 7,
    "format": "json"
  })");

  const CliResult from_config = run({"grover", "--config", config.string()});
  REQUIRE(from_config.code == 0);
  const CliResult from_flags = run({"grover", "--grid", "10,20,30,40", "--iterations",
                                    "2", "--restriction", "symmetric", "--seed", "7",
                                    "--format", "json"});
  CHECK(from_config.out == from_flags.out);

  // command line wins over the file
  const CliResult overridden =
      run({"grover", "--config", config.string(), "--seed", "3", "--format", "table"});
  const CliResult direct = run({"grover", "--grid", "10,20,30,40", "--iterations", "2",
                                "--restriction", "symmetric", "--seed", "3"});
  CHECK(overridden.out == direct.out);

  // byte-identical across repeated config runs
  const CliResult again = run({"grover", "--config", config.string()});
  CHECK(from_config.out == again.out);
}

TEST_CASE("terms flag builds a custom correlated state") {
  const CliResult result =
      run({"entangled", "--grid", "20,30,40", "--terms", "30:30:0.707,40:20:0.707"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "p=0.4998"));  // 0.707^2 = 0.499849, reported as-is
}

TEST_CASE("validation failures exit with code 2 and name the field") {
  const CliResult unknown_key =
      run({"classical", "--config",
           write_temp("qc_bad_key.json", R"({"version":1,"intercept":5})").string()});
  CHECK(unknown_key.code == 2);
  CHECK(contains(unknown_key.err, "intercept"));

  const CliResult bad_version =
      run({"classical", "--config",
           write_temp("qc_bad_version.json", R"({"version":2})").string()});
  CHECK(bad_version.code == 2);
  CHECK(contains(bad_version.err, "version"));

  const CliResult bad_market = run({"classical", "--a", "5", "--c", "10"});
  CHECK(bad_market.code == 2);
  CHECK(contains(bad_market.err, "market"));

  const CliResult bad_grid = run({"grover", "--grid", "10,oops"});
  CHECK(bad_grid.code == 2);
  CHECK(contains(bad_grid.err, "grid"));

  const CliResult bad_format = run({"classical", "--format", "xml"});
  CHECK(bad_format.code == 2);
  CHECK(contains(bad_format.err, "--format"));

  const CliResult bad_terms =
      run({"entangled", "--grid", "20,30,40", "--terms", "30:30:0.9,40:20:0.9"});
  CHECK(bad_terms.code == 2);
  CHECK(contains(bad_terms.err, "terms"));

  const CliResult bad_opponent = run({"dhoyer", "--opponent", "-4"});
  CHECK(bad_opponent.code == 2);
  CHECK(contains(bad_opponent.err, "opponent"));

  const CliResult missing_sub = run({});
  CHECK(missing_sub.code == 2);
}

TEST_CASE("runtime domain failures exit with code 3") {
  // Q = 400 prices below zero, which the price-triangle surplus rejects
  const CliResult result = run({"table", "--grid", "200"});
  CHECK(result.code == 3);
  CHECK(contains(result.err, "negative price"));

  // the demand-triangle convention handles the same grid, with a warning
  const CliResult tolerated = run({"table", "--grid", "200", "--cs-convention", "standard"});
  CHECK(tolerated.code == 0);
  CHECK(contains(tolerated.err, "warning"));
}

TEST_CASE("--out writes the rendering to a file") {
  const auto path = std::filesystem::temp_directory_path() / "qc_out.csv";
  std::filesystem::remove(path);
  const CliResult result = run({"table", "--out", path.string()});
  CHECK(result.code == 0);
  CHECK(result.out.empty());
  CHECK(contains(read_file(path), "q1,q2,Q,P"));
  std::filesystem::remove(path);
}

TEST_CASE("checked-in scenario configs run") {
  const std::filesystem::path dir(QCOURNOT_CONFIG_DIR);
  const std::vector<std::pair<std::string, std::string>> scenarios = {
      {"grover", "amplified_pair.json"},
      {"entangled", "correlated_state.json"},
      {"dhoyer", "best_response_search.json"},
      {"compare", "welfare_comparison.json"},
  };
  for (const auto& [command, file] : scenarios) {
    CAPTURE(file);
    const CliResult result = run({command, "--config", (dir / file).string()});
    CHECK(result.code == 0);
    CHECK_FALSE(result.out.empty());
  }
}

TEST_CASE("help exits cleanly") {
  const CliResult result = run({"--help"});
  CHECK(result.code == 0);
  CHECK(contains(result.out, "classical"));
  CHECK(contains(result.out, "mortgage"));
}
