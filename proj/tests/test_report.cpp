#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#include "cospec/report.hpp"

using namespace cospec;
using nlohmann::json;

namespace {

json load_schema() {
  std::ifstream in(std::string(COSPEC_SOURCE_DIR) + "/schemas/report.schema.json");
  REQUIRE(in.good());
  return json::parse(in);
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(COSPEC_CLI_PATH) + " " + args +
                    " > /dev/null 2> /dev/null";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/cospec_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

json strip_timing(json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("graph spec parsing diagnostics") {
  CHECK_NOTHROW(parse_graph_spec(R"({"group":[2],"connection_set":[[1]]})"));
  CHECK_THROWS_WITH_AS(parse_graph_spec("not json"),
                       doctest::Contains("not valid JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph_spec(R"({"connection_set":[[1]]})"),
                       doctest::Contains("group"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_graph_spec(R"({"group":[2]})"),
                       doctest::Contains("connection_set"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_graph_spec(R"({"group":[2],"connection_set":[[1]],"extra":1})"),
      doctest::Contains("extra"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_graph_spec(
          R"({"group":[4,4],"connection_set":[[1,0],[3,0],[0,1],[2]]})"),
      doctest::Contains("connection_set[3]"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_graph_spec(R"({"group":[4],"connection_set":[[5],[3]]})"),
      doctest::Contains("exceeds"), std::invalid_argument);
  // Structural graph errors surface through the same path.
  CHECK_THROWS_AS(parse_graph_spec(R"({"group":[8],"connection_set":[[1],[2],[7]]})"),
                  std::invalid_argument);
}

TEST_CASE("reports validate against the published schema") {
  json schema = load_schema();
  std::string error;

  AnalysisOptions plain{false, 1};
  AnalysisOptions with_oracle{true, 1};

  ReportData hetero = run_hetero_analysis(make_hetero_spec({3, 4}), with_oracle);
  CHECK(validate_against_schema(report_to_json(hetero), schema, &error));
  CHECK(error.empty());

  ReportData cube = run_cubelike_analysis(make_cubelike_spec({5}), with_oracle);
  CHECK(validate_against_schema(report_to_json(cube), schema, &error));

  CayleyGraph x = parse_graph_spec(R"({"group":[4],"connection_set":[[1],[3]]})");
  ReportData custom = run_graph_analysis(x, plain, "analyze");
  CHECK(validate_against_schema(report_to_json(custom), schema, &error));

  // The validator rejects structural damage.
  json broken = report_to_json(hetero);
  broken["spectrum"]["class_count"] = "many";
  CHECK(!validate_against_schema(broken, schema, &error));
  CHECK(error.find("class_count") != std::string::npos);
  json extra = report_to_json(hetero);
  extra["surprise"] = 1;
  CHECK(!validate_against_schema(extra, schema, &error));
  json missing = report_to_json(hetero);
  missing.erase("verdicts");
  CHECK(!validate_against_schema(missing, schema, &error));
}

TEST_CASE("analysis of the echoed graph reproduces the report") {
  AnalysisOptions options{false, 1};
  CayleyGraph x = parse_graph_spec(
      R"({"group":[8,2],"connection_set":[[1,0],[7,0],[0,1],[4,1]]})");
  json first = report_to_json(run_graph_analysis(x, options, "analyze"));

  // Rebuild the input purely from the echoed report.
  json echo;
  echo["group"] = first["graph"]["group"];
  echo["connection_set"] = first["graph"]["connection_set"];
  CayleyGraph y = parse_graph_spec(echo.dump());
  json second = report_to_json(run_graph_analysis(y, options, "analyze"));

  CHECK(strip_timing(first) == strip_timing(second));
}

TEST_CASE("text and JSON carry the same numeric content") {
  AnalysisOptions options{true, 1};
  ReportData r = run_hetero_analysis(make_hetero_spec({3}), options);
  json j = report_to_json(r);
  std::string text = report_to_text(r);

  CHECK(text.find("eigenvalue classes: " +
                  std::to_string(j["spectrum"]["class_count"].get<int>())) !=
        std::string::npos);
  CHECK(text.find("order " + std::to_string(j["sc_subgroup"]["order"].get<int>())) !=
        std::string::npos);
  for (const auto& row : j["spectrum"]["classes"]) {
    CHECK(text.find(row["value"].get<std::string>()) != std::string::npos);
    CHECK(text.find("x" + std::to_string(row["multiplicity"].get<long>())) !=
          std::string::npos);
  }
  CHECK(text.find("ALL OK") != std::string::npos);
  CHECK(j["verdicts"]["all"].get<bool>());
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("hetero --exponents 3") == 0);
  CHECK(run_cli("hetero --exponents 3 --format json --verify-oracle") == 0);
  CHECK(run_cli("cubelike --dims 5") == 0);
  CHECK(run_cli("selftest --seed 20240811") == 0);

  // Usage and validation errors exit 1.
  CHECK(run_cli("") == 1);
  CHECK(run_cli("hetero") == 1);                    // missing required option
  CHECK(run_cli("hetero --exponents 2") == 1);      // exponent too small
  CHECK(run_cli("hetero --exponents 3,3") == 1);    // repeated exponent
  CHECK(run_cli("cubelike --dims 5,15") == 1);      // growth condition fails
  CHECK(run_cli("cubelike --dims 5 --levels 1") == 1);
  CHECK(run_cli("cubelike") == 1);
  CHECK(run_cli("analyze --input /nonexistent.json") == 1);
  CHECK(run_cli("hetero --exponents 3 --format yaml") == 1);
  CHECK(run_cli("oracle") == 1);

  std::string bad = write_temp("bad_set.json",
                               R"({"group":[8],"connection_set":[[1],[2],[7]]})");
  CHECK(run_cli("analyze --input " + bad) == 1);

  std::string good = write_temp("c4.json",
                                R"({"group":[4],"connection_set":[[1],[3]]})");
  CHECK(run_cli("analyze --input " + good + " --verify-oracle") == 0);
}

TEST_CASE("cli json output is schema-valid") {
  std::string out = "/tmp/cospec_test_out.json";
  REQUIRE(run_cli("cubelike --dims 5 --verify-oracle --format json --output " +
                  out) == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  json doc = json::parse(in);
  std::string error;
  CHECK(validate_against_schema(doc, load_schema(), &error));
  CHECK(error.empty());
  CHECK(doc["command"] == "cubelike");
  CHECK(doc["verdicts"]["all"].get<bool>());
  CHECK(doc["oracle"]["ran"].get<bool>());
}

TEST_CASE("forced builds are marked and still analyzed") {
  AnalysisOptions options{false, 1};
  ReportData r = run_cubelike_analysis(make_cubelike_spec({5, 7}, true), options);
  CHECK(r.forced);
  json j = report_to_json(r);
  CHECK(j["construction"]["forced"].get<bool>());
  // The verdict machinery still reports honestly on forced input.
  CHECK(j["verdicts"]["prediction"].is_boolean());
}

}  // TEST_SUITE
