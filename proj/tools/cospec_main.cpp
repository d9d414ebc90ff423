// Command-line front end: construct instances, analyze custom graphs, run
// the numeric oracles, and emit JSON or text reports.
//
// Exit codes: 0 all verdicts true, 2 analysis completed with a failed
// verdict, 1 usage or validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cospec/report.hpp"
#include "cospec/selftest.hpp"

namespace {

struct CommonFlags {
  bool verify_oracle = false;
  std::string output;
  std::string format = "text";
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_oracle = true) {
  if (with_oracle)
    cmd->add_flag("--verify-oracle", flags.verify_oracle,
                  "Run the numeric oracle routes and include their verdict");
  cmd->add_option("--output", flags.output, "Write the report to this path");
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--threads", flags.threads,
                  "Worker threads for the character sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int emit_report(const cospec::ReportData& report, const CommonFlags& flags) {
  std::string payload = flags.format == "json"
                            ? cospec::report_to_json(report).dump(2) + "\n"
                            : cospec::report_to_text(report);
  if (flags.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(flags.output);
    if (!out) {
      std::cerr << "error: cannot open " << flags.output << " for writing\n";
      return 1;
    }
    out << payload;
  }
  return report.all_verdicts ? 0 : 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read input file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void check_analyze_guards(const cospec::CayleyGraph& x) {
  bool cubelike = true;
  for (std::uint64_t d : x.group.orders)
    if (d != 2) cubelike = false;
  if (cubelike) {
    if (x.group.rank() > 26)
      throw std::invalid_argument(
          "elementary abelian 2-group analysis capped at rank 26");
    return;
  }
  if (x.group.size > (std::uint64_t{1} << 20))
    throw std::invalid_argument("exact analysis capped at 2^20 vertices, got " +
                                std::to_string(x.group.size));
  if (x.group.exponent > (std::uint64_t{1} << 16))
    throw std::invalid_argument(
        "exact analysis capped at group exponent 2^16, got " +
        std::to_string(x.group.exponent));
}

cospec::CubelikeSpec spec_from_dims_or_levels(const std::vector<int>& dims,
                                              int levels, bool force) {
  if (!dims.empty() && levels > 0)
    throw std::invalid_argument("--dims and --levels are mutually exclusive");
  if (dims.empty() && levels <= 0)
    throw std::invalid_argument("one of --dims or --levels is required");
  return cospec::make_cubelike_spec(
      levels > 0 ? cospec::min_dims(levels) : dims, force);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Strongly cospectral subgroups of abelian Cayley graphs: exact "
      "constructions, spectra, and numeric cross-checks"};
  app.require_subcommand(1);

  // --- hetero ---------------------------------------------------------------
  auto* hetero = app.add_subcommand(
      "hetero", "Build and analyze a cyclic-block graph (one Z_{2^j} per "
                "exponent); verdict: computed subgroup equals the 2-torsion");
  std::vector<unsigned> exponents;
  CommonFlags hetero_flags;
  hetero->add_option("--exponents", exponents, "Distinct exponents j >= 3")
      ->required()
      ->delimiter(',');
  add_common(hetero, hetero_flags);

  // --- cubelike ---------------------------------------------------------
  auto* cubelike = app.add_subcommand(
      "cubelike", "Build and analyze a quadric-block graph over F2^n; "
                  "verdict: subgroup contains the span of the nuclei");
  std::vector<int> dims;
  int levels = 0;
  bool force = false;
  CommonFlags cubelike_flags;
  cubelike->add_option("--dims", dims, "Block dimensions (odd, increasing, >= 5)")
      ->delimiter(',');
  cubelike->add_option("--levels", levels,
                       "Use the smallest valid dimensions for k blocks");
  cubelike->add_flag("--force", force,
                     "Accept dimensions that fail the growth condition");
  add_common(cubelike, cubelike_flags);

  // --- analyze ----------------------------------------------------------
  auto* analyze = app.add_subcommand(
      "analyze", "Analyze a custom graph from a JSON file with \"group\" and "
                 "\"connection_set\"");
  std::string input;
  CommonFlags analyze_flags;
  analyze->add_option("--input", input, "Graph specification file")
      ->required();
  add_common(analyze, analyze_flags);

  // --- oracle -----------------------------------------------------------
  auto* oracle = app.add_subcommand(
      "oracle", "Run an analysis with the numeric oracle routes always on");
  std::vector<unsigned> oracle_exponents;
  std::vector<int> oracle_dims;
  int oracle_levels = 0;
  std::string oracle_input;
  CommonFlags oracle_flags;
  oracle->add_option("--exponents", oracle_exponents,
                     "Cyclic-block exponents")->delimiter(',');
  oracle->add_option("--dims", oracle_dims, "Quadric-block dimensions")
      ->delimiter(',');
  oracle->add_option("--levels", oracle_levels, "Quadric-block count");
  oracle->add_option("--input", oracle_input, "Graph specification file");
  add_common(oracle, oracle_flags, /*with_oracle=*/false);

  // --- selftest ---------------------------------------------------------
  auto* selftest = app.add_subcommand(
      "selftest", "Run the randomized property checks and report each one");
  std::uint64_t seed = cospec::kDefaultSeed;
  CommonFlags selftest_flags;
  selftest->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  selftest->add_option("--threads", selftest_flags.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--output", selftest_flags.output,
                       "Write the results to this path");
  selftest->add_option("--format", selftest_flags.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (hetero->parsed()) {
      unsigned total = 0;
      for (unsigned j : exponents) total += j;
      if (total > 25)
        throw std::invalid_argument(
            "exact analysis capped at 2^25 vertices; exponents sum to " +
            std::to_string(total));
      cospec::HeteroSpec spec = cospec::make_hetero_spec(exponents);
      cospec::AnalysisOptions options{hetero_flags.verify_oracle,
                                      hetero_flags.threads};
      return emit_report(cospec::run_hetero_analysis(spec, options),
                         hetero_flags);
    }

    if (cubelike->parsed()) {
      cospec::CubelikeSpec spec = spec_from_dims_or_levels(dims, levels, force);
      cospec::AnalysisOptions options{cubelike_flags.verify_oracle,
                                      cubelike_flags.threads};
      return emit_report(cospec::run_cubelike_analysis(spec, options),
                         cubelike_flags);
    }

    if (analyze->parsed()) {
      cospec::CayleyGraph x = cospec::parse_graph_spec(read_file(input));
      check_analyze_guards(x);
      cospec::AnalysisOptions options{analyze_flags.verify_oracle,
                                      analyze_flags.threads};
      return emit_report(cospec::run_graph_analysis(x, options, "analyze"),
                         analyze_flags);
    }

    if (oracle->parsed()) {
      int selectors = (!oracle_exponents.empty() ? 1 : 0) +
                      (!oracle_dims.empty() || oracle_levels > 0 ? 1 : 0) +
                      (!oracle_input.empty() ? 1 : 0);
      if (selectors != 1)
        throw std::invalid_argument(
            "pick exactly one of --exponents, --dims/--levels, --input");
      cospec::AnalysisOptions options{true, oracle_flags.threads};
      cospec::ReportData report;
      if (!oracle_exponents.empty()) {
        unsigned total = 0;
        for (unsigned j : oracle_exponents) total += j;
        if (total > 25)
          throw std::invalid_argument(
              "exact analysis capped at 2^25 vertices; exponents sum to " +
              std::to_string(total));
        report = cospec::run_hetero_analysis(
            cospec::make_hetero_spec(oracle_exponents), options);
      } else if (!oracle_dims.empty() || oracle_levels > 0) {
        report = cospec::run_cubelike_analysis(
            spec_from_dims_or_levels(oracle_dims, oracle_levels, false),
            options);
      } else {
        cospec::CayleyGraph x =
            cospec::parse_graph_spec(read_file(oracle_input));
        check_analyze_guards(x);
        report = cospec::run_graph_analysis(x, options, "oracle");
      }
      report.command = "oracle";
      return emit_report(report, oracle_flags);
    }

    if (selftest->parsed()) {
      std::vector<cospec::SelftestResult> results =
          cospec::run_selftest(seed, selftest_flags.threads);
      bool all = true;
      std::ostringstream os;
      if (selftest_flags.format == "json") {
        nlohmann::json j;
        j["seed"] = seed;
        j["results"] = nlohmann::json::array();
        for (const auto& r : results) {
          all = all && r.pass;
          nlohmann::json row;
          row["name"] = r.name;
          row["pass"] = r.pass;
          row["detail"] = r.detail;
          j["results"].push_back(row);
        }
        j["all_pass"] = all;
        os << j.dump(2) << "\n";
      } else {
        os << "seed: " << seed << "\n";
        for (const auto& r : results) {
          all = all && r.pass;
          os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
             << "\n";
        }
        os << (all ? "all properties hold" : "PROPERTY FAILURES") << "\n";
      }
      if (selftest_flags.output.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream out(selftest_flags.output);
        if (!out) {
          std::cerr << "error: cannot open " << selftest_flags.output << "\n";
          return 1;
        }
        out << os.str();
      }
      return all ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
