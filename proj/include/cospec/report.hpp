#pragma once
// Analysis drivers and report assembly: run a construction or a custom
// graph end to end, collect the spectral/subgroup/oracle results, and
// render them as JSON (schema in schemas/report.schema.json) or as text.
// Both renderings carry the same numeric content.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cospec/cubelike.hpp"
#include "cospec/hetero.hpp"
#include "cospec/oracle.hpp"
#include "cospec/spectral.hpp"

namespace cospec {

struct AnalysisOptions {
  bool verify_oracle = false;
  int threads = 1;
};

struct ClassReport {
  std::string value;         // exact rendering
  double value_numeric = 0;  // evaluation at the root of unity
  std::uint64_t multiplicity = 0;
};

struct PredictionReport {
  std::string description;
  std::uint64_t order = 0;
  std::vector<std::vector<std::uint64_t>> generators;
  bool contained = false;
  bool equal = false;
  bool strict_containment = false;
};

struct OracleReport {
  bool requested = false;
  bool ran = false;
  std::string skipped_reason;
  bool character_path_agrees = false;
  bool dense_path_ran = false;
  bool dense_path_agrees = false;
  double max_eigenvalue_deviation = 0.0;
  std::string detail;
};

struct DeterminationReport {
  bool computed = false;
  bool holds = false;
  std::uint64_t distinct_totals = 0;
};

struct ReportData {
  std::string command;  // hetero | cubelike | analyze | oracle

  // Construction metadata.
  std::string construction_kind;  // heterocyclic | cubelike | custom
  std::vector<unsigned> exponents;
  std::vector<int> dims;
  bool forced = false;
  bool is_cubelike = false;  // enables hex rendering of elements

  // Graph.
  std::vector<std::uint64_t> group_orders;
  std::uint64_t group_size = 0;
  std::uint64_t group_exponent = 0;
  std::uint64_t connection_size = 0;
  std::vector<std::vector<std::uint64_t>> connection_set;  // echoed if small
  bool connection_echoed = false;
  int connected = -1;  // 1 yes, 0 no, -1 not computed

  // Spectrum.
  std::string spectral_path;  // exact-cyclotomic | fast-transform
  std::uint64_t class_count = 0;
  std::vector<ClassReport> classes;
  bool classes_truncated = false;

  // Strongly cospectral subgroup.
  std::uint64_t sc_order = 0;
  std::vector<std::vector<std::uint64_t>> sc_generators;
  std::vector<std::vector<std::uint64_t>> sc_elements;  // capped at 64
  bool sc_elements_truncated = false;

  bool has_prediction = false;
  PredictionReport prediction;
  OracleReport oracle;
  DeterminationReport determination;

  bool prediction_verdict = true;  // meaningful iff has_prediction
  bool oracle_verdict = true;      // meaningful iff oracle ran
  bool all_verdicts = true;

  double build_ms = 0, spectrum_ms = 0, sc_ms = 0, oracle_ms = 0;
};

// End-to-end drivers.  The hetero driver predicts the full two-torsion and
// verdicts on equality; the cubelike driver predicts the span of the
// embedded nuclei and verdicts on containment, flagging strictness.
ReportData run_hetero_analysis(const HeteroSpec& spec,
                               const AnalysisOptions& options);
ReportData run_cubelike_analysis(const CubelikeSpec& spec,
                                 const AnalysisOptions& options);
// Generic driver for a custom graph; `command` names the invoking command.
ReportData run_graph_analysis(const CayleyGraph& x,
                              const AnalysisOptions& options,
                              const std::string& command);

// Parses {"group": [...], "connection_set": [[...], ...]} with field-level
// diagnostics (std::invalid_argument).
CayleyGraph parse_graph_spec(const std::string& json_text);

nlohmann::json report_to_json(const ReportData& report);
std::string report_to_text(const ReportData& report);

// Minimal JSON-Schema subset validator (type, enum, required, properties,
// items, additionalProperties) — enough for the shipped report schema.
bool validate_against_schema(const nlohmann::json& value,
                             const nlohmann::json& schema, std::string* error);

}  // namespace cospec
