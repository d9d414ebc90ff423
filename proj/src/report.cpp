#include "cospec/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cospec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

constexpr std::uint64_t kEchoCap = 4096;     // connection-set echo
constexpr std::uint64_t kClassCap = 4096;    // class table rows
constexpr std::uint64_t kElementCap = 64;    // subgroup element listing

std::vector<std::uint64_t> mask_to_tuple(std::uint64_t mask, int n) {
  std::vector<std::uint64_t> tuple(n);
  for (int b = 0; b < n; ++b) tuple[b] = (mask >> b) & 1;
  return tuple;
}

std::uint64_t tuple_to_mask(const std::vector<std::uint64_t>& tuple) {
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < tuple.size(); ++b)
    if (tuple[b]) mask |= std::uint64_t{1} << b;
  return mask;
}

bool all_factors_order_two(const AbelianGroup& g) {
  for (std::uint64_t d : g.orders)
    if (d != 2) return false;
  return true;
}

void fill_graph_section(ReportData& report, const CayleyGraph& x) {
  report.group_orders = x.group.orders;
  report.group_size = x.group.size;
  report.group_exponent = x.group.exponent;
  report.connection_size = x.connection_set.size();
  if (x.connection_set.size() <= kEchoCap) {
    report.connection_echoed = true;
    for (const GroupElement& s : x.connection_set)
      report.connection_set.push_back(s.coords);
  }
}

void fill_connectivity(ReportData& report, const CayleyGraph& x) {
  // Informational only; skip when the closure walk would be expensive.
  if (x.group.size > 65536 || x.connection_set.size() > 1024) return;
  Subgroup closure = subgroup_generated(x.group, x.connection_set);
  report.connected = closure.order == x.group.size ? 1 : 0;
}

void fill_classes_exact(ReportData& report,
                        const std::vector<EigenvalueClass>& classes) {
  report.spectral_path = "exact-cyclotomic";
  report.class_count = classes.size();
  for (const EigenvalueClass& c : classes) {
    if (report.classes.size() >= kClassCap) {
      report.classes_truncated = true;
      break;
    }
    report.classes.push_back(ClassReport{
        to_string(c.value), to_complex(c.value).real(), c.multiplicity});
  }
}

void fill_sc_section(ReportData& report, const Subgroup& sc) {
  report.sc_order = sc.order;
  for (const GroupElement& g : sc.generators)
    report.sc_generators.push_back(g.coords);
  for (const GroupElement& e : sc.elements) {
    if (report.sc_elements.size() >= kElementCap) {
      report.sc_elements_truncated = true;
      break;
    }
    report.sc_elements.push_back(e.coords);
  }
}

void fill_oracle_section(ReportData& report, const CayleyGraph& x,
                         const std::vector<EigenvalueClass>& classes,
                         const Subgroup& sc) {
  report.oracle.requested = true;
  if (x.group.size > 65536) {
    report.oracle.skipped_reason =
        "oracle routes capped at 65536 vertices, graph has " +
        std::to_string(x.group.size);
    return;
  }
  OracleComparison cmp = compare_with_oracles(x, classes, sc);
  report.oracle.ran = true;
  report.oracle.character_path_agrees = cmp.character_path_agrees;
  report.oracle.dense_path_ran = cmp.dense_path_ran;
  report.oracle.dense_path_agrees = cmp.dense_path_agrees;
  report.oracle.max_eigenvalue_deviation = cmp.max_eigenvalue_deviation;
  report.oracle.detail = cmp.detail;
  report.oracle_verdict =
      cmp.character_path_agrees && (!cmp.dense_path_ran || cmp.dense_path_agrees);
}

void finalize_verdicts(ReportData& report) {
  report.all_verdicts = true;
  if (report.has_prediction && !report.prediction_verdict)
    report.all_verdicts = false;
  if (report.oracle.ran && !report.oracle_verdict)
    report.all_verdicts = false;
}

// Shared tail of the generic exact route: spectrum, subgroup, oracle.
void analyze_exact(ReportData& report, const CayleyGraph& x,
                   const AnalysisOptions& options) {
  Clock::time_point t0 = Clock::now();
  std::vector<EigenvalueClass> classes = eigenvalue_classes(x, options.threads);
  report.spectrum_ms = ms_since(t0);
  fill_classes_exact(report, classes);

  t0 = Clock::now();
  Subgroup sc = strongly_cospectral_subgroup(x.group, classes);
  report.sc_ms = ms_since(t0);
  fill_sc_section(report, sc);

  if (report.has_prediction) {
    // Prediction generators were stored before analysis; compare as sets.
    Subgroup predicted = subgroup_generated(
        x.group,
        [&] {
          std::vector<GroupElement> gens;
          for (const auto& t : report.prediction.generators)
            gens.push_back(GroupElement{t});
          return gens;
        }());
    report.prediction.order = predicted.order;
    report.prediction.contained =
        std::includes(sc.elements.begin(), sc.elements.end(),
                      predicted.elements.begin(), predicted.elements.end());
    report.prediction.equal = predicted.elements == sc.elements;
    report.prediction.strict_containment =
        report.prediction.contained && !report.prediction.equal;
  }

  if (options.verify_oracle) {
    t0 = Clock::now();
    fill_oracle_section(report, x, classes, sc);
    report.oracle_ms = ms_since(t0);
  }
}

// Fast route for elementary abelian 2-groups; takes the connection-set
// indicator and transforms it in place.
void analyze_cubelike_masks(ReportData& report, int n,
                            std::vector<std::int32_t> indicator,
                            const AnalysisOptions& options) {
  Clock::time_point t0 = Clock::now();
  wht_inplace(indicator);
  CubelikeSpectralSummary summary =
      summarize_cubelike_spectrum(n, std::move(indicator));
  report.spectrum_ms = ms_since(t0);

  report.spectral_path = "fast-transform";
  report.class_count = summary.class_multiplicities.size();
  for (auto [value, mult] : summary.class_multiplicities) {
    if (report.classes.size() >= kClassCap) {
      report.classes_truncated = true;
      break;
    }
    report.classes.push_back(ClassReport{std::to_string(value),
                                         static_cast<double>(value), mult});
  }

  t0 = Clock::now();
  report.sc_order = summary.sc_order;
  for (std::uint64_t g : summary.sc_generators)
    report.sc_generators.push_back(mask_to_tuple(g, n));
  if (summary.sc_order <= kElementCap) {
    for (std::uint64_t e : f2::span_elements(summary.sc_generators))
      report.sc_elements.push_back(mask_to_tuple(e, n));
  } else {
    std::vector<std::uint64_t> all = f2::span_elements(
        summary.sc_generators, std::uint64_t{1} << 20);
    for (std::uint64_t e : all) {
      if (report.sc_elements.size() >= kElementCap) break;
      report.sc_elements.push_back(mask_to_tuple(e, n));
    }
    report.sc_elements_truncated = true;
  }
  report.sc_ms = ms_since(t0);

  if (report.has_prediction) {
    f2::Basis sc_span;
    for (std::uint64_t g : summary.sc_generators) sc_span.insert(g);
    bool contained = true;
    f2::Basis predicted_span;
    for (const auto& t : report.prediction.generators) {
      std::uint64_t mask = tuple_to_mask(t);
      predicted_span.insert(mask);
      if (!sc_span.contains(mask)) contained = false;
    }
    report.prediction.order = std::uint64_t{1} << predicted_span.rank();
    report.prediction.contained = contained;
    report.prediction.equal =
        contained && report.prediction.order == summary.sc_order;
    report.prediction.strict_containment =
        report.prediction.contained && !report.prediction.equal;
  }
}

}  // namespace

ReportData run_graph_analysis(const CayleyGraph& x,
                              const AnalysisOptions& options,
                              const std::string& command) {
  ReportData report;
  report.command = command;
  report.construction_kind = "custom";
  fill_graph_section(report, x);
  fill_connectivity(report, x);

  if (all_factors_order_two(x.group) && x.group.rank() <= 26) {
    report.is_cubelike = true;
    const int n = static_cast<int>(x.group.rank());
    std::vector<std::int32_t> indicator(std::size_t{1} << n, 0);
    for (const GroupElement& s : x.connection_set)
      indicator[tuple_to_mask(s.coords)] = 1;
    analyze_cubelike_masks(report, n, indicator, options);
    if (options.verify_oracle) {
      // The oracle needs the exact class decomposition; rebuild it on the
      // generic route (only reachable for |G| <= 65536).
      Clock::time_point t0 = Clock::now();
      if (x.group.size > 65536) {
        report.oracle.requested = true;
        report.oracle.skipped_reason =
            "oracle routes capped at 65536 vertices, graph has " +
            std::to_string(x.group.size);
      } else {
        std::vector<EigenvalueClass> classes =
            eigenvalue_classes(x, options.threads);
        Subgroup sc = strongly_cospectral_subgroup(x.group, classes);
        fill_oracle_section(report, x, classes, sc);
      }
      report.oracle_ms = ms_since(t0);
    }
  } else {
    analyze_exact(report, x, options);
  }
  finalize_verdicts(report);
  return report;
}

ReportData run_hetero_analysis(const HeteroSpec& spec,
                               const AnalysisOptions& options) {
  ReportData report;
  report.command = "hetero";
  report.construction_kind = "heterocyclic";
  report.exponents = spec.exponents;

  Clock::time_point t0 = Clock::now();
  CayleyGraph x = build_hetero(spec);
  Subgroup predicted = predicted_sc_subgroup(spec);
  report.build_ms = ms_since(t0);

  fill_graph_section(report, x);
  fill_connectivity(report, x);
  report.has_prediction = true;
  report.prediction.description = "full two-torsion";
  for (const GroupElement& g : predicted.generators)
    report.prediction.generators.push_back(g.coords);

  analyze_exact(report, x, options);
  report.prediction_verdict = report.prediction.equal;
  finalize_verdicts(report);
  return report;
}

ReportData run_cubelike_analysis(const CubelikeSpec& spec,
                                 const AnalysisOptions& options) {
  ReportData report;
  report.command = "cubelike";
  report.construction_kind = "cubelike";
  report.dims = spec.dims;
  report.forced = !spec.ebound_ok;
  report.is_cubelike = true;

  Clock::time_point t0 = Clock::now();
  CubelikeBuild build = build_cubelike(spec);
  report.build_ms = ms_since(t0);
  if (build.n > 26)
    throw std::invalid_argument("total dimension " + std::to_string(build.n) +
                                " exceeds the analysis cap of 26");

  report.group_orders.assign(build.n, 2);
  report.group_size = std::uint64_t{1} << build.n;
  report.group_exponent = 2;
  report.connection_size = build.connection_size;
  if (build.masks_materialized && build.connection_size <= kEchoCap) {
    report.connection_echoed = true;
    for (std::uint64_t m : build.connection_masks)
      report.connection_set.push_back(mask_to_tuple(m, build.n));
  }
  {
    f2::Basis span;
    int rank = 0;
    for_each_connection_mask(build, [&](std::uint64_t m) {
      if (rank < build.n && span.insert(m)) ++rank;
    });
    report.connected = rank == build.n ? 1 : 0;
  }

  report.has_prediction = true;
  report.prediction.description = "span of embedded nuclei";
  for (const F2Vector& p : build.predicted_generators)
    report.prediction.generators.push_back(mask_to_tuple(p.bits, build.n));

  analyze_cubelike_masks(report, build.n, connection_indicator(build),
                         options);
  report.prediction_verdict = report.prediction.contained;

  DeterminationResult det = determination_check(build);
  report.determination.computed = true;
  report.determination.holds = det.holds;
  report.determination.distinct_totals = det.distinct_totals;

  if (options.verify_oracle) {
    t0 = Clock::now();
    if (report.group_size > 65536) {
      report.oracle.requested = true;
      report.oracle.skipped_reason =
          "oracle routes capped at 65536 vertices, graph has " +
          std::to_string(report.group_size);
    } else {
      CayleyGraph x = to_cayley_graph(build);
      std::vector<EigenvalueClass> classes =
          eigenvalue_classes(x, options.threads);
      Subgroup sc = strongly_cospectral_subgroup(x.group, classes);
      fill_oracle_section(report, x, classes, sc);
    }
    report.oracle_ms = ms_since(t0);
  }
  finalize_verdicts(report);
  return report;
}

CayleyGraph parse_graph_spec(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("top-level value must be an object");
  if (!doc.contains("group"))
    throw std::invalid_argument("missing required key \"group\"");
  if (!doc.contains("connection_set"))
    throw std::invalid_argument("missing required key \"connection_set\"");
  for (const auto& [key, value] : doc.items())
    if (key != "group" && key != "connection_set")
      throw std::invalid_argument("unknown key \"" + key + "\"");

  const nlohmann::json& group = doc["group"];
  if (!group.is_array() || group.empty())
    throw std::invalid_argument("\"group\" must be a nonempty array of orders");
  std::vector<std::uint64_t> orders;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!group[i].is_number_unsigned())
      throw std::invalid_argument("group[" + std::to_string(i) +
                                  "] must be a positive integer");
    orders.push_back(group[i].get<std::uint64_t>());
  }
  AbelianGroup g = make_group(orders);

  const nlohmann::json& set = doc["connection_set"];
  if (!set.is_array())
    throw std::invalid_argument("\"connection_set\" must be an array of tuples");
  std::vector<GroupElement> elements;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!set[i].is_array() || set[i].size() != orders.size())
      throw std::invalid_argument(
          "connection_set[" + std::to_string(i) + "] must be a tuple of " +
          std::to_string(orders.size()) + " residues");
    GroupElement e;
    for (std::size_t j = 0; j < set[i].size(); ++j) {
      if (!set[i][j].is_number_unsigned())
        throw std::invalid_argument("connection_set[" + std::to_string(i) +
                                    "][" + std::to_string(j) +
                                    "] must be a nonnegative integer");
      e.coords.push_back(set[i][j].get<std::uint64_t>());
    }
    check_element(g, e);  // residue-range diagnostics
    elements.push_back(std::move(e));
  }
  return make_cayley_graph(g, std::move(elements));
}

namespace {

nlohmann::json tuples_to_json(
    const std::vector<std::vector<std::uint64_t>>& tuples) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : tuples) out.push_back(t);
  return out;
}

nlohmann::json hex_list(const std::vector<std::vector<std::uint64_t>>& tuples) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : tuples) {
    F2Vector v{tuple_to_mask(t), static_cast<int>(t.size())};
    out.push_back(hex_string(v));
  }
  return out;
}

}  // namespace

nlohmann::json report_to_json(const ReportData& report) {
  nlohmann::json j;
  j["command"] = report.command;

  nlohmann::json construction;
  construction["kind"] = report.construction_kind;
  if (!report.exponents.empty()) construction["exponents"] = report.exponents;
  if (!report.dims.empty()) construction["dims"] = report.dims;
  construction["forced"] = report.forced;
  j["construction"] = construction;

  nlohmann::json graph;
  graph["group"] = report.group_orders;
  graph["size"] = report.group_size;
  graph["exponent"] = report.group_exponent;
  graph["connection_set_size"] = report.connection_size;
  graph["connection_set"] = report.connection_echoed
                                ? tuples_to_json(report.connection_set)
                                : nlohmann::json();
  graph["connected"] = report.connected < 0 ? nlohmann::json()
                                            : nlohmann::json(report.connected == 1);
  j["graph"] = graph;

  nlohmann::json spectrum;
  spectrum["path"] = report.spectral_path;
  spectrum["class_count"] = report.class_count;
  nlohmann::json classes = nlohmann::json::array();
  for (const ClassReport& c : report.classes) {
    nlohmann::json row;
    row["value"] = c.value;
    row["value_numeric"] = c.value_numeric;
    row["multiplicity"] = c.multiplicity;
    classes.push_back(row);
  }
  spectrum["classes"] = classes;
  spectrum["classes_truncated"] = report.classes_truncated;
  j["spectrum"] = spectrum;

  nlohmann::json sc;
  sc["order"] = report.sc_order;
  sc["generators"] = tuples_to_json(report.sc_generators);
  sc["elements"] = tuples_to_json(report.sc_elements);
  sc["elements_truncated"] = report.sc_elements_truncated;
  if (report.is_cubelike) {
    sc["generators_hex"] = hex_list(report.sc_generators);
    sc["elements_hex"] = hex_list(report.sc_elements);
  }
  j["sc_subgroup"] = sc;

  if (report.has_prediction) {
    nlohmann::json p;
    p["description"] = report.prediction.description;
    p["order"] = report.prediction.order;
    p["generators"] = tuples_to_json(report.prediction.generators);
    if (report.is_cubelike)
      p["generators_hex"] = hex_list(report.prediction.generators);
    p["contained"] = report.prediction.contained;
    p["equal"] = report.prediction.equal;
    p["strict_containment"] = report.prediction.strict_containment;
    j["prediction"] = p;
  } else {
    j["prediction"] = nlohmann::json();
  }

  if (report.oracle.requested) {
    nlohmann::json o;
    o["ran"] = report.oracle.ran;
    if (report.oracle.ran) {
      o["character_path_agrees"] = report.oracle.character_path_agrees;
      o["dense_path_ran"] = report.oracle.dense_path_ran;
      o["dense_path_agrees"] = report.oracle.dense_path_agrees;
      o["max_eigenvalue_deviation"] = report.oracle.max_eigenvalue_deviation;
      o["detail"] = report.oracle.detail;
    } else {
      o["skipped_reason"] = report.oracle.skipped_reason;
    }
    j["oracle"] = o;
  } else {
    j["oracle"] = nlohmann::json();
  }

  if (report.determination.computed) {
    nlohmann::json d;
    d["holds"] = report.determination.holds;
    d["distinct_totals"] = report.determination.distinct_totals;
    j["determination"] = d;
  } else {
    j["determination"] = nlohmann::json();
  }

  nlohmann::json verdicts;
  verdicts["prediction"] = report.has_prediction
                               ? nlohmann::json(report.prediction_verdict)
                               : nlohmann::json();
  verdicts["oracle"] = report.oracle.ran ? nlohmann::json(report.oracle_verdict)
                                         : nlohmann::json();
  verdicts["all"] = report.all_verdicts;
  j["verdicts"] = verdicts;

  nlohmann::json timing;
  timing["build"] = report.build_ms;
  timing["spectrum"] = report.spectrum_ms;
  timing["sc"] = report.sc_ms;
  timing["oracle"] = report.oracle_ms;
  j["timing_ms"] = timing;
  return j;
}

namespace {

std::string render_tuple(const std::vector<std::uint64_t>& t, bool hex) {
  std::string s = to_string(GroupElement{t});
  if (hex)
    s = hex_string(F2Vector{tuple_to_mask(t), static_cast<int>(t.size())}) +
        " = " + s;
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report_to_text(const ReportData& report) {
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  os << "construction: " << report.construction_kind;
  if (!report.exponents.empty()) {
    os << " exponents {";
    for (std::size_t i = 0; i < report.exponents.size(); ++i)
      os << (i ? "," : "") << report.exponents[i];
    os << "}";
  }
  if (!report.dims.empty()) {
    os << " dims [";
    for (std::size_t i = 0; i < report.dims.size(); ++i)
      os << (i ? "," : "") << report.dims[i];
    os << "]";
  }
  if (report.forced) os << " (growth condition not met; forced)";
  os << "\n";

  os << "group:";
  for (std::uint64_t d : report.group_orders) os << " Z" << d;
  os << "  (size " << report.group_size << ", exponent "
     << report.group_exponent << ")\n";
  os << "connection set: " << report.connection_size << " elements\n";
  os << "connected: "
     << (report.connected < 0 ? "not computed" : yes_no(report.connected == 1))
     << "\n";

  os << "spectral path: " << report.spectral_path << "\n";
  os << "eigenvalue classes: " << report.class_count
     << (report.classes_truncated ? " (table truncated)" : "") << "\n";
  std::size_t value_width = 5;
  for (const ClassReport& c : report.classes)
    value_width = std::max(value_width, c.value.size());
  for (const ClassReport& c : report.classes) {
    os << "  " << c.value << std::string(value_width - c.value.size(), ' ')
       << "  x" << c.multiplicity << "  (~" << c.value_numeric << ")\n";
  }

  os << "strongly cospectral subgroup: order " << report.sc_order << "\n";
  os << "  generators:";
  for (const auto& t : report.sc_generators)
    os << " " << render_tuple(t, report.is_cubelike);
  os << "\n  elements:";
  for (const auto& t : report.sc_elements)
    os << " " << render_tuple(t, report.is_cubelike);
  if (report.sc_elements_truncated) os << " ... (truncated at 64)";
  os << "\n";

  if (report.has_prediction) {
    os << "prediction: " << report.prediction.description << ", order "
       << report.prediction.order << "; generators:";
    for (const auto& t : report.prediction.generators)
      os << " " << render_tuple(t, report.is_cubelike);
    os << "; contained: " << yes_no(report.prediction.contained)
       << ", equal: " << yes_no(report.prediction.equal);
    if (report.prediction.strict_containment)
      os << " (strict containment: computed subgroup is larger)";
    os << "\n";
  }

  if (report.determination.computed)
    os << "determination: " << yes_no(report.determination.holds) << " ("
       << report.determination.distinct_totals << " distinct section totals)\n";

  if (report.oracle.requested) {
    if (!report.oracle.ran) {
      os << "oracle: skipped (" << report.oracle.skipped_reason << ")\n";
    } else {
      os << "oracle: character path agrees: "
         << yes_no(report.oracle.character_path_agrees);
      if (report.oracle.dense_path_ran)
        os << "; dense path agrees: " << yes_no(report.oracle.dense_path_agrees)
           << "; max eigenvalue deviation " << report.oracle.max_eigenvalue_deviation;
      else
        os << "; dense path skipped";
      if (!report.oracle.detail.empty()) os << "; " << report.oracle.detail;
      os << "\n";
    }
  }

  os << "verdicts:";
  if (report.has_prediction)
    os << " prediction " << (report.prediction_verdict ? "ok" : "FAILED") << ";";
  if (report.oracle.ran)
    os << " oracle " << (report.oracle_verdict ? "ok" : "FAILED") << ";";
  os << (report.all_verdicts ? " ALL OK" : " FAILED") << "\n";

  os << "timing: build " << report.build_ms << " ms, spectrum "
     << report.spectrum_ms << " ms, subgroup " << report.sc_ms
     << " ms, oracle " << report.oracle_ms << " ms\n";
  return os.str();
}

namespace {

bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

bool validate_node(const nlohmann::json& value, const nlohmann::json& schema,
                   const std::string& path, std::string* error) {
  auto fail = [&](const std::string& reason) {
    if (error) *error = path + ": " + reason;
    return false;
  };

  if (schema.contains("type")) {
    const nlohmann::json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const auto& option : t)
        if (type_matches(value, option.get<std::string>())) ok = true;
    }
    if (!ok) return fail("type mismatch, got " + std::string(value.type_name()));
  }

  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& option : schema["enum"])
      if (option == value) ok = true;
    if (!ok) return fail("value not in enum");
  }

  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key \"" + key.get<std::string>() + "\"");
    const nlohmann::json* props =
        schema.contains("properties") ? &schema["properties"] : nullptr;
    for (const auto& [key, sub] : value.items()) {
      if (props && props->contains(key)) {
        if (!validate_node(sub, (*props)[key], path + "." + key, error))
          return false;
      } else if (schema.contains("additionalProperties")) {
        const nlohmann::json& extra = schema["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>())
          return fail("unexpected key \"" + key + "\"");
        if (extra.is_object() &&
            !validate_node(sub, extra, path + "." + key, error))
          return false;
      }
    }
  }

  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!validate_node(value[i], schema["items"],
                         path + "[" + std::to_string(i) + "]", error))
        return false;
  }
  return true;
}

}  // namespace

bool validate_against_schema(const nlohmann::json& value,
                             const nlohmann::json& schema, std::string* error) {
  return validate_node(value, schema, "$", error);
}

}  // namespace cospec
