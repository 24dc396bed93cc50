#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conjposet/analysis.hpp"
#include "conjposet/verifier.hpp"

namespace conjposet {

using Json = nlohmann::ordered_json;

struct PosetSummary {
  std::string kind;
  std::size_t elements = 0;
  bool has_top = false;
  std::size_t hasse_edges = 0;
  std::vector<std::string> breaking_points;

  friend bool operator==(const PosetSummary&, const PosetSummary&) = default;
};

struct WitnessSubgroup {
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::vector<std::string> elements;

  friend bool operator==(const WitnessSubgroup&,
                         const WitnessSubgroup&) = default;
};

struct ClassCResult {
  bool member = false;
  std::optional<WitnessSubgroup> m;
  std::optional<WitnessSubgroup> n;
  std::optional<std::size_t> witness_count;

  friend bool operator==(const ClassCResult&, const ClassCResult&) = default;
};

struct AnalysisReport {
  std::string spec;
  std::size_t order = 0;
  std::vector<std::size_t> primes;
  bool is_abelian = false;
  bool is_cyclic = false;
  bool is_p_group = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_generalized_quaternion = false;
  std::size_t n_subgroups = 0;
  std::size_t n_classes = 0;
  std::vector<PosetSummary> posets;
  ClassCResult class_c;
  double timing_ms = 0.0;

  friend bool operator==(const AnalysisReport&,
                         const AnalysisReport&) = default;
};

AnalysisReport make_report(const GroupAnalysis& a, bool all_witnesses,
                           double timing_ms);

Json to_json(const AnalysisReport& r);
// Throws nlohmann::json::exception on schema mismatch.
AnalysisReport report_from_json(const Json& j);

Json to_json(const SuiteResult& s);
Json to_json(const std::vector<SuiteResult>& suites);

Json to_json(const std::vector<ScanRow>& rows);
// Header: spec,order,n_subgroups,n_classes,bp_L,bp_Lbar,bp_C,bp_Cbar,in_C,witnesses
std::string to_csv(const std::vector<ScanRow>& rows);

}  // namespace conjposet
