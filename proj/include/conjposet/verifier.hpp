#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjposet/analysis.hpp"

namespace conjposet {

// Builds and memoizes analyses by canonical spec string.
class AnalysisCache {
 public:
  explicit AnalysisCache(Limits limits = {}) : limits_(limits) {}

  const GroupAnalysis& get(std::string_view spec);
  const Limits& limits() const { return limits_; }

 private:
  Limits limits_;
  std::map<std::string, std::unique_ptr<GroupAnalysis>, std::less<>> cache_;
};

struct CaseRecord {
  std::string group;
  std::string claim;
  std::string computed;
  std::string expected;
  bool passed = false;
  std::vector<std::string> witnesses;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseRecord> cases;

  bool passed() const;
};

// Pinned catalog of group specs used by the suites and property tests.
const std::vector<std::string>& catalog();

// Groups in the catalog expected to have breaking points in Lbar.
const std::vector<std::string>& breaking_point_groups();
// Groups in the catalog expected to have none.
const std::vector<std::string>& non_breaking_point_groups();

SuiteResult verify_theorem1(AnalysisCache& cache);
SuiteResult verify_corollary3(AnalysisCache& cache);
SuiteResult verify_prop4_prop5(AnalysisCache& cache);
SuiteResult verify_theorem6_and_corollaries(AnalysisCache& cache);
SuiteResult verify_theorem9(AnalysisCache& cache);

// theorem1, corollary3, prop4-5, theorem6, theorem9
const std::vector<std::string>& suite_names();
// nullopt for an unknown name.
std::optional<SuiteResult> run_suite(std::string_view name,
                                     AnalysisCache& cache);

struct ScanRow {
  std::string spec;
  std::size_t order = 0;
  bool skipped = false;
  std::string skip_reason;
  std::size_t n_subgroups = 0;
  std::size_t n_classes = 0;
  bool bp_L = false;
  bool bp_Lbar = false;
  bool bp_C = false;
  bool bp_Cbar = false;
  bool in_C = false;
  std::size_t witnesses = 0;
  StructureProfile profile;
};

// cyclic, abelian, dihedral, dicyclic, modular, semidihedral, symmetric,
// alternating, zm
const std::vector<std::string>& scan_family_names();

// Specs of a family with order <= max_order, in parameter order.
// Throws std::invalid_argument for an unknown family.
std::vector<std::string> family_members(std::string_view family,
                                        std::size_t max_order);

// One row per group of the selected families (all when empty), sorted by
// order then spec. Groups hitting a cap are reported as skipped.
std::vector<ScanRow> scan_class_c(std::size_t max_order,
                                  const std::vector<std::string>& families,
                                  const Limits& limits = {});

}  // namespace conjposet
