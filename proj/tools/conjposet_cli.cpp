// conjposet: build groups, analyze subgroup posets, run the verification
// suites and scan families for class-C membership.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or spec error,
// 3 resource cap exceeded.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conjposet/analysis.hpp"
#include "conjposet/errors.hpp"
#include "conjposet/group_spec.hpp"
#include "conjposet/poset.hpp"
#include "conjposet/report.hpp"
#include "conjposet/verifier.hpp"

namespace {

using namespace conjposet;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        width[i] = std::max(width[i], display_width(r[i]));
      }
    }
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << r[i];
        if (i + 1 < r.size()) {
          os << std::string(width[i] - display_width(r[i]) + 2, ' ');
        }
      }
      os << "\n";
    }
  }

 private:
  // Counts UTF-8 code points so that "×" aligns.
  static std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(
        s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  }

  std::vector<std::vector<std::string>> rows_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += v[i];
  }
  return out;
}

struct CapOptions {
  std::size_t max_order = 512;
  std::size_t max_subgroups = 100000;

  Limits limits() const { return {max_order, max_subgroups}; }
};

void add_cap_options(CLI::App* cmd, CapOptions& caps) {
  cmd->add_option("--max-order", caps.max_order, "Largest group order allowed")
      ->envname("CONJPOSET_MAX_ORDER")
      ->capture_default_str();
  cmd->add_option("--max-subgroups", caps.max_subgroups,
                  "Largest subgroup count allowed")
      ->envname("CONJPOSET_MAX_SUBGROUPS")
      ->capture_default_str();
}

int cmd_build(const std::string& spec, const CapOptions& caps) {
  const GroupTable g = build_group(spec, caps.limits());
  const ValidationResult v = validate_group(g);
  std::cout << "spec   " << g.spec() << "\n"
            << "order  " << g.order() << "\n"
            << "valid  " << (v.ok() ? "yes" : "no: " + v.message) << "\n\n";
  Table t({"index", "label", "order", "inverse"});
  for (Element a = 0; a < g.order(); ++a) {
    t.add({std::to_string(a), g.label(a), std::to_string(element_order(g, a)),
           std::to_string(g.inv(a))});
  }
  t.print(std::cout);
  return v.ok() ? 0 : kExitVerifyFailed;
}

struct AnalyzeOptions {
  std::string spec;
  std::string json_path;
  std::string dot_path;
  std::string poset = "Lbar";
  bool all_witnesses = false;
  CapOptions caps;
};

int cmd_analyze(const AnalyzeOptions& opt) {
  const auto kind = parse_poset_kind(opt.poset);
  if (!kind) {
    std::cerr << "unknown poset '" << opt.poset << "' (L, Lbar, C, Cbar)\n";
    return kExitUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  GroupAnalysis a(build_group(opt.spec, opt.caps.limits()), opt.caps.limits());
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  const AnalysisReport r = make_report(a, opt.all_witnesses, ms);

  std::vector<std::string> primes;
  for (auto p : r.primes) primes.push_back(std::to_string(p));
  std::cout << "spec          " << r.spec << "\n"
            << "order         " << r.order << "\n"
            << "primes        " << join(primes, ",") << "\n"
            << "subgroups     " << r.n_subgroups << "\n"
            << "classes       " << r.n_classes << "\n"
            << "abelian       " << r.is_abelian << "\n"
            << "cyclic        " << r.is_cyclic << "\n"
            << "nilpotent     " << r.is_nilpotent << "\n"
            << "solvable      " << r.is_solvable << "\n"
            << "gen. quat.    " << r.is_generalized_quaternion << "\n\n";
  Table t({"poset", "elements", "top", "breaking points"});
  for (const auto& p : r.posets) {
    t.add({p.kind, std::to_string(p.elements), p.has_top ? "yes" : "no",
           p.breaking_points.empty() ? "-" : join(p.breaking_points, " ")});
  }
  t.print(std::cout);
  std::cout << "\nin class C    " << (r.class_c.member ? "yes" : "no") << "\n";
  if (r.class_c.m) {
    std::cout << "witness M     o" << r.class_c.m->order << " {"
              << join(r.class_c.m->elements, ",") << "}\n"
              << "witness N     o" << r.class_c.n->order << " {"
              << join(r.class_c.n->elements, ",") << "}\n";
  }
  if (r.class_c.witness_count) {
    std::cout << "witness pairs " << *r.class_c.witness_count << "\n";
  }

  if (!opt.json_path.empty()) write_file(opt.json_path, to_json(r).dump(2) + "\n");
  if (!opt.dot_path.empty()) {
    write_file(opt.dot_path, to_dot(a.poset(*kind), to_string(*kind)));
  }
  return 0;
}

int cmd_verify(std::vector<std::string> names, const std::string& json_path,
               const CapOptions& caps) {
  if (names.empty() ||
      std::find(names.begin(), names.end(), "all") != names.end()) {
    names = suite_names();
  }
  for (const auto& n : names) {
    if (std::find(suite_names().begin(), suite_names().end(), n) ==
        suite_names().end()) {
      std::cerr << "unknown suite '" << n << "'; expected one of "
                << join(suite_names(), ", ") << ", all\n";
      return kExitUsage;
    }
  }
  AnalysisCache cache(caps.limits());
  std::vector<SuiteResult> results;
  Table t({"suite", "group", "claim", "computed", "expected", "result"});
  for (const auto& n : names) {
    results.push_back(*run_suite(n, cache));
    for (const auto& c : results.back().cases) {
      t.add({n, c.group, c.claim, c.computed, c.expected,
             c.passed ? "PASS" : "FAIL"});
    }
  }
  t.print(std::cout);
  bool all = true;
  std::cout << "\n";
  for (const auto& r : results) {
    std::cout << (r.passed() ? "PASS  " : "FAIL  ") << r.name << " ("
              << r.cases.size() << " cases)\n";
    all = all && r.passed();
  }
  if (!json_path.empty()) write_file(json_path, to_json(results).dump(2) + "\n");
  return all ? 0 : kExitVerifyFailed;
}

int cmd_scan(std::size_t max_order, const std::vector<std::string>& families,
             const std::string& csv_path, const std::string& json_path,
             const CapOptions& caps) {
  for (const auto& f : families) {
    if (std::find(scan_family_names().begin(), scan_family_names().end(), f) ==
        scan_family_names().end()) {
      std::cerr << "unknown family '" << f << "'; expected one of "
                << join(scan_family_names(), ", ") << "\n";
      return kExitUsage;
    }
  }
  if (max_order > caps.max_order) {
    throw OrderCapExceeded("scan bound " + std::to_string(max_order) +
                           " exceeds order cap " + std::to_string(caps.max_order));
  }
  const auto rows = scan_class_c(max_order, families, caps.limits());
  Table t({"spec", "order", "subgroups", "classes", "bp L/Lbar/C/Cbar", "in C",
           "witnesses"});
  auto yn = [](bool b) { return std::string(b ? "y" : "n"); };
  for (const auto& r : rows) {
    if (r.skipped) {
      t.add({r.spec, std::to_string(r.order), "-", "-", "-", "skipped", "-"});
      continue;
    }
    t.add({r.spec, std::to_string(r.order), std::to_string(r.n_subgroups),
           std::to_string(r.n_classes),
           yn(r.bp_L) + yn(r.bp_Lbar) + yn(r.bp_C) + yn(r.bp_Cbar),
           r.in_C ? "yes" : "no", std::to_string(r.witnesses)});
  }
  t.print(std::cout);
  if (!csv_path.empty()) write_file(csv_path, to_csv(rows));
  if (!json_path.empty()) write_file(json_path, to_json(rows).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup posets, breaking points and two-interval covers"};
  app.require_subcommand(1);

  CapOptions build_caps;
  std::string build_spec;
  auto* build = app.add_subcommand("build", "Build and validate a group table");
  build->add_option("spec", build_spec, "Group spec, e.g. Q16 or C2xC2xM3^3")
      ->required();
  add_cap_options(build, build_caps);

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Analyze one group");
  analyze->add_option("spec", an.spec, "Group spec")->required();
  analyze->add_option("--json", an.json_path, "Write the report as JSON");
  analyze->add_option("--dot", an.dot_path, "Write a Hasse diagram in DOT");
  analyze->add_option("--poset", an.poset, "Poset for --dot: L, Lbar, C, Cbar")
      ->envname("CONJPOSET_POSET")
      ->capture_default_str();
  analyze->add_flag("--all-witnesses", an.all_witnesses,
                    "Count every two-interval cover witness");
  add_cap_options(analyze, an.caps);

  std::vector<std::string> suites;
  std::string verify_json;
  CapOptions verify_caps;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suites", suites,
                     "theorem1, corollary3, prop4-5, theorem6, theorem9, all");
  verify->add_option("--json", verify_json, "Write suite results as JSON");
  add_cap_options(verify, verify_caps);

  std::size_t scan_max = 32;
  std::vector<std::string> families;
  std::string scan_csv;
  std::string scan_json;
  CapOptions scan_caps;
  auto* scan = app.add_subcommand("scan", "Scan group families for class C");
  scan->add_option("--max-order", scan_max, "Largest order to sweep")
      ->capture_default_str();
  scan->add_option("--families", families, "Comma-separated family names")
      ->delimiter(',');
  scan->add_option("--csv", scan_csv, "Write rows as CSV");
  scan->add_option("--json", scan_json, "Write rows as JSON");
  scan->add_option("--order-cap", scan_caps.max_order, "Largest group order allowed")
      ->envname("CONJPOSET_MAX_ORDER")
      ->capture_default_str();
  scan->add_option("--max-subgroups", scan_caps.max_subgroups,
                   "Largest subgroup count allowed")
      ->envname("CONJPOSET_MAX_SUBGROUPS")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) return cmd_build(build_spec, build_caps);
    if (*analyze) return cmd_analyze(an);
    if (*verify) return cmd_verify(suites, verify_json, verify_caps);
    if (*scan) return cmd_scan(scan_max, families, scan_csv, scan_json, scan_caps);
  } catch (const SpecParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecInvalid& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
