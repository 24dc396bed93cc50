#include "conjposet/report.hpp"

#include <sstream>

namespace conjposet {

namespace {

WitnessSubgroup witness_subgroup(const GroupAnalysis& a, std::size_t idx) {
  const PosetView& lbar = a.poset(PosetKind::kLbar);
  WitnessSubgroup w;
  w.order = lbar.orders[idx];
  w.class_size = lbar.class_sizes[idx];
  for (Element e : a.lbar_rep(idx).elems) w.elements.push_back(a.group().label(e));
  return w;
}

Json to_json(const WitnessSubgroup& w) {
  return Json{{"order", w.order},
              {"class_size", w.class_size},
              {"elements", w.elements}};
}

WitnessSubgroup witness_from_json(const Json& j) {
  return {j.at("order").get<std::size_t>(),
          j.at("class_size").get<std::size_t>(),
          j.at("elements").get<std::vector<std::string>>()};
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

AnalysisReport make_report(const GroupAnalysis& a, bool all_witnesses,
                           double timing_ms) {
  AnalysisReport r;
  const StructureProfile& s = a.profile();
  r.spec = a.group().spec();
  r.order = a.group().order();
  r.primes = s.primes;
  r.is_abelian = s.is_abelian;
  r.is_cyclic = s.is_cyclic;
  r.is_p_group = s.is_p_group;
  r.is_nilpotent = s.is_nilpotent;
  r.is_solvable = s.is_solvable;
  r.is_generalized_quaternion = s.is_generalized_quaternion;
  r.n_subgroups = a.lattice().size();
  r.n_classes = a.classes().size();
  for (PosetKind k : kAllPosetKinds) {
    const PosetView& p = a.poset(k);
    PosetSummary ps;
    ps.kind = std::string(to_string(k));
    ps.elements = p.size();
    ps.has_top = p.top_idx.has_value();
    ps.hasse_edges = hasse_edges(p).size();
    for (std::size_t x : breaking_points(p)) ps.breaking_points.push_back(p.labels[x]);
    r.posets.push_back(std::move(ps));
  }
  r.class_c.member = a.in_class_c();
  if (const auto& w = a.class_c_witness()) {
    r.class_c.m = witness_subgroup(a, w->m_idx);
    r.class_c.n = witness_subgroup(a, w->n_idx);
  }
  if (all_witnesses) {
    auto all = two_interval_cover(a.poset(PosetKind::kLbar), true);
    r.class_c.witness_count = all ? all->all_pairs.size() : 0;
  }
  r.timing_ms = timing_ms;
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json posets = Json::array();
  for (const auto& p : r.posets) {
    posets.push_back(Json{{"kind", p.kind},
                          {"elements", p.elements},
                          {"has_top", p.has_top},
                          {"hasse_edges", p.hasse_edges},
                          {"breaking_points", p.breaking_points}});
  }
  Json cc{{"member", r.class_c.member},
          {"witness", nullptr},
          {"witness_count", nullptr}};
  if (r.class_c.m && r.class_c.n) {
    cc["witness"] = Json{{"M", to_json(*r.class_c.m)}, {"N", to_json(*r.class_c.n)}};
  }
  if (r.class_c.witness_count) cc["witness_count"] = *r.class_c.witness_count;
  return Json{{"spec", r.spec},
              {"order", r.order},
              {"primes", r.primes},
              {"structure",
               {{"abelian", r.is_abelian},
                {"cyclic", r.is_cyclic},
                {"p_group", r.is_p_group},
                {"nilpotent", r.is_nilpotent},
                {"solvable", r.is_solvable},
                {"generalized_quaternion", r.is_generalized_quaternion}}},
              {"n_subgroups", r.n_subgroups},
              {"n_classes", r.n_classes},
              {"posets", posets},
              {"class_c", cc},
              {"timing_ms", r.timing_ms}};
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.spec = j.at("spec").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.primes = j.at("primes").get<std::vector<std::size_t>>();
  const Json& s = j.at("structure");
  r.is_abelian = s.at("abelian").get<bool>();
  r.is_cyclic = s.at("cyclic").get<bool>();
  r.is_p_group = s.at("p_group").get<bool>();
  r.is_nilpotent = s.at("nilpotent").get<bool>();
  r.is_solvable = s.at("solvable").get<bool>();
  r.is_generalized_quaternion = s.at("generalized_quaternion").get<bool>();
  r.n_subgroups = j.at("n_subgroups").get<std::size_t>();
  r.n_classes = j.at("n_classes").get<std::size_t>();
  for (const Json& p : j.at("posets")) {
    r.posets.push_back({p.at("kind").get<std::string>(),
                        p.at("elements").get<std::size_t>(),
                        p.at("has_top").get<bool>(),
                        p.at("hasse_edges").get<std::size_t>(),
                        p.at("breaking_points").get<std::vector<std::string>>()});
  }
  const Json& cc = j.at("class_c");
  r.class_c.member = cc.at("member").get<bool>();
  if (!cc.at("witness").is_null()) {
    r.class_c.m = witness_from_json(cc.at("witness").at("M"));
    r.class_c.n = witness_from_json(cc.at("witness").at("N"));
  }
  if (!cc.at("witness_count").is_null()) {
    r.class_c.witness_count = cc.at("witness_count").get<std::size_t>();
  }
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

Json to_json(const SuiteResult& s) {
  Json cases = Json::array();
  for (const auto& c : s.cases) {
    cases.push_back(Json{{"group", c.group},
                         {"claim", c.claim},
                         {"computed", c.computed},
                         {"expected", c.expected},
                         {"passed", c.passed},
                         {"witnesses", c.witnesses}});
  }
  return Json{{"name", s.name}, {"passed", s.passed()}, {"cases", cases}};
}

Json to_json(const std::vector<SuiteResult>& suites) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& s : suites) {
    arr.push_back(to_json(s));
    all = all && s.passed();
  }
  return Json{{"passed", all}, {"suites", arr}};
}

Json to_json(const std::vector<ScanRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row{{"spec", r.spec}, {"order", r.order}, {"skipped", r.skipped}};
    if (r.skipped) {
      row["reason"] = r.skip_reason;
    } else {
      row["n_subgroups"] = r.n_subgroups;
      row["n_classes"] = r.n_classes;
      row["bp"] = Json{{"L", r.bp_L}, {"Lbar", r.bp_Lbar},
                       {"C", r.bp_C}, {"Cbar", r.bp_Cbar}};
      row["in_C"] = r.in_C;
      row["witnesses"] = r.witnesses;
      row["structure"] = Json{{"abelian", r.profile.is_abelian},
                              {"cyclic", r.profile.is_cyclic},
                              {"p_group", r.profile.is_p_group},
                              {"nilpotent", r.profile.is_nilpotent},
                              {"solvable", r.profile.is_solvable},
                              {"generalized_quaternion",
                               r.profile.is_generalized_quaternion}};
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

std::string to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "spec,order,n_subgroups,n_classes,bp_L,bp_Lbar,bp_C,bp_Cbar,in_C,"
        "witnesses\n";
  for (const auto& r : rows) {
    // Specs like ZM(7,3,2) contain commas.
    const bool quote = r.spec.find(',') != std::string::npos;
    os << (quote ? "\"" + r.spec + "\"" : r.spec) << "," << r.order << ",";
    if (r.skipped) {
      os << ",,,,,,skipped,\n";
      continue;
    }
    os << r.n_subgroups << "," << r.n_classes << "," << flag(r.bp_L) << ","
       << flag(r.bp_Lbar) << "," << flag(r.bp_C) << "," << flag(r.bp_Cbar)
       << "," << flag(r.in_C) << "," << r.witnesses << "\n";
  }
  return os.str();
}

}  // namespace conjposet
