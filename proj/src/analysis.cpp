#include "conjposet/analysis.hpp"

#include <utility>

#include "conjposet/errors.hpp"

namespace conjposet {

GroupAnalysis::GroupAnalysis(GroupTable group, const Limits& limits)
    : group_(std::move(group)),
      lattice_(enumerate_subgroups(group_, limits)),
      classes_(conjugacy_classes(group_, lattice_)),
      profile_(structure_profile(group_, lattice_)) {
  for (PosetKind k : kAllPosetKinds) {
    posets_[static_cast<std::size_t>(k)] =
        build_poset(group_, lattice_, classes_, k);
  }
  witness_ = two_interval_cover(poset(PosetKind::kLbar));
}

std::size_t GroupAnalysis::lbar_index(const Subgroup& h) const {
  auto i = lattice_.index_of(h);
  if (!i) throw Error("not a subgroup of " + group_.spec() + ": " + describe(h));
  // Lbar keeps every class, in class order.
  return classes_.class_of[*i];
}

const Subgroup& GroupAnalysis::lbar_rep(std::size_t idx) const {
  return lattice_.sub(classes_.rep[poset(PosetKind::kLbar).payload[idx]]);
}

std::string GroupAnalysis::describe(const Subgroup& h) const {
  std::string out = "{";
  for (std::size_t i = 0; i < h.elems.size(); ++i) {
    if (i > 0) out += ",";
    out += group_.label(h.elems[i]);
  }
  return out + "}";
}

}  // namespace conjposet
