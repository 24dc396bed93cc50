#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "conjposet/group.hpp"
#include "conjposet/group_spec.hpp"
#include "conjposet/poset.hpp"
#include "conjposet/structure.hpp"
#include "conjposet/subgroups.hpp"

namespace conjposet {

// Everything derived from one group: lattice, class poset, the four posets
// and the structure profile. Immutable once built.
class GroupAnalysis {
 public:
  GroupAnalysis(GroupTable group, const Limits& limits);

  const GroupTable& group() const { return group_; }
  const SubgroupLattice& lattice() const { return lattice_; }
  const ConjClassPoset& classes() const { return classes_; }
  const StructureProfile& profile() const { return profile_; }
  const PosetView& poset(PosetKind kind) const {
    return posets_[static_cast<std::size_t>(kind)];
  }

  bool has_breaking_point(PosetKind kind) const {
    return !breaking_points(poset(kind)).empty();
  }

  // First two-interval cover of Lbar, i.e. the class-C witness.
  const std::optional<IntervalCoverWitness>& class_c_witness() const {
    return witness_;
  }
  bool in_class_c() const { return witness_.has_value(); }

  // Lbar element holding the conjugacy class of h. h must be a subgroup.
  std::size_t lbar_index(const Subgroup& h) const;
  // Representative subgroup of an Lbar element.
  const Subgroup& lbar_rep(std::size_t idx) const;

  // Human-readable element list "{e,x^3,y}".
  std::string describe(const Subgroup& h) const;

 private:
  GroupTable group_;
  SubgroupLattice lattice_;
  ConjClassPoset classes_;
  StructureProfile profile_;
  std::array<PosetView, 4> posets_;
  std::optional<IntervalCoverWitness> witness_;
};

}  // namespace conjposet
