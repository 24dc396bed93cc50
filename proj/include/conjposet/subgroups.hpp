#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "conjposet/bits.hpp"
#include "conjposet/group.hpp"

namespace conjposet {

// A subgroup as a strictly increasing list of element indices.
struct Subgroup {
  std::vector<Element> elems;

  std::size_t order() const { return elems.size(); }
  bool contains(Element a) const;
  bool is_subset_of(const Subgroup& other) const;
  Bits mask(std::size_t group_order) const;

  // Canonical order: by size, then lexicographically by elements.
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend std::strong_ordering operator<=>(const Subgroup& a,
                                          const Subgroup& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.elems <=> b.elems;
  }
};

// All subgroups of a group, sorted canonically, with the inclusion matrix.
class SubgroupLattice {
 public:
  SubgroupLattice(std::size_t group_order, std::vector<Subgroup> subs);

  std::size_t size() const { return subs_.size(); }
  const std::vector<Subgroup>& subs() const { return subs_; }
  const Subgroup& sub(std::size_t i) const { return subs_[i]; }
  // Element membership bitset of subgroup i.
  const Bits& mask(std::size_t i) const { return masks_[i]; }
  // subset().test(i, j) <=> sub(i) is contained in sub(j).
  const BitMatrix& subset() const { return subset_; }
  std::size_t trivial_idx() const { return 0; }
  std::size_t full_idx() const { return subs_.size() - 1; }
  std::size_t group_order() const { return group_order_; }

  std::optional<std::size_t> index_of(const Subgroup& h) const;
  std::optional<std::size_t> index_of(const Bits& mask) const;

 private:
  std::size_t group_order_;
  std::vector<Subgroup> subs_;
  std::vector<Bits> masks_;
  BitMatrix subset_;
  std::unordered_map<Bits, std::size_t> lookup_;
};

// Conjugacy classes of subgroups, ordered by [H1] <= [H2] iff H1 is
// contained in some conjugate of H2. Class i has representative rep[i], the
// member with the lexicographically least element list; classes are sorted
// by representative index, so bottom is class 0 and top is the last class.
struct ConjClassPoset {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> rep;
  std::vector<std::size_t> class_of;
  BitMatrix leq;
  std::size_t bottom_idx = 0;
  std::size_t top_idx = 0;

  std::size_t size() const { return classes.size(); }
};

// Least subgroup containing the seed elements.
Subgroup closure(const GroupTable& g, std::span<const Element> seed);

// Throws SubgroupCapExceeded once more than limits.max_subgroups are found.
SubgroupLattice enumerate_subgroups(const GroupTable& g,
                                    const Limits& limits = {});

// {x^-1 h x : h in H}
Subgroup conjugate_subgroup(const GroupTable& g, const Subgroup& h, Element x);

Subgroup normalizer(const GroupTable& g, const Subgroup& h);

ConjClassPoset conjugacy_classes(const GroupTable& g,
                                 const SubgroupLattice& lat);

}  // namespace conjposet
