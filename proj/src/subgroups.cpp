#include "conjposet/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

#include "conjposet/errors.hpp"

namespace conjposet {

namespace {

Subgroup from_mask(const Bits& mask) {
  Subgroup h;
  h.elems.reserve(mask.count());
  for_each_bit(mask, [&](std::size_t a) {
    h.elems.push_back(static_cast<Element>(a));
  });
  return h;
}

// Extends a subgroup (given as list + mask) by generators until closed under
// right multiplication by every generator. In a finite group that is the
// subgroup generated by the base and the generators.
void saturate(const GroupTable& g, std::vector<Element>& elems, Bits& mask,
              std::span<const Element> gens) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      const Element p = g.mul(elems[i], s);
      if (!mask.test(p)) {
        mask.set(p);
        elems.push_back(p);
      }
    }
  }
}

struct Found {
  Bits mask;
  std::vector<Element> gens;
};

}  // namespace

bool Subgroup::contains(Element a) const {
  return std::binary_search(elems.begin(), elems.end(), a);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elems.begin(), other.elems.end(), elems.begin(),
                       elems.end());
}

Bits Subgroup::mask(std::size_t group_order) const {
  Bits b(group_order);
  for (Element a : elems) b.set(a);
  return b;
}

SubgroupLattice::SubgroupLattice(std::size_t group_order,
                                 std::vector<Subgroup> subs)
    : group_order_(group_order), subs_(std::move(subs)) {
  std::sort(subs_.begin(), subs_.end());
  const std::size_t k = subs_.size();
  masks_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    masks_.push_back(subs_[i].mask(group_order_));
    lookup_.emplace(masks_.back(), i);
  }
  subset_ = BitMatrix(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      if (subs_[j].order() % subs_[i].order() == 0 &&
          masks_[i].is_subset_of(masks_[j])) {
        subset_.set(i, j);
      }
    }
  }
}

std::optional<std::size_t> SubgroupLattice::index_of(const Subgroup& h) const {
  return index_of(h.mask(group_order_));
}

std::optional<std::size_t> SubgroupLattice::index_of(const Bits& mask) const {
  auto it = lookup_.find(mask);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Subgroup closure(const GroupTable& g, std::span<const Element> seed) {
  std::vector<Element> elems{kIdentity};
  Bits mask(g.order());
  mask.set(kIdentity);
  saturate(g, elems, mask, seed);
  return from_mask(mask);
}

SubgroupLattice enumerate_subgroups(const GroupTable& g, const Limits& limits) {
  const std::size_t n = g.order();

  // <H, a> = <H, a^k> for k coprime to |a|, so one generator per cyclic
  // subgroup suffices.
  std::vector<Element> cyclic_gens;
  {
    Bits covered(n);
    for (Element a = 0; a < n; ++a) {
      if (covered.test(a)) continue;
      cyclic_gens.push_back(a);
      const std::size_t ord = element_order(g, a);
      Element x = a;
      for (std::size_t k = 1; k <= ord; ++k, x = g.mul(x, a)) {
        if (std::gcd(k, ord) == 1) covered.set(x);
      }
    }
  }

  std::vector<Found> found;
  std::unordered_map<Bits, std::size_t> seen;
  {
    Bits trivial(n);
    trivial.set(kIdentity);
    seen.emplace(trivial, 0);
    found.push_back({trivial, {}});
  }

  std::vector<Element> elems;
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (Element a : cyclic_gens) {
      if (found[next].mask.test(a)) continue;
      Bits mask = found[next].mask;
      elems.clear();
      for_each_bit(mask, [&](std::size_t e) {
        elems.push_back(static_cast<Element>(e));
      });
      std::vector<Element> gens = found[next].gens;
      gens.push_back(a);
      saturate(g, elems, mask, gens);
      if (seen.contains(mask)) continue;
      if (found.size() >= limits.max_subgroups) {
        throw SubgroupCapExceeded(g.spec() + " has more than " +
                                  std::to_string(limits.max_subgroups) +
                                  " subgroups");
      }
      seen.emplace(mask, found.size());
      found.push_back({std::move(mask), std::move(gens)});
    }
  }

  std::vector<Subgroup> subs;
  subs.reserve(found.size());
  for (const auto& f : found) subs.push_back(from_mask(f.mask));
  return SubgroupLattice(n, std::move(subs));
}

Subgroup conjugate_subgroup(const GroupTable& g, const Subgroup& h,
                            Element x) {
  Subgroup out;
  out.elems.reserve(h.order());
  for (Element a : h.elems) out.elems.push_back(g.conj(a, x));
  std::sort(out.elems.begin(), out.elems.end());
  return out;
}

Subgroup normalizer(const GroupTable& g, const Subgroup& h) {
  Subgroup out;
  for (Element x = 0; x < g.order(); ++x) {
    const bool fixes = std::all_of(h.elems.begin(), h.elems.end(),
                                   [&](Element a) { return h.contains(g.conj(a, x)); });
    if (fixes) out.elems.push_back(x);
  }
  return out;
}

ConjClassPoset conjugacy_classes(const GroupTable& g,
                                 const SubgroupLattice& lat) {
  const std::size_t k = lat.size();
  const std::size_t n = g.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  ConjClassPoset ccp;
  ccp.class_of.assign(k, kUnassigned);
  // Iterating subgroups in canonical order makes the first member of each
  // orbit its lexicographically least one.
  for (std::size_t i = 0; i < k; ++i) {
    if (ccp.class_of[i] != kUnassigned) continue;
    const std::size_t c = ccp.classes.size();
    ccp.classes.emplace_back();
    ccp.rep.push_back(i);
    const Subgroup& h = lat.sub(i);
    for (Element x = 0; x < n; ++x) {
      Bits conj(n);
      for (Element a : h.elems) conj.set(g.conj(a, x));
      auto j = lat.index_of(conj);
      if (!j) {
        throw Error("conjugate of subgroup " + std::to_string(i) +
                    " missing from lattice of " + g.spec());
      }
      if (ccp.class_of[*j] == kUnassigned) {
        ccp.class_of[*j] = c;
        ccp.classes[c].push_back(*j);
      }
    }
    std::sort(ccp.classes[c].begin(), ccp.classes[c].end());
  }

  const std::size_t nc = ccp.classes.size();
  std::vector<Bits> members(nc, Bits(k));
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t j : ccp.classes[c]) members[c].set(j);
  }
  ccp.leq = BitMatrix(nc);
  for (std::size_t c1 = 0; c1 < nc; ++c1) {
    const std::size_t o1 = lat.sub(ccp.rep[c1]).order();
    const Bits& above = lat.subset().row(ccp.rep[c1]);
    for (std::size_t c2 = 0; c2 < nc; ++c2) {
      if (lat.sub(ccp.rep[c2]).order() % o1 != 0) continue;
      if (above.intersects(members[c2])) ccp.leq.set(c1, c2);
    }
  }
  ccp.bottom_idx = ccp.class_of[lat.trivial_idx()];
  ccp.top_idx = ccp.class_of[lat.full_idx()];
  return ccp;
}

}  // namespace conjposet
