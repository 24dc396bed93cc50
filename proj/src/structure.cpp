#include "conjposet/structure.hpp"

#include <algorithm>

#include "conjposet/errors.hpp"

namespace conjposet {

namespace {

void require_prime_divisor(const GroupTable& g, std::size_t p) {
  if (p < 2 || g.order() % p != 0) {
    throw PrimeNotInOrder(std::to_string(p) + " does not divide |" + g.spec() +
                          "| = " + std::to_string(g.order()));
  }
}

std::size_t count_of_order(const SubgroupLattice& lat, std::size_t order) {
  return static_cast<std::size_t>(
      std::count_if(lat.subs().begin(), lat.subs().end(),
                    [&](const Subgroup& h) { return h.order() == order; }));
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<std::size_t> primes_of(const GroupTable& g) {
  std::vector<std::size_t> out;
  std::size_t n = g.order();
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t p_valuation(std::size_t n, std::size_t p) {
  std::size_t v = 0;
  while (n > 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Subgroup derived_subgroup(const GroupTable& g, const Subgroup& h) {
  std::vector<Element> commutators;
  for (Element x : h.elems) {
    for (Element y : h.elems) {
      Element c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (c != kIdentity) commutators.push_back(c);
    }
  }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()),
                    commutators.end());
  return closure(g, commutators);
}

Subgroup derived_subgroup(const GroupTable& g) {
  Subgroup whole;
  whole.elems.resize(g.order());
  for (Element a = 0; a < g.order(); ++a) whole.elems[a] = a;
  return derived_subgroup(g, whole);
}

bool is_solvable(const GroupTable& g) {
  Subgroup current = derived_subgroup(g);
  std::size_t previous = g.order();
  while (current.order() < previous) {
    previous = current.order();
    current = derived_subgroup(g, current);
  }
  return current.order() == 1;
}

bool is_cyclic(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a) {
    if (element_order(g, a) == g.order()) return true;
  }
  return false;
}

std::vector<std::size_t> sylow_subgroups(const GroupTable& g,
                                         const SubgroupLattice& lat,
                                         std::size_t p) {
  require_prime_divisor(g, p);
  const std::size_t target = ipow(p, p_valuation(g.order(), p));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.sub(i).order() == target) out.push_back(i);
  }
  return out;
}

bool is_nilpotent(const GroupTable& g, const SubgroupLattice& lat) {
  for (std::size_t p : primes_of(g)) {
    if (sylow_subgroups(g, lat, p).size() != 1) return false;
  }
  return true;
}

Subgroup omega1(const GroupTable& g, std::size_t p) {
  require_prime_divisor(g, p);
  std::vector<Element> gens;
  for (Element a = 0; a < g.order(); ++a) {
    if (element_order(g, a) == p) gens.push_back(a);
  }
  return closure(g, gens);
}

std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    // proper, and contained only in itself and G
    if (i != lat.full_idx() && lat.subset().row(i).count() == 2) {
      out.push_back(i);
    }
  }
  return out;
}

Subgroup frattini(const GroupTable& g, const SubgroupLattice& lat) {
  Bits acc(g.order());
  acc.set();
  for (std::size_t i : maximal_subgroups(lat)) acc &= lat.mask(i);
  if (g.order() == 1) return lat.sub(lat.trivial_idx());
  return lat.sub(*lat.index_of(acc));
}

bool is_generalized_quaternion(const GroupTable& g,
                               const SubgroupLattice& lat) {
  const std::size_t n = g.order();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  if (is_cyclic(g)) return false;
  return count_of_order(lat, 2) == 1;
}

bool is_cyclic_pgroup_order_ge_p2(const GroupTable& g) {
  const auto primes = primes_of(g);
  if (primes.size() != 1) return false;
  if (p_valuation(g.order(), primes.front()) < 2) return false;
  return is_cyclic(g);
}

bool order_p_subgroups_conjugate(const GroupTable& g,
                                 const SubgroupLattice& lat,
                                 const ConjClassPoset& ccp, std::size_t p) {
  require_prime_divisor(g, p);
  std::optional<std::size_t> cls;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.sub(i).order() != p) continue;
    if (!cls) cls = ccp.class_of[i];
    if (ccp.class_of[i] != *cls) return false;
  }
  return true;
}

std::optional<std::size_t> p_complement(const GroupTable& g,
                                        const SubgroupLattice& lat,
                                        std::size_t p) {
  require_prime_divisor(g, p);
  const std::size_t target = g.order() / ipow(p, p_valuation(g.order(), p));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.sub(i).order() == target) return i;
  }
  return std::nullopt;
}

StructureProfile structure_profile(const GroupTable& g,
                                   const SubgroupLattice& lat) {
  StructureProfile s;
  s.primes = primes_of(g);
  s.is_abelian = g.is_abelian();
  s.is_cyclic = is_cyclic(g);
  s.is_p_group = s.primes.size() == 1;
  s.is_nilpotent = is_nilpotent(g, lat);
  s.is_solvable = is_solvable(g);
  s.is_generalized_quaternion = is_generalized_quaternion(g, lat);
  for (std::size_t p : s.primes) s.order_p_subgroups[p] = count_of_order(lat, p);
  return s;
}

}  // namespace conjposet
