#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "conjposet/group.hpp"
#include "conjposet/subgroups.hpp"

namespace conjposet {

struct StructureProfile {
  std::vector<std::size_t> primes;
  bool is_abelian = false;
  bool is_cyclic = false;
  bool is_p_group = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_generalized_quaternion = false;
  // prime -> number of subgroups of that order
  std::map<std::size_t, std::size_t> order_p_subgroups;
};

// Distinct prime divisors of |G|, ascending.
std::vector<std::size_t> primes_of(const GroupTable& g);

// Exponent of p in n.
std::size_t p_valuation(std::size_t n, std::size_t p);

Subgroup derived_subgroup(const GroupTable& g);
// Commutator subgroup of h, computed inside g.
Subgroup derived_subgroup(const GroupTable& g, const Subgroup& h);

// The derived series reaches the trivial subgroup.
bool is_solvable(const GroupTable& g);

bool is_cyclic(const GroupTable& g);

// Indices into lat of all subgroups of order p^v_p(|G|).
// Throws PrimeNotInOrder unless p divides |G|.
std::vector<std::size_t> sylow_subgroups(const GroupTable& g,
                                         const SubgroupLattice& lat,
                                         std::size_t p);

// Every Sylow subgroup is normal (equivalently, unique for its prime).
bool is_nilpotent(const GroupTable& g, const SubgroupLattice& lat);

// Subgroup generated by the elements of order p.
Subgroup omega1(const GroupTable& g, std::size_t p);

// Intersection of the maximal subgroups; trivial for the trivial group.
Subgroup frattini(const GroupTable& g, const SubgroupLattice& lat);

// Maximal subgroups as lattice indices.
std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& lat);

// |G| = 2^n with n >= 3, G noncyclic, exactly one subgroup of order 2.
bool is_generalized_quaternion(const GroupTable& g, const SubgroupLattice& lat);

// |G| = p^k with k >= 2 and G cyclic.
bool is_cyclic_pgroup_order_ge_p2(const GroupTable& g);

// All subgroups of order p form one conjugacy class.
bool order_p_subgroups_conjugate(const GroupTable& g,
                                 const SubgroupLattice& lat,
                                 const ConjClassPoset& ccp, std::size_t p);

// First subgroup (in canonical order) of order |G| / p^v_p(|G|), if any.
std::optional<std::size_t> p_complement(const GroupTable& g,
                                        const SubgroupLattice& lat,
                                        std::size_t p);

StructureProfile structure_profile(const GroupTable& g,
                                   const SubgroupLattice& lat);

}  // namespace conjposet
