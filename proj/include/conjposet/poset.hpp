#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjposet/bits.hpp"
#include "conjposet/group.hpp"
#include "conjposet/subgroups.hpp"

namespace conjposet {

// L: subgroups; Lbar: conjugacy classes of subgroups; C and Cbar: the same
// restricted to cyclic subgroups.
enum class PosetKind { kL, kLbar, kC, kCbar };

inline constexpr PosetKind kAllPosetKinds[] = {PosetKind::kL, PosetKind::kLbar,
                                               PosetKind::kC, PosetKind::kCbar};

std::string_view to_string(PosetKind kind);
// Accepts "L", "Lbar", "C", "Cbar"; nullopt otherwise.
std::optional<PosetKind> parse_poset_kind(std::string_view text);

// A finite poset with a bottom element and, except for C/Cbar of a
// noncyclic group, a top element.
struct PosetView {
  PosetKind kind = PosetKind::kL;
  // leq.test(x, y) <=> x <= y. Row x is the up-set of x.
  BitMatrix leq;
  // Transpose of leq. Row y is the down-set of y.
  BitMatrix down;
  std::size_t bottom_idx = 0;
  std::optional<std::size_t> top_idx;
  // "o<order>" for subgroup posets, "o<order>×<class size>" for class posets.
  std::vector<std::string> labels;
  // Subgroup index (L, C) or class index (Lbar, Cbar) in the source data.
  std::vector<std::size_t> payload;
  std::vector<std::size_t> orders;
  std::vector<std::size_t> class_sizes;

  std::size_t size() const { return labels.size(); }
  bool le(std::size_t x, std::size_t y) const { return leq.test(x, y); }
  bool is_bounded_element(std::size_t x) const {
    return x == bottom_idx || (top_idx && x == *top_idx);
  }
};

struct IntervalCoverWitness {
  std::size_t m_idx = 0;
  std::size_t n_idx = 0;
  // Every witness pair, filled only in find_all mode.
  std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
};

PosetView build_poset(const GroupTable& g, const SubgroupLattice& lat,
                      const ConjClassPoset& ccp, PosetKind kind);

// Elements other than bottom and top that are comparable to every element.
// When the poset has no top, maximal elements are excluded as well.
std::vector<std::size_t> breaking_points(const PosetView& p);

// Searches pairs (m, n) of elements other than bottom and top with
// x <= m or n <= x for every x. m == n is allowed. M candidates are tried by
// descending order, N candidates by ascending order, ties broken by label and
// then index.
std::optional<IntervalCoverWitness> two_interval_cover(const PosetView& p,
                                                       bool find_all = false);

// Checks one candidate pair element by element without the bitset shortcut.
bool validate_cover(const PosetView& p, std::size_t m, std::size_t n);

// {x : a <= x <= b}. Throws NotComparable unless a <= b.
std::vector<std::size_t> interval(const PosetView& p, std::size_t a,
                                  std::size_t b);

// Covering pairs (x, y): x < y with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const PosetView& p);

// Graphviz digraph of the Hasse diagram, edges from covered to covering.
std::string to_dot(const PosetView& p, std::string_view name);

// Reflexive, antisymmetric, transitive, bottom below all, top above all.
bool is_partial_order(const PosetView& p);

}  // namespace conjposet
