#include "conjposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "conjposet/errors.hpp"

namespace conjposet {

std::string_view to_string(PosetKind kind) {
  switch (kind) {
    case PosetKind::kL:
      return "L";
    case PosetKind::kLbar:
      return "Lbar";
    case PosetKind::kC:
      return "C";
    case PosetKind::kCbar:
      return "Cbar";
  }
  return "?";
}

std::optional<PosetKind> parse_poset_kind(std::string_view text) {
  for (PosetKind k : kAllPosetKinds) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

namespace {

bool is_cyclic_subgroup(const Subgroup& h,
                        const std::vector<std::size_t>& elem_orders) {
  return std::any_of(h.elems.begin(), h.elems.end(), [&](Element a) {
    return elem_orders[a] == h.order();
  });
}

}  // namespace

PosetView build_poset(const GroupTable& g, const SubgroupLattice& lat,
                      const ConjClassPoset& ccp, PosetKind kind) {
  const bool classes = kind == PosetKind::kLbar || kind == PosetKind::kCbar;
  const bool cyclic_only = kind == PosetKind::kC || kind == PosetKind::kCbar;

  std::vector<std::size_t> elem_orders(g.order());
  if (cyclic_only) {
    for (Element a = 0; a < g.order(); ++a) elem_orders[a] = element_order(g, a);
  }

  PosetView p;
  p.kind = kind;
  const std::size_t source_size = classes ? ccp.size() : lat.size();
  for (std::size_t i = 0; i < source_size; ++i) {
    const Subgroup& h = lat.sub(classes ? ccp.rep[i] : i);
    if (cyclic_only && !is_cyclic_subgroup(h, elem_orders)) continue;
    const std::size_t class_size = classes ? ccp.classes[i].size() : 1;
    p.payload.push_back(i);
    p.orders.push_back(h.order());
    p.class_sizes.push_back(class_size);
    std::string label = "o" + std::to_string(h.order());
    if (classes) label += "×" + std::to_string(class_size);
    p.labels.push_back(std::move(label));
  }

  const std::size_t k = p.payload.size();
  const BitMatrix& source = classes ? ccp.leq : lat.subset();
  p.leq = BitMatrix(k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (source.test(p.payload[x], p.payload[y])) p.leq.set(x, y);
    }
  }
  p.down = p.leq.transposed();

  const std::size_t source_bottom = classes ? ccp.bottom_idx : lat.trivial_idx();
  const std::size_t source_top = classes ? ccp.top_idx : lat.full_idx();
  for (std::size_t x = 0; x < k; ++x) {
    if (p.payload[x] == source_bottom) p.bottom_idx = x;
    if (p.payload[x] == source_top) p.top_idx = x;
  }
  return p;
}

std::vector<std::size_t> breaking_points(const PosetView& p) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.is_bounded_element(x)) continue;
    if (!(p.leq.row(x) | p.down.row(x)).all()) continue;
    if (!p.top_idx && p.leq.row(x).count() == 1) continue;  // maximal
    out.push_back(x);
  }
  return out;
}

std::optional<IntervalCoverWitness> two_interval_cover(const PosetView& p,
                                                       bool find_all) {
  std::vector<std::size_t> inner;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!p.is_bounded_element(x)) inner.push_back(x);
  }
  auto m_candidates = inner;
  std::sort(m_candidates.begin(), m_candidates.end(),
            [&](std::size_t a, std::size_t b) {
              return std::tie(p.orders[b], p.labels[a], a) <
                     std::tie(p.orders[a], p.labels[b], b);
            });
  auto n_candidates = inner;
  std::sort(n_candidates.begin(), n_candidates.end(),
            [&](std::size_t a, std::size_t b) {
              return std::tie(p.orders[a], p.labels[a], a) <
                     std::tie(p.orders[b], p.labels[b], b);
            });

  std::optional<IntervalCoverWitness> result;
  for (std::size_t m : m_candidates) {
    const Bits& below_m = p.down.row(m);
    for (std::size_t n : n_candidates) {
      if (!(below_m | p.leq.row(n)).all()) continue;
      if (!result) {
        result = IntervalCoverWitness{m, n, {}};
        if (!find_all) return result;
      }
      result->all_pairs.emplace_back(m, n);
    }
  }
  return result;
}

bool validate_cover(const PosetView& p, std::size_t m, std::size_t n) {
  if (p.is_bounded_element(m) || p.is_bounded_element(n)) return false;
  std::vector<char> covered(p.size(), 0);
  for (std::size_t x : interval(p, p.bottom_idx, m)) covered[x] = 1;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.le(n, x)) covered[x] = 1;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c != 0; });
}

std::vector<std::size_t> interval(const PosetView& p, std::size_t a,
                                  std::size_t b) {
  if (!p.le(a, b)) {
    throw NotComparable(p.labels[a] + " (#" + std::to_string(a) +
                        ") is not below " + p.labels[b] + " (#" +
                        std::to_string(b) + ")");
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.le(a, x) && p.le(x, b)) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const PosetView& p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t k = p.size();
  for (std::size_t x = 0; x < k; ++x) {
    Bits strictly_above = p.leq.row(x);
    strictly_above.reset(x);
    for_each_bit(strictly_above, [&](std::size_t y) {
      Bits between = strictly_above & p.down.row(y);
      between.reset(y);
      if (between.none()) edges.emplace_back(x, y);
    });
  }
  return edges;
}

std::string to_dot(const PosetView& p, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t x = 0; x < p.size(); ++x) {
    os << "  n" << x << " [label=\"" << p.labels[x] << "\"];\n";
  }
  for (auto [x, y] : hasse_edges(p)) {
    os << "  n" << x << " -> n" << y << ";\n";
  }
  os << "}\n";
  return os.str();
}

bool is_partial_order(const PosetView& p) {
  const std::size_t k = p.size();
  for (std::size_t x = 0; x < k; ++x) {
    if (!p.le(x, x)) return false;
    if (!p.le(p.bottom_idx, x)) return false;
    if (p.top_idx && !p.le(x, *p.top_idx)) return false;
    for (std::size_t y = 0; y < k; ++y) {
      if (x != y && p.le(x, y) && p.le(y, x)) return false;
      if (!p.le(x, y)) continue;
      // up(y) must be contained in up(x)
      if (!p.leq.row(y).is_subset_of(p.leq.row(x))) return false;
    }
  }
  return true;
}

}  // namespace conjposet
