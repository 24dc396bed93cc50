#include "conjposet/group.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "conjposet/errors.hpp"

namespace conjposet {

GroupTable::GroupTable(std::size_t order, std::vector<Element> mul,
                       std::vector<std::string> labels, std::string spec)
    : order_(order),
      mul_(std::move(mul)),
      inv_(order, kIdentity),
      labels_(std::move(labels)),
      spec_(std::move(spec)) {
  if (mul_.size() != order_ * order_) {
    throw SpecInvalid("Cayley table size does not match order " +
                      std::to_string(order_));
  }
  if (labels_.size() != order_) {
    labels_.resize(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_[i] = std::to_string(i);
  }
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul_[a * order_ + b] == kIdentity) {
        inv_[a] = b;
        break;
      }
    }
  }
}

std::optional<Element> GroupTable::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

bool GroupTable::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

namespace {

ValidationResult fail(Violation v, Element a, Element b, Element c,
                      std::string message) {
  return {v, {a, b, c}, std::move(message)};
}

}  // namespace

ValidationResult validate_group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0) return fail(Violation::kShape, 0, 0, 0, "empty group");
  for (Element v : g.table()) {
    if (v >= n) {
      return fail(Violation::kShape, v, 0, 0,
                  "table entry " + std::to_string(v) + " out of range");
    }
  }

  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      Element p = g.mul(a, b);
      if (seen[p]) {
        return fail(Violation::kLatinRow, a, b, p,
                    "row " + std::to_string(a) + " repeats element " +
                        std::to_string(p));
      }
      seen[p] = 1;
    }
  }
  for (Element b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < n; ++a) {
      Element p = g.mul(a, b);
      if (seen[p]) {
        return fail(Violation::kLatinColumn, a, b, p,
                    "column " + std::to_string(b) + " repeats element " +
                        std::to_string(p));
      }
      seen[p] = 1;
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (g.mul(kIdentity, a) != a || g.mul(a, kIdentity) != a) {
      return fail(Violation::kIdentity, a, 0, 0,
                  "element 0 does not act as identity on " +
                      std::to_string(a));
    }
  }
  for (Element a = 0; a < n; ++a) {
    Element b = g.inv(a);
    if (g.mul(a, b) != kIdentity || g.mul(b, a) != kIdentity) {
      return fail(Violation::kInverse, a, b, 0,
                  "no two-sided inverse for " + std::to_string(a));
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          std::ostringstream os;
          os << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b
             << "*" << c << ")";
          return fail(Violation::kAssociativity, a, b, c, os.str());
        }
      }
    }
  }
  return {};
}

std::size_t element_order(const GroupTable& g, Element a) {
  std::size_t k = 1;
  for (Element x = a; x != kIdentity; x = g.mul(x, a)) ++k;
  return k;
}

GroupTable direct_product(const GroupTable& g1, const GroupTable& g2,
                          const Limits& limits) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const std::size_t n = n1 * n2;
  if (n > limits.max_order) {
    throw OrderCapExceeded("direct product order " + std::to_string(n) +
                           " exceeds cap " + std::to_string(limits.max_order));
  }
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (Element a1 = 0; a1 < n1; ++a1) {
    for (Element a2 = 0; a2 < n2; ++a2) {
      const Element a = a1 * n2 + a2;
      labels[a] = "(" + g1.label(a1) + "," + g2.label(a2) + ")";
      for (Element b1 = 0; b1 < n1; ++b1) {
        for (Element b2 = 0; b2 < n2; ++b2) {
          mul[a * n + b1 * n2 + b2] =
              static_cast<Element>(g1.mul(a1, b1) * n2 + g2.mul(a2, b2));
        }
      }
    }
  }
  GroupTable g(n, std::move(mul), std::move(labels),
               g1.spec() + "x" + g2.spec());
  return g;
}

}  // namespace conjposet
