#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conjposet {

using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

// Resource caps shared by construction and enumeration.
struct Limits {
  std::size_t max_order = 512;
  std::size_t max_subgroups = 100000;
};

// A finite group given by its Cayley table. Element 0 is the identity.
//
// The table is not validated on construction so that defective tables can
// be inspected with validate_group(); build_group() and direct_product()
// only ever return validated tables.
class GroupTable {
 public:
  GroupTable(std::size_t order, std::vector<Element> mul,
             std::vector<std::string> labels, std::string spec);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& spec() const { return spec_; }
  const std::vector<Element>& table() const { return mul_; }

  // x^-1 h x
  Element conj(Element h, Element x) const { return mul(mul(inv(x), h), x); }

  std::optional<Element> find_label(std::string_view label) const;

  bool is_abelian() const;

 private:
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::string spec_;
};

enum class Violation {
  kNone,
  kShape,
  kLatinRow,
  kLatinColumn,
  kIdentity,
  kInverse,
  kAssociativity,
};

struct ValidationResult {
  Violation violation = Violation::kNone;
  // Counterexample indices; unused slots are zero.
  std::array<Element, 3> witness{};
  std::string message;

  bool ok() const { return violation == Violation::kNone; }
};

// Checks Latin square, identity at 0, inverses and associativity (O(n^3)).
// Reports the first violation found.
ValidationResult validate_group(const GroupTable& g);

std::size_t element_order(const GroupTable& g, Element a);

// Pair (a, b) is encoded as a * |g2| + b.
GroupTable direct_product(const GroupTable& g1, const GroupTable& g2,
                          const Limits& limits = {});

}  // namespace conjposet
