#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace conjposet {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Square boolean matrix stored as word-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : rows_(n, Bits(n)) {}

  std::size_t size() const { return rows_.size(); }

  bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }

  const Bits& row(std::size_t i) const { return rows_[i]; }
  Bits& row(std::size_t i) { return rows_[i]; }

  BitMatrix transposed() const {
    BitMatrix t(size());
    for (std::size_t i = 0; i < size(); ++i) {
      for (auto j = rows_[i].find_first(); j != Bits::npos;
           j = rows_[i].find_next(j)) {
        t.set(j, i);
      }
    }
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<Bits> rows_;
};

// Calls f(i) for every set bit of b in increasing order.
template <typename F>
void for_each_bit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(i);
}

}  // namespace conjposet
