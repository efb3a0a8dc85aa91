#pragma once

#include <cstdint>
#include <vector>

#include "gridabe/ops.hpp"

namespace gridabe {

namespace detail_powers {
template <typename E>
E neutral() {
  if constexpr (requires { E::one(); })
    return E::one();
  else
    return E::identity();
}
}  // namespace detail_powers

// Fixed-base exponentiation with 4-bit windows precomputed over the scalar's
// canonical little-endian encoding: table[w][d-1] = base^(d * 16^w). One
// exponentiation then costs at most one group mul per nonzero nibble, with
// no squarings. Results are bit-identical to E::exp on the same inputs, and
// each call bumps the same op counter, so callers may treat this as a plain
// exponentiation that happens to amortize the base.
template <typename E>
class FixedBaseTable {
 public:
  // the table itself is built lazily on first use, sized by the scalar
  // encoding width of whatever backend calls exp
  FixedBaseTable(const E& base, std::uint64_t OpCounts::* counter)
      : base_(base), counter_(counter) {}

  template <typename Scalar>
  E exp(const Scalar& s) const {
    const auto enc = s.to_bytes();
    ensure_built(enc.size() * 2);
    ++(op_counts().*counter_);
    E acc = detail_powers::neutral<E>();
    for (std::size_t i = 0; i < enc.size(); ++i) {
      std::uint8_t lo = enc[i] & 0x0F;
      std::uint8_t hi = enc[i] >> 4;
      if (lo) acc = acc.mul(table_[2 * i][lo - 1]);
      if (hi) acc = acc.mul(table_[2 * i + 1][hi - 1]);
    }
    return acc;
  }

  const E& base() const { return base_; }

 private:
  void ensure_built(std::size_t windows) const {
    if (!table_.empty()) return;
    table_.reserve(windows);
    E cur = base_;
    for (std::size_t w = 0; w < windows; ++w) {
      std::vector<E> row;
      row.reserve(15);
      row.push_back(cur);
      for (int d = 2; d <= 15; ++d) row.push_back(row.back().mul(cur));
      // step the window base by 16: cur <- cur^16
      E next = cur;
      for (int i = 0; i < 4; ++i) next = next.mul(next);
      table_.push_back(std::move(row));
      cur = next;
    }
  }

  E base_;
  std::uint64_t OpCounts::* counter_;
  mutable std::vector<std::vector<E>> table_;
};

}  // namespace gridabe
