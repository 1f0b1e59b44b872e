#pragma once

#include <compare>
#include <cstdint>

namespace hasm {

/// A moment of hybrid time: physical time plus cumulative jump count,
/// ordered lexicographically. Componentwise addition makes this a totally
/// ordered monoid with neutral (0, 0); a jump moves from (t, k) to
/// (t, k + 1) without advancing t.
struct HybridTime {
  double t = 0.0;
  uint64_t k = 0;

  friend HybridTime operator+(const HybridTime& a, const HybridTime& b) {
    return {a.t + b.t, a.k + b.k};
  }
  friend bool operator==(const HybridTime&, const HybridTime&) = default;
  friend std::partial_ordering operator<=>(const HybridTime& a, const HybridTime& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.k <=> b.k;
  }

  /// The discrete successor moment i+ of a jump at this moment.
  HybridTime jump_successor() const { return {t, k + 1}; }
};

}  // namespace hasm
