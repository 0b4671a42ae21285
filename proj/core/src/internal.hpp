#pragma once

// Shared digit-level helpers for the radix-family algorithms. Not installed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "numera/codec.hpp"

namespace numera::internal {

inline bool fits_int64(const Integer& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

/// The unique digit in {-negative_count .. positive_count} congruent to t
/// mod base.
inline std::int64_t in_range_residue(std::int64_t t, const RadixFamily& rf) {
  std::int64_t r = t % rf.base;
  if (r < 0) r += rf.base;
  if (r > rf.positive_count) r -= rf.base;
  return r;
}

inline bool is_zero_string(const PreNumerationSystem& system, const DigitString& digits) {
  return std::all_of(digits.digits.begin(), digits.digits.end(), [&](std::size_t i) {
    return system.alphabet[i].value == 0;
  });
}

/// Position-wise combination sx*x + sy*y, renormalizing so every emitted
/// digit is the unique in-range residue and the rest carries. Returns the
/// digits least significant first, or nullopt when the leftover carry
/// cannot drain because the total's sign is unreachable by the digit set.
inline std::optional<std::vector<std::size_t>> combine_digits(const RadixFamily& rf,
                                                              const DigitString& x, int sx,
                                                              const DigitString& y, int sy) {
  const std::size_t positions = std::max(x.length(), y.length());
  std::vector<std::size_t> reversed;
  reversed.reserve(positions + 2);
  std::int64_t carry = 0;
  for (std::size_t p = 1; p <= positions; ++p) {
    std::int64_t t = carry;
    if (p <= x.length()) t += sx * rf.value_by_index[x.at_position(p)];
    if (p <= y.length()) t += sy * rf.value_by_index[y.at_position(p)];
    const std::int64_t d = in_range_residue(t, rf);
    reversed.push_back(rf.index_of_value(d));
    carry = (t - d) / rf.base;
  }
  while (carry != 0) {
    const std::int64_t d = in_range_residue(carry, rf);
    const std::int64_t next = (carry - d) / rf.base;
    if (next == carry) return std::nullopt;  // stuck: sign unreachable
    reversed.push_back(rf.index_of_value(d));
    carry = next;
  }
  return reversed;
}

inline CanonicalForm from_reversed(const std::vector<std::size_t>& reversed, bool mark) {
  CanonicalForm out;
  out.digits.assign(reversed.rbegin(), reversed.rend());
  out.negative_mark = mark;
  return out;
}

} // namespace numera::internal
