#include "numera/codec.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "internal.hpp"
#include "numera/unicode.hpp"

namespace numera {

namespace {

constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

} // namespace

// ---------------------------------------------------------------------------
// Radix family detection

std::optional<RadixFamily> radix_family(const PreNumerationSystem& system) {
  if (system.weights.kind() != WeightSequence::Kind::Geometric) return std::nullopt;
  const auto numerals = system.alphabet.numerals();
  if (numerals.empty()) return std::nullopt;
  if (system.weights.geometric_base() != numerals.size()) return std::nullopt;

  std::vector<std::int64_t> values(numerals.size());
  for (std::size_t i = 0; i < numerals.size(); ++i) {
    if (!internal::fits_int64(numerals[i].value)) return std::nullopt;
    values[i] = numerals[i].value.convert_to<std::int64_t>();
  }
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const std::int64_t lo = *min_it, hi = *max_it;
  if (lo > 0 || hi < 0) return std::nullopt;
  if (hi - lo + 1 != static_cast<std::int64_t>(numerals.size())) return std::nullopt;

  RadixFamily rf;
  rf.base = static_cast<std::int64_t>(numerals.size());
  rf.negative_count = -lo;
  rf.positive_count = hi;
  rf.index_by_offset.assign(numerals.size(), kNoIndex);
  rf.value_by_index = values;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto& slot = rf.index_by_offset[static_cast<std::size_t>(values[i] - lo)];
    if (slot != kNoIndex) return std::nullopt;  // duplicate digit value
    slot = i;
  }
  rf.zero_index = rf.index_of_value(0);
  return rf;
}

RadixFamily require_radix_family(const PreNumerationSystem& system) {
  if (auto rf = radix_family(system)) return *std::move(rf);
  throw NotRadixFamilyError(
      "system '" + system.name +
      "' does not have geometric weights over a contiguous complete residue digit set");
}

// ---------------------------------------------------------------------------
// Parsing and rendering

DigitString parse(const PreNumerationSystem& system, std::string_view text) {
  if (text.empty()) throw EmptyInputError();
  const std::u32string scalars = utf8_decode(text);
  if (scalars.empty()) throw EmptyInputError();

  DigitString out;
  std::size_t i = 0;
  if (system.external_sign && (scalars[0] == U'-' || scalars[0] == U'−')) {
    out.negative_mark = true;
    i = 1;
    if (i == scalars.size()) throw EmptyInputError();
  }
  out.digits.reserve(scalars.size() - i);
  for (; i < scalars.size(); ++i) {
    const auto index = system.alphabet.index_of_symbol(scalars[i]);
    if (!index) throw UnknownSymbolError(scalars[i], i);
    out.digits.push_back(*index);
  }
  return out;
}

std::string render(const PreNumerationSystem& system, const DigitString& digits) {
  std::string out;
  if (digits.negative_mark) out.push_back('-');
  for (std::size_t index : digits.digits) out += utf8_encode(system.alphabet[index].symbol);
  return out;
}

Integer value_of(const PreNumerationSystem& system, const DigitString& digits) {
  const std::size_t n = digits.length();
  if (const auto limit = system.weights.position_limit(); limit && n > *limit)
    throw PositionError("digit string of length " + std::to_string(n) + " exceeds the " +
                        std::to_string(*limit) + "-entry weight table");

  Integer total = 0;
  if (system.weights.kind() == WeightSequence::Kind::Geometric) {
    const Integer& base = system.weights.geometric_base();
    for (std::size_t k = 0; k < n; ++k) {
      total *= base;
      total += system.alphabet[digits.digits[k]].value;
    }
  } else {
    for (std::size_t p = 1; p <= n; ++p)
      total += system.alphabet[digits.at_position(p)].value * system.weights.at(p);
  }
  return digits.negative_mark ? Integer(-total) : total;
}

Integer value_of(const PreNumerationSystem& system, std::string_view text) {
  return value_of(system, parse(system, text));
}

// ---------------------------------------------------------------------------
// Canonical form

CanonicalForm canonicalize(const PreNumerationSystem& system, const DigitString& digits) {
  std::size_t lead = 0;
  while (lead < digits.digits.size() && system.alphabet[digits.digits[lead]].value == 0)
    ++lead;
  CanonicalForm out;
  if (lead == digits.digits.size()) {
    const auto zero = system.alphabet.zero_index();
    if (!zero) throw NoZeroNumeralError();
    out.digits = {*zero};
    out.negative_mark = false;  // canonical zero is unmarked
    return out;
  }
  out.digits.assign(digits.digits.begin() + static_cast<std::ptrdiff_t>(lead),
                    digits.digits.end());
  out.negative_mark = digits.negative_mark;
  return out;
}

bool is_canonical(const PreNumerationSystem& system, const DigitString& digits) {
  if (digits.empty()) return false;
  if (digits.length() > 1) return system.alphabet[digits.digits.front()].value != 0;
  if (digits.negative_mark && system.alphabet[digits.digits.front()].value == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Radix encoding

CanonicalForm encode_radix(const PreNumerationSystem& system, const Integer& value) {
  const RadixFamily rf = require_radix_family(system);
  Integer n = value;
  bool mark = false;
  if ((n < 0 && rf.negative_count == 0) || (n > 0 && rf.positive_count == 0)) {
    if (!system.external_sign)
      throw NegativeWithoutSignError("value " + value.str() + " has a sign the digit set of '" +
                                     system.name + "' cannot reach and there is no external sign");
    mark = true;
    n = -n;
  }

  std::vector<std::size_t> reversed;
  const Integer base = rf.base;
  while (n != 0) {
    Integer r = n % base;
    if (r < 0) r += base;
    if (r > rf.positive_count) r -= base;  // unique in-range residue
    reversed.push_back(rf.index_of_value(r.convert_to<std::int64_t>()));
    n = (n - r) / base;
  }
  if (reversed.empty()) {
    CanonicalForm zero;
    zero.digits = {rf.zero_index};
    return zero;
  }
  return internal::from_reversed(reversed, mark);
}

// ---------------------------------------------------------------------------
// Bounded search

namespace {

std::optional<CanonicalForm> search_plain(const PreNumerationSystem& system,
                                          const Integer& target, std::size_t max_len) {
  const auto numerals = system.alphabet.numerals();
  if (numerals.empty()) return std::nullopt;
  std::size_t limit = max_len;
  if (const auto table_limit = system.weights.position_limit())
    limit = std::min(limit, *table_limit);

  for (std::size_t length = 1; length <= limit; ++length) {
    std::vector<Integer> weights(length + 1);
    for (std::size_t p = 1; p <= length; ++p) weights[p] = system.weights.at(p);

    // reach[k]: everything positions k..length can still contribute. The
    // top position excludes zero-valued digits so hits are canonical.
    std::vector<std::set<Integer>> reach(length + 2);
    reach[length + 1].insert(0);
    for (std::size_t k = length; k >= 1; --k) {
      const bool top = (k == length && length > 1);
      for (const Integer& rest : reach[k + 1])
        for (const auto& numeral : numerals) {
          if (top && numeral.value == 0) continue;
          reach[k].insert(numeral.value * weights[k] + rest);
        }
      if (k == 1) break;
    }
    if (!reach[1].contains(target)) continue;

    // Greedy reconstruction, smallest alphabet index at position 1 first:
    // the least string under the documented tie-break.
    std::vector<std::size_t> by_position(length + 1);
    Integer remaining = target;
    for (std::size_t k = 1; k <= length; ++k) {
      const bool top = (k == length && length > 1);
      bool found = false;
      for (std::size_t i = 0; i < numerals.size() && !found; ++i) {
        if (top && numerals[i].value == 0) continue;
        const Integer rest = remaining - numerals[i].value * weights[k];
        if (reach[k + 1].contains(rest)) {
          by_position[k] = i;
          remaining = rest;
          found = true;
        }
      }
      if (!found) return std::nullopt;  // unreachable: membership was checked
    }
    CanonicalForm out;
    out.digits.reserve(length);
    for (std::size_t k = length; k >= 1; --k) out.digits.push_back(by_position[k]);
    return out;
  }
  return std::nullopt;
}

} // namespace

std::optional<CanonicalForm> encode_search(const PreNumerationSystem& system,
                                           const Integer& value, std::size_t max_len) {
  if (max_len == 0) throw std::invalid_argument("max_len must be >= 1");
  if (auto hit = search_plain(system, value, max_len)) return hit;
  if (system.external_sign && value != 0) {
    if (auto hit = search_plain(system, -value, max_len)) {
      hit->negative_mark = true;
      return hit;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Negation, sign, comparison

CanonicalForm negate(const PreNumerationSystem& system, const CanonicalForm& digits) {
  const RadixFamily rf = require_radix_family(system);
  if (internal::is_zero_string(system, digits)) return canonicalize(system, digits);

  if (rf.two_signed()) {
    if (digits.negative_mark) {
      // the marked value is -(raw digits); its opposite is the raw string
      CanonicalForm out = digits;
      out.negative_mark = false;
      return canonicalize(system, out);
    }
    const DigitString zero;  // combine as 0 - digits
    auto reversed = internal::combine_digits(rf, zero, 1, digits, -1);
    if (!reversed)
      throw NegativeWithoutSignError("cannot negate within '" + system.name + "'");
    return canonicalize(system, internal::from_reversed(*reversed, false));
  }

  // single-signed digit set: the external mark is the only way to flip
  if (!system.external_sign)
    throw NegativeWithoutSignError("system '" + system.name +
                                   "' has single-signed digits and no external sign");
  CanonicalForm out = digits;
  out.negative_mark = !digits.negative_mark;
  return out;
}

int sign_of(const PreNumerationSystem& system, const CanonicalForm& digits) {
  if (radix_family(system)) {
    // canonical: the leading digit's weight dominates every possible tail
    const Integer& lead = system.alphabet[digits.digits.front()].value;
    if (lead == 0) return 0;
    const int sign = lead > 0 ? 1 : -1;
    return digits.negative_mark ? -sign : sign;
  }
  const Integer v = value_of(system, digits);
  if (v == 0) return 0;
  return v < 0 ? -1 : 1;
}

Ordering compare(const PreNumerationSystem& system, const CanonicalForm& lhs,
                 const CanonicalForm& rhs) {
  const Integer a = value_of(system, lhs);
  const Integer b = value_of(system, rhs);
  if (a < b) return Ordering::Less;
  if (a > b) return Ordering::Greater;
  return Ordering::Equal;
}

} // namespace numera
