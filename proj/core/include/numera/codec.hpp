#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numera/system.hpp"

namespace numera {

/// A digit string over a system's alphabet, most significant digit first.
/// Digits are stored as indices into the owning system's alphabet; positions
/// are numbered 1 at the rightmost digit. May be empty only as an
/// intermediate; public operations never return an empty string.
struct DigitString {
  std::vector<std::size_t> digits;
  /// External leading minus mark (only meaningful with external_sign).
  bool negative_mark = false;

  std::size_t length() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  /// Alphabet index at a 1-based position counted from the right.
  std::size_t at_position(std::size_t position) const {
    return digits[digits.size() - position];
  }

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// A DigitString with no leading zero-valued numeral; zero is the single
/// zero numeral, unmarked. Produced by canonicalize, encode_radix and
/// encode_search.
using CanonicalForm = DigitString;

enum class Ordering { Less, Equal, Greater };

/// Shape of systems where carry arithmetic is well defined: geometric
/// weights whose digit values form a contiguous complete residue system
/// mod the base, containing zero.
struct RadixFamily {
  std::int64_t base = 0;
  std::int64_t negative_count = 0;  ///< digits reach down to -negative_count
  std::int64_t positive_count = 0;  ///< digits reach up to +positive_count
  std::size_t zero_index = 0;
  std::vector<std::size_t> index_by_offset;  ///< digit value v -> alphabet index, at offset v + negative_count
  std::vector<std::int64_t> value_by_index;  ///< alphabet index -> digit value

  std::size_t index_of_value(std::int64_t v) const {
    return index_by_offset[static_cast<std::size_t>(v + negative_count)];
  }
  bool two_signed() const { return negative_count > 0 && positive_count > 0; }
};

/// Detects the radix family; nullopt when the system is not in it.
std::optional<RadixFamily> radix_family(const PreNumerationSystem& system);

/// As radix_family, but throws NotRadixFamilyError instead.
RadixFamily require_radix_family(const PreNumerationSystem& system);

/// Maps UTF-8 text onto a digit string. With external_sign, a leading '-'
/// or '−' records the external negative mark. Throws EmptyInputError and
/// UnknownSymbolError (0-based scalar index).
DigitString parse(const PreNumerationSystem& system, std::string_view text);

/// Symbols most significant first, external mark rendered as '-'.
std::string render(const PreNumerationSystem& system, const DigitString& digits);

/// The value: sum over positions p of digit value times weight(p), negated
/// under the external mark. Throws PositionError when the string is longer
/// than a weight table.
Integer value_of(const PreNumerationSystem& system, const DigitString& digits);

/// Convenience: parse then evaluate.
Integer value_of(const PreNumerationSystem& system, std::string_view text);

/// Encodes an integer in a radix-family system by repeated residue digit
/// selection; the result is canonical and unique. Values whose sign the
/// digit set cannot reach use the external mark when available, otherwise
/// NegativeWithoutSignError. Throws NotRadixFamilyError.
CanonicalForm encode_radix(const PreNumerationSystem& system, const Integer& value);

/// Bounded search for a representation of `value` using at most max_len
/// digits, in any system. Returns the shortest hit; ties break to the
/// string whose digits compare least starting from position 1 (rightmost)
/// by alphabet index. Unmarked strings are preferred; external-sign systems
/// fall back to a marked representation of -value. nullopt means not
/// representable within the bound.
std::optional<CanonicalForm> encode_search(const PreNumerationSystem& system,
                                           const Integer& value,
                                           std::size_t max_len);

/// Strips leading zero-valued numerals; a value of zero becomes the single
/// zero numeral, unmarked. Throws NoZeroNumeralError when everything strips
/// away and the alphabet has no zero numeral.
CanonicalForm canonicalize(const PreNumerationSystem& system, const DigitString& digits);

bool is_canonical(const PreNumerationSystem& system, const DigitString& digits);

/// Digit-wise negation with carry renormalization in radix-family systems;
/// single-signed digit sets toggle the external mark instead. Involution.
CanonicalForm negate(const PreNumerationSystem& system, const CanonicalForm& digits);

/// -1, 0 or +1. In radix-family systems this is the sign of the leading
/// significant digit (the tail can never outweigh it), with the external
/// mark folded in; elsewhere the value is decoded.
int sign_of(const PreNumerationSystem& system, const CanonicalForm& digits);

/// Ordering of the denoted values.
Ordering compare(const PreNumerationSystem& system, const CanonicalForm& lhs,
                 const CanonicalForm& rhs);

} // namespace numera
