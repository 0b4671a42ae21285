#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "numera/errors.hpp"
#include "numera/integer.hpp"

namespace numera {

/// One symbol of a numeral alphabet together with its integer value.
struct Numeral {
  char32_t symbol = U'0';
  Integer value;
};

/// Ordered finite sequence of numerals.
///
/// Construction accepts duplicate symbols or values so that systems read
/// from files can be inspected; `validate` reports such violations. Lookups
/// resolve to the first match. Immutable after construction.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Numeral> numerals);

  std::span<const Numeral> numerals() const { return numerals_; }
  std::size_t size() const { return numerals_.size(); }
  bool empty() const { return numerals_.empty(); }
  const Numeral& operator[](std::size_t index) const { return numerals_[index]; }

  std::optional<std::size_t> index_of_symbol(char32_t symbol) const;
  std::optional<std::size_t> index_of_value(const Integer& value) const;
  /// Index of the numeral valued zero, if any.
  std::optional<std::size_t> zero_index() const { return zero_; }

 private:
  std::vector<Numeral> numerals_;
  std::unordered_map<char32_t, std::size_t> by_symbol_;
  std::map<Integer, std::size_t> by_value_;
  std::optional<std::size_t> zero_;
};

/// The weight sequence: the value attached to each digit position.
/// Positions are 1-based starting at the rightmost digit.
class WeightSequence {
 public:
  enum class Kind { Geometric, Factorial, Power, Constant, Table };

  /// weight(n) = base^(n-1). Requires base >= 2.
  static WeightSequence geometric(Integer base);
  /// weight(n) = n!
  static WeightSequence factorial();
  /// weight(n) = n^n
  static WeightSequence power();
  /// weight(n) = value for every position. Requires value != 0.
  static WeightSequence constant(Integer value);
  /// weight(n) = weights[n-1]; positions beyond the table are errors.
  static WeightSequence table(std::vector<Integer> weights);

  Kind kind() const { return kind_; }
  const Integer& geometric_base() const;
  const Integer& constant_value() const;
  std::span<const Integer> table_weights() const;

  /// Number of defined positions; nullopt when every position is defined.
  std::optional<std::size_t> position_limit() const;

  /// Weight at a 1-based position. Throws PositionError for position 0 or
  /// for positions beyond a table.
  Integer at(std::size_t position) const;

 private:
  WeightSequence(Kind kind, Integer param, std::vector<Integer> table);

  Kind kind_;
  Integer param_;
  std::vector<Integer> table_;
};

/// A numeral system: named alphabet, weight sequence and parsing flags.
/// Value object, immutable by convention once built; every operation in the
/// library is a pure function over it.
struct PreNumerationSystem {
  std::string name;
  Alphabet alphabet;
  WeightSequence weights = WeightSequence::geometric(10);
  /// Whether a leading '-' (or U+2212) is accepted when parsing and emitted
  /// when rendering negative values. Lets systems whose digits cover only
  /// one sign reach the other half of the integers.
  bool external_sign = false;
};

/// How a weight sequence behaves on an inspected prefix.
struct ClassificationReport {
  enum class Ordered { Yes, No, YesOnCheckedPrefix };

  bool finite = true;
  Ordered perfectly_ordered = Ordered::Yes;
  bool perfectly_disordered = false;
  std::size_t checked_prefix_length = 0;
};

/// Default symbol for a digit value:
///   0..9    -> ASCII digits          10..35  -> 'A'..'Z'
///   -1..-5  -> α β δ γ ε             -6..-24 -> ζ η θ ι κ λ μ ν ξ ο π ρ σ τ υ φ χ ψ ω
/// Values beyond these ranges map into the private use area, U+E000 upward
/// for positive and U+E800 upward for negative values. Throws
/// std::invalid_argument outside the supported span.
char32_t default_symbol(const Integer& value);

/// Builds the signed-digit system with digit values
/// {-negative_count .. positive_count} and geometric base
/// negative_count + positive_count + 1, using the default symbols.
/// external_sign is set exactly when negative_count == 0. Throws
/// std::invalid_argument when both counts are zero or a count exceeds 2000.
PreNumerationSystem make_signed_system(std::int64_t negative_count,
                                       std::int64_t positive_count);

/// The base-6 system with numerals 0 Γ Π Δ H ∀ and an external sign.
PreNumerationSystem make_base6();

/// Product of the first k primes (2, 6, 30, 210, ...). k >= 1.
Integer primorial_base(std::size_t k);

/// Weight at a 1-based position of the system's sequence.
Integer weight(const PreNumerationSystem& system, std::size_t position);

/// Classifies the weight sequence on a prefix. prefix_length >= 2.
ClassificationReport classify(const PreNumerationSystem& system,
                              std::size_t prefix_length);

/// Human-readable invariant violations; empty means the system is well
/// formed. Violations are data, not failures.
std::vector<std::string> validate(const PreNumerationSystem& system);

/// Built-in system for a well-known name, or nullopt.
std::optional<PreNumerationSystem> builtin_system(std::string_view name);

/// Names of all built-in systems, in a stable order.
std::vector<std::string> builtin_system_names();

} // namespace numera
