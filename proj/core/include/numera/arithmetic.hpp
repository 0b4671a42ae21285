#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "numera/codec.hpp"

namespace numera {

/// All ordered single-digit products of a system, rendered in the system
/// itself. Row-major over alphabet indices.
struct TimesTable {
  Integer base;
  std::size_t alphabet_size = 0;
  std::vector<CanonicalForm> entries;

  const CanonicalForm& at(std::size_t x_index, std::size_t y_index) const {
    return entries[x_index * alphabet_size + y_index];
  }
};

/// Size measures of a times table. A pair is trivial when either factor has
/// |value| <= 1; it is a carry pair when both factors have |value| >= 2 and
/// the product's magnitude reaches the base. The remaining pairs are plain:
/// nontrivial single-digit products.
struct TableMetrics {
  std::size_t total_pairs = 0;
  std::size_t trivial_pairs = 0;
  std::size_t carry_pairs = 0;

  std::size_t plain_pairs() const { return total_pairs - trivial_pairs - carry_pairs; }
};

/// Positional expansion of a rational: integer digits, a non-repeating
/// block, then the minimal repeating block. An empty period means the
/// expansion terminates.
struct FractionExpansion {
  bool negative = false;
  CanonicalForm integer_part;
  std::vector<std::size_t> preperiod;  ///< alphabet indices, left to right
  std::vector<std::size_t> period;

  bool finite() const { return period.empty(); }
};

/// Digit-wise sum with carry normalization: at each position the unique
/// in-range digit congruent to the running total is kept and the rest
/// carries. Requires a radix-family system; results whose sign the digits
/// cannot reach need the external mark (NegativeWithoutSignError otherwise).
CanonicalForm add(const PreNumerationSystem& system, const CanonicalForm& lhs,
                  const CanonicalForm& rhs);

/// Schoolbook product: single-digit times-table entries, shifted and
/// accumulated with `add`. Same preconditions as add.
CanonicalForm mul(const PreNumerationSystem& system, const CanonicalForm& lhs,
                  const CanonicalForm& rhs);

/// Builds the full times table. Throws NotRadixFamilyError.
TimesTable times_table(const PreNumerationSystem& system);

/// Counts trivial/carry pairs over all ordered digit pairs.
TableMetrics table_metrics(const PreNumerationSystem& system);

/// True iff p/denominator has a terminating expansion in the given base for
/// every integer p, i.e. every prime factor of the denominator divides the
/// base. base >= 2, denominator >= 1.
bool is_finite_fraction(const Integer& base, const Integer& denominator);

/// Long division of numerator/denominator in a geometric system with digits
/// {0..base-1}. The repeating block is minimal; it is empty exactly when
/// the reduced denominator divides a power of the base. max_period bounds
/// the repeating block (PeriodExceedsBoundError; never hit once
/// max_period >= denominator). Negative inputs need external_sign.
FractionExpansion fraction_expansion(const PreNumerationSystem& system,
                                     const Integer& numerator,
                                     const Integer& denominator,
                                     std::size_t max_period);

/// `<integer>.<preperiod>(<period>)`; finite expansions omit the
/// parentheses, integral values omit the point.
std::string render_expansion(const PreNumerationSystem& system,
                             const FractionExpansion& expansion);

/// Nearest multiple of grain, ties away from zero. grain >= 1.
Integer round_value(const Integer& n, const Integer& grain);

/// Replaces the `cut` rightmost digits with the zero numeral, dropping the
/// tail's contribution. Requires a radix-family system and
/// 1 <= cut < length.
CanonicalForm truncate_at(const PreNumerationSystem& system,
                          const CanonicalForm& digits, std::size_t cut);

} // namespace numera
