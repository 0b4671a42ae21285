#include "numera/arithmetic.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

#include "internal.hpp"
#include "numera/unicode.hpp"

namespace numera {

namespace {

CanonicalForm canonical_zero(const RadixFamily& rf) {
  CanonicalForm zero;
  zero.digits = {rf.zero_index};
  return zero;
}

CanonicalForm add_in_family(const PreNumerationSystem& system, const RadixFamily& rf,
                            const DigitString& lhs, const DigitString& rhs) {
  const int sx = lhs.negative_mark ? -1 : 1;
  const int sy = rhs.negative_mark ? -1 : 1;
  if (auto reversed = internal::combine_digits(rf, lhs, sx, rhs, sy))
    return canonicalize(system, internal::from_reversed(*reversed, false));

  // The total's sign is unreachable by the digit set; fold it into the
  // external mark by combining the negated operands instead.
  if (!system.external_sign)
    throw NegativeWithoutSignError("sum leaves the range of '" + system.name +
                                   "' and there is no external sign");
  auto reversed = internal::combine_digits(rf, lhs, -sx, rhs, -sy);
  if (!reversed)
    throw NegativeWithoutSignError("sum leaves the range of '" + system.name + "'");
  return canonicalize(system, internal::from_reversed(*reversed, true));
}

// Appends `shift` zero digits on the right (multiplies by base^shift).
DigitString shifted(const DigitString& digits, std::size_t shift, std::size_t zero_index) {
  DigitString out = digits;
  out.digits.insert(out.digits.end(), shift, zero_index);
  return out;
}

} // namespace

CanonicalForm add(const PreNumerationSystem& system, const CanonicalForm& lhs,
                  const CanonicalForm& rhs) {
  const RadixFamily rf = require_radix_family(system);
  return add_in_family(system, rf, lhs, rhs);
}

CanonicalForm mul(const PreNumerationSystem& system, const CanonicalForm& lhs,
                  const CanonicalForm& rhs) {
  const RadixFamily rf = require_radix_family(system);
  if (internal::is_zero_string(system, lhs) || internal::is_zero_string(system, rhs))
    return canonical_zero(rf);

  // Single-digit products, looked up lazily; one entry per ordered pair.
  const std::size_t n = system.alphabet.size();
  std::vector<std::optional<CanonicalForm>> memo(n * n);
  const auto entry = [&](std::size_t xi, std::size_t yi) -> const CanonicalForm& {
    auto& slot = memo[xi * n + yi];
    if (!slot)
      slot = encode_radix(system, system.alphabet[xi].value * system.alphabet[yi].value);
    return *slot;
  };

  CanonicalForm acc = canonical_zero(rf);
  for (std::size_t p = 1; p <= rhs.length(); ++p) {
    const std::size_t yi = rhs.at_position(p);
    if (rf.value_by_index[yi] == 0) continue;
    for (std::size_t i = 1; i <= lhs.length(); ++i) {
      const std::size_t xi = lhs.at_position(i);
      if (rf.value_by_index[xi] == 0) continue;
      const CanonicalForm& e = entry(xi, yi);
      acc = add_in_family(system, rf, acc, shifted(e, i + p - 2, rf.zero_index));
    }
  }
  if (lhs.negative_mark != rhs.negative_mark) acc = negate(system, acc);
  return acc;
}

TimesTable times_table(const PreNumerationSystem& system) {
  const RadixFamily rf = require_radix_family(system);
  TimesTable table;
  table.base = rf.base;
  table.alphabet_size = system.alphabet.size();
  table.entries.reserve(table.alphabet_size * table.alphabet_size);
  for (std::size_t x = 0; x < table.alphabet_size; ++x)
    for (std::size_t y = 0; y < table.alphabet_size; ++y)
      table.entries.push_back(
          encode_radix(system, system.alphabet[x].value * system.alphabet[y].value));
  return table;
}

TableMetrics table_metrics(const PreNumerationSystem& system) {
  const RadixFamily rf = require_radix_family(system);
  TableMetrics metrics;
  const auto& values = rf.value_by_index;
  metrics.total_pairs = values.size() * values.size();
  for (std::int64_t vx : values)
    for (std::int64_t vy : values) {
      if (std::abs(vx) <= 1 || std::abs(vy) <= 1) {
        ++metrics.trivial_pairs;
      } else if (std::abs(vx * vy) >= rf.base) {
        ++metrics.carry_pairs;
      }
    }
  return metrics;
}

bool is_finite_fraction(const Integer& base, const Integer& denominator) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  if (denominator < 1) throw std::invalid_argument("denominator must be >= 1");
  Integer rest = denominator;
  for (;;) {
    const Integer g = boost::multiprecision::gcd(rest, base);
    if (g == 1) break;
    while (rest % g == 0) rest /= g;
  }
  return rest == 1;
}

FractionExpansion fraction_expansion(const PreNumerationSystem& system,
                                     const Integer& numerator, const Integer& denominator,
                                     std::size_t max_period) {
  const RadixFamily rf = require_radix_family(system);
  if (rf.negative_count != 0)
    throw NotRadixFamilyError("fraction expansion needs digits {0..base-1}");
  if (denominator < 1) throw std::invalid_argument("denominator must be >= 1");

  Integer p = numerator, q = denominator;
  const Integer p_magnitude = boost::multiprecision::abs(p);
  const Integer g = boost::multiprecision::gcd(p_magnitude, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  const bool negative = p < 0;
  if (negative && !system.external_sign)
    throw NegativeWithoutSignError("negative fractions need the external sign in '" +
                                   system.name + "'");
  const Integer magnitude = boost::multiprecision::abs(p);

  FractionExpansion expansion;
  expansion.negative = negative && magnitude != 0;
  expansion.integer_part = encode_radix(system, magnitude / q);

  // Long division; the first repeated remainder closes the minimal cycle.
  const Integer base = rf.base;
  Integer rem = magnitude % q;
  std::map<Integer, std::size_t> seen;
  std::vector<std::size_t> digits;
  std::optional<std::size_t> cycle_start;
  while (rem != 0) {
    if (const auto it = seen.find(rem); it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen.emplace(rem, digits.size());
    rem *= base;
    const Integer digit = rem / q;
    rem -= digit * q;
    digits.push_back(rf.index_of_value(digit.convert_to<std::int64_t>()));
  }
  if (cycle_start) {
    expansion.preperiod.assign(digits.begin(),
                               digits.begin() + static_cast<std::ptrdiff_t>(*cycle_start));
    expansion.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(*cycle_start),
                            digits.end());
  } else {
    expansion.preperiod = std::move(digits);
  }
  if (expansion.period.size() > max_period) throw PeriodExceedsBoundError(max_period);
  return expansion;
}

std::string render_expansion(const PreNumerationSystem& system,
                             const FractionExpansion& expansion) {
  std::string out;
  if (expansion.negative) out.push_back('-');
  out += render(system, expansion.integer_part);
  if (expansion.preperiod.empty() && expansion.period.empty()) return out;
  out.push_back('.');
  for (std::size_t index : expansion.preperiod)
    out += utf8_encode(system.alphabet[index].symbol);
  if (!expansion.period.empty()) {
    out.push_back('(');
    for (std::size_t index : expansion.period)
      out += utf8_encode(system.alphabet[index].symbol);
    out.push_back(')');
  }
  return out;
}

Integer round_value(const Integer& n, const Integer& grain) {
  if (grain < 1) throw std::invalid_argument("grain must be >= 1");
  // nearest multiple, ties away from zero
  const Integer magnitude = ((2 * boost::multiprecision::abs(n) + grain) / (2 * grain)) * grain;
  return n < 0 ? Integer(-magnitude) : magnitude;
}

CanonicalForm truncate_at(const PreNumerationSystem& system, const CanonicalForm& digits,
                          std::size_t cut) {
  const RadixFamily rf = require_radix_family(system);
  if (cut < 1 || cut >= digits.length())
    throw PositionError("cut must satisfy 1 <= cut < length (got " + std::to_string(cut) +
                        " for length " + std::to_string(digits.length()) + ")");
  CanonicalForm out = digits;
  for (std::size_t p = 1; p <= cut; ++p)
    out.digits[out.digits.size() - p] = rf.zero_index;
  return out;
}

} // namespace numera
