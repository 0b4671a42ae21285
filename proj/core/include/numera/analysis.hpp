#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numera/codec.hpp"

namespace numera {

/// Enumeration guard. Inputs whose search space exceeds the budget are
/// rejected with BudgetExceededError up front: it bounds |alphabet|^max_len
/// and the window width.
struct AnalysisBudget {
  std::uint64_t max_states = 10'000'000;
};

/// Closed-form verdict for geometric systems whose digits form a contiguous
/// complete residue system mod the base containing zero. Such systems are
/// complete on the stated coverage and univocal up to leading zeros; the
/// brute-force analyzers must agree with this on every tested window.
struct FamilyVerdict {
  enum class Coverage { AllIntegers, NonNegativeOnly, NonPositiveOnly };

  std::string family;  ///< e.g. "N_(5,4)"
  Coverage coverage = Coverage::AllIntegers;
  bool via_external_sign = false;  ///< coverage relies on the minus mark
  bool univocal = true;
};

/// Two distinct canonical strings denoting the same value.
struct DuplicateWitness {
  CanonicalForm first;
  CanonicalForm second;
  Integer value;
};

/// Evidence produced by the bounded analyzers. Stored witness strings
/// re-evaluate to the value they are recorded for.
struct AnalysisReport {
  enum class Mode { Completeness, Univocality };

  std::string system_name;
  Mode mode = Mode::Completeness;
  Integer window_lo, window_hi;
  std::size_t max_len = 0;

  bool complete_on_window = false;
  std::vector<Integer> missing;    ///< ascending; truncated to kMissingLimit
  std::size_t missing_total = 0;   ///< count before truncation
  std::vector<std::pair<Integer, CanonicalForm>> witnesses;  ///< representable window values

  bool univocal_on_window = false;
  std::vector<DuplicateWitness> duplicates;  ///< ascending value; truncated
  std::size_t duplicate_total = 0;           ///< values with >= 2 canonical strings

  std::optional<std::string> fast_path_used;

  static constexpr std::size_t kMissingLimit = 1000;
  static constexpr std::size_t kDuplicateLimit = 1000;
};

/// Marks every integer in [lo, hi] representable or missing using strings
/// of length <= max_len (value-set dynamic programming per length; strings
/// longer than a weight table are never considered). external_sign systems
/// treat n and -n symmetrically through the minus mark. `jobs` partitions
/// the expansion; the result is identical for any job count.
AnalysisReport analyze_completeness(const PreNumerationSystem& system,
                                    const Integer& lo, const Integer& hi,
                                    std::size_t max_len,
                                    const AnalysisBudget& budget = {},
                                    unsigned jobs = 1);

/// Enumerates unmarked canonical strings of length <= max_len and reports
/// value collisions. Witness pairs are the two least strings per value,
/// ordered by length then by digits from position 1 by alphabet index.
AnalysisReport analyze_univocality(const PreNumerationSystem& system,
                                   std::size_t max_len,
                                   const AnalysisBudget& budget = {},
                                   unsigned jobs = 1);

/// Fast-path verdict, or nullopt when no family matches.
std::optional<FamilyVerdict> family_verdict(const PreNumerationSystem& system);

/// Stable line serialization: header lines, then `missing <n>` or
/// `dup <s1> <s2> <value>` entries. Suitable for golden tests.
std::string report_lines(const PreNumerationSystem& system,
                         const AnalysisReport& report);

} // namespace numera
