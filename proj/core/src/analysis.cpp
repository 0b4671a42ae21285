#include "numera/analysis.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "internal.hpp"

namespace numera {

namespace {

using boost::multiprecision::abs;

void check_combinatorial_budget(std::size_t alphabet_size, std::size_t max_len,
                                const AnalysisBudget& budget) {
  Integer states = 1;
  for (std::size_t i = 0; i < max_len; ++i) {
    states *= static_cast<unsigned>(alphabet_size);
    if (states > budget.max_states)
      throw BudgetExceededError("|alphabet|^max_len exceeds the state budget of " +
                                std::to_string(budget.max_states));
  }
}

std::size_t effective_length(const PreNumerationSystem& system, std::size_t max_len) {
  if (const auto limit = system.weights.position_limit())
    return std::min(max_len, *limit);
  return max_len;
}

unsigned clamp_jobs(unsigned jobs) {
  if (jobs == 0) jobs = 1;
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  return std::min(jobs, hardware * 2);
}

Integer distance_to_interval(const Integer& v, const Integer& lo, const Integer& hi) {
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return 0;
}

// Compares strings by length, then by digits starting at position 1 (the
// rightmost) by alphabet index: the library-wide canonical tie-break.
bool string_less(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t p = 1; p <= a.length(); ++p) {
    if (a.at_position(p) != b.at_position(p)) return a.at_position(p) < b.at_position(p);
  }
  return false;
}

// The two least strings seen for one value.
struct BestTwo {
  std::optional<CanonicalForm> first, second;

  void insert(const CanonicalForm& candidate) {
    if (first && candidate == *first) return;
    if (second && candidate == *second) return;
    if (!first || string_less(candidate, *first)) {
      second = std::exchange(first, candidate);
    } else if (!second || string_less(candidate, *second)) {
      second = candidate;
    }
  }
};

} // namespace

// ---------------------------------------------------------------------------
// Completeness

AnalysisReport analyze_completeness(const PreNumerationSystem& system, const Integer& lo,
                                    const Integer& hi, std::size_t max_len,
                                    const AnalysisBudget& budget, unsigned jobs) {
  if (max_len == 0) throw std::invalid_argument("max_len must be >= 1");
  if (lo > hi) throw std::invalid_argument("window must satisfy lo <= hi");
  if (hi - lo + 1 > budget.max_states)
    throw BudgetExceededError("window width exceeds the state budget of " +
                              std::to_string(budget.max_states));
  check_combinatorial_budget(system.alphabet.size(), max_len, budget);
  jobs = clamp_jobs(jobs);

  AnalysisReport report;
  report.system_name = system.name;
  report.mode = AnalysisReport::Mode::Completeness;
  report.window_lo = lo;
  report.window_hi = hi;
  report.max_len = max_len;
  if (const auto verdict = family_verdict(system)) report.fast_path_used = verdict->family;

  const bool mirror = system.external_sign;
  Integer hull_lo = lo, hull_hi = hi;
  if (mirror) {
    const Integer alo = abs(lo), ahi = abs(hi);
    hull_hi = alo > ahi ? alo : ahi;
    hull_lo = -hull_hi;
  }

  const std::size_t eff = effective_length(system, max_len);
  const auto numerals = system.alphabet.numerals();
  std::vector<Integer> weights(eff + 1);
  for (std::size_t p = 1; p <= eff; ++p) weights[p] = system.weights.at(p);
  Integer max_abs_digit = 0;
  for (const auto& numeral : numerals) {
    const Integer magnitude = abs(numeral.value);
    if (magnitude > max_abs_digit) max_abs_digit = magnitude;
  }

  // rest[L]: largest magnitude positions L+1..eff can still add; partial
  // sums farther from the hull than this can never come back.
  std::vector<Integer> rest(eff + 1, 0);
  for (std::size_t L = eff; L-- > 0;) rest[L] = rest[L + 1] + max_abs_digit * abs(weights[L + 1]);

  // layers[L]: values of exactly-length-L strings (leading zeros included),
  // pruned to what can still reach the hull.
  std::vector<std::set<Integer>> layers(eff + 1);
  layers[0].insert(0);
  std::set<Integer> representable;

  for (std::size_t L = 1; L <= eff; ++L) {
    const std::vector<Integer> previous(layers[L - 1].begin(), layers[L - 1].end());
    const auto expand_range = [&](std::size_t begin, std::size_t end) {
      std::set<Integer> local;
      for (std::size_t i = begin; i < end; ++i)
        for (const auto& numeral : numerals)
          local.insert(previous[i] + numeral.value * weights[L]);
      return local;
    };

    std::set<Integer> expanded;
    if (jobs == 1 || previous.size() < 256) {
      expanded = expand_range(0, previous.size());
    } else {
      std::vector<std::future<std::set<Integer>>> futures;
      const std::size_t chunk = (previous.size() + jobs - 1) / jobs;
      for (std::size_t begin = 0; begin < previous.size(); begin += chunk)
        futures.push_back(std::async(std::launch::async, expand_range, begin,
                                     std::min(begin + chunk, previous.size())));
      for (auto& f : futures) expanded.merge(f.get());
    }

    for (const Integer& v : expanded)
      if (v >= hull_lo && v <= hull_hi) representable.insert(v);
    std::erase_if(expanded,
                  [&](const Integer& v) { return distance_to_interval(v, hull_lo, hull_hi) > rest[L]; });
    layers[L] = std::move(expanded);
  }

  // Witness reconstruction: peel digits from the top position down, taking
  // the first alphabet index whose remainder stays reachable.
  const auto reconstruct = [&](const Integer& raw) -> CanonicalForm {
    for (std::size_t L = 1; L <= eff; ++L) {
      if (!layers[L].contains(raw)) continue;
      DigitString witness;
      witness.digits.resize(L);
      Integer remaining = raw;
      for (std::size_t k = L; k >= 1; --k) {
        for (std::size_t i = 0; i < numerals.size(); ++i) {
          const Integer rest_value = remaining - numerals[i].value * weights[k];
          const bool ok = (k == 1) ? rest_value == 0 : layers[k - 1].contains(rest_value);
          if (ok) {
            witness.digits[L - k] = i;
            remaining = rest_value;
            break;
          }
        }
      }
      return canonicalize(system, witness);
    }
    throw std::logic_error("witness reconstruction missed a recorded value");
  };

  for (Integer n = lo; n <= hi; ++n) {
    if (representable.contains(n)) {
      report.witnesses.emplace_back(n, reconstruct(n));
    } else if (mirror && representable.contains(-n)) {
      CanonicalForm witness = reconstruct(-n);
      if (n != 0) witness.negative_mark = true;
      report.witnesses.emplace_back(n, std::move(witness));
    } else {
      ++report.missing_total;
      if (report.missing.size() < AnalysisReport::kMissingLimit) report.missing.push_back(n);
    }
  }
  report.complete_on_window = report.missing_total == 0;
  return report;
}

// ---------------------------------------------------------------------------
// Univocality

AnalysisReport analyze_univocality(const PreNumerationSystem& system, std::size_t max_len,
                                   const AnalysisBudget& budget, unsigned jobs) {
  if (max_len == 0) throw std::invalid_argument("max_len must be >= 1");
  check_combinatorial_budget(system.alphabet.size(), max_len, budget);
  jobs = clamp_jobs(jobs);

  AnalysisReport report;
  report.system_name = system.name;
  report.mode = AnalysisReport::Mode::Univocality;
  report.max_len = max_len;
  if (const auto verdict = family_verdict(system)) report.fast_path_used = verdict->family;

  const std::size_t eff = effective_length(system, max_len);
  const auto numerals = system.alphabet.numerals();
  const std::size_t n = numerals.size();

  using ValueTable = std::map<Integer, BestTwo>;

  // Enumerates canonical length-L strings whose most significant digit is in
  // [lead_begin, lead_end), unmarked.
  const auto enumerate = [&](std::size_t L, std::size_t lead_begin, std::size_t lead_end) {
    ValueTable local;
    std::vector<Integer> weights(L + 1);
    for (std::size_t p = 1; p <= L; ++p) weights[p] = system.weights.at(p);
    std::vector<std::size_t> digits(L);  // most significant first
    for (std::size_t lead = lead_begin; lead < lead_end; ++lead) {
      if (L > 1 && numerals[lead].value == 0) continue;  // canonical only
      digits[0] = lead;
      std::fill(digits.begin() + 1, digits.end(), 0);
      for (bool done = false; !done;) {
        Integer value = 0;
        for (std::size_t k = 0; k < L; ++k) value += numerals[digits[k]].value * weights[L - k];
        CanonicalForm form;
        form.digits = digits;
        local[value].insert(form);
        // odometer over the non-leading slots, rightmost fastest
        std::size_t slot = L;
        for (;;) {
          if (slot == 1) {
            done = true;
            break;
          }
          --slot;
          if (++digits[slot] < n) break;
          digits[slot] = 0;
        }
      }
    }
    return local;
  };

  ValueTable table;
  const auto merge_into = [&table](ValueTable&& other) {
    for (auto& [value, best] : other) {
      auto& slot = table[value];
      if (best.first) slot.insert(*best.first);
      if (best.second) slot.insert(*best.second);
    }
  };

  for (std::size_t L = 1; L <= eff && n > 0; ++L) {
    const Integer combos = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(L));
    if (jobs == 1 || n == 1 || combos < 1024) {
      merge_into(enumerate(L, 0, n));
    } else {
      std::vector<std::future<ValueTable>> futures;
      const std::size_t chunk = (n + jobs - 1) / jobs;
      for (std::size_t begin = 0; begin < n; begin += chunk)
        futures.push_back(std::async(std::launch::async, enumerate, L, begin,
                                     std::min(begin + chunk, n)));
      for (auto& f : futures) merge_into(f.get());
    }
  }

  for (const auto& [value, best] : table) {
    if (!best.second) continue;
    ++report.duplicate_total;
    if (report.duplicates.size() < AnalysisReport::kDuplicateLimit)
      report.duplicates.push_back({*best.first, *best.second, value});
  }
  report.univocal_on_window = report.duplicate_total == 0;
  return report;
}

// ---------------------------------------------------------------------------
// Family fast path

std::optional<FamilyVerdict> family_verdict(const PreNumerationSystem& system) {
  const auto rf = radix_family(system);
  if (!rf) return std::nullopt;
  FamilyVerdict verdict;
  verdict.family = "N_(" + std::to_string(rf->negative_count) + "," +
                   std::to_string(rf->positive_count) + ")";
  verdict.univocal = true;
  if (rf->two_signed()) {
    verdict.coverage = FamilyVerdict::Coverage::AllIntegers;
  } else if (rf->negative_count == 0) {
    verdict.via_external_sign = system.external_sign;
    verdict.coverage = system.external_sign ? FamilyVerdict::Coverage::AllIntegers
                                            : FamilyVerdict::Coverage::NonNegativeOnly;
  } else {
    verdict.via_external_sign = system.external_sign;
    verdict.coverage = system.external_sign ? FamilyVerdict::Coverage::AllIntegers
                                            : FamilyVerdict::Coverage::NonPositiveOnly;
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Serialization

std::string report_lines(const PreNumerationSystem& system, const AnalysisReport& report) {
  std::ostringstream out;
  out << "system " << report.system_name << "\n";
  if (report.mode == AnalysisReport::Mode::Completeness) {
    out << "mode completeness\n";
    out << "range " << report.window_lo.str() << ".." << report.window_hi.str() << "\n";
  } else {
    out << "mode univocality\n";
  }
  out << "max-len " << report.max_len << "\n";
  if (report.fast_path_used) out << "fast-path " << *report.fast_path_used << "\n";
  if (report.mode == AnalysisReport::Mode::Completeness) {
    out << "complete " << (report.complete_on_window ? "true" : "false") << "\n";
    out << "missing-count " << report.missing_total << "\n";
    for (const Integer& m : report.missing) out << "missing " << m.str() << "\n";
  } else {
    out << "univocal " << (report.univocal_on_window ? "true" : "false") << "\n";
    out << "dup-count " << report.duplicate_total << "\n";
    for (const auto& dup : report.duplicates)
      out << "dup " << render(system, dup.first) << " " << render(system, dup.second) << " "
          << dup.value.str() << "\n";
  }
  return out.str();
}

} // namespace numera
