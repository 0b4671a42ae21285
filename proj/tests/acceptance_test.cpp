// Acceptance suite: one check per release criterion, each printing a single
// PASS/FAIL line. Exits nonzero when any criterion fails. Expected values are
// either fixed identities or recomputed in-test by independent brute force.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "numera/numera.hpp"

using namespace numera;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

PreNumerationSystem system_or_die(const char* name) {
  auto system = builtin_system(name);
  require(system.has_value(), std::string("missing builtin ") + name);
  return *std::move(system);
}

// Canonical strings of length <= max_len by plain odometer enumeration;
// independent of the library's analyzers.
std::vector<CanonicalForm> enumerate_canonical(const PreNumerationSystem& system,
                                               std::size_t max_len) {
  std::vector<CanonicalForm> all;
  const std::size_t n = system.alphabet.size();
  for (std::size_t length = 1; length <= max_len; ++length) {
    std::vector<std::size_t> digits(length, 0);
    for (bool done = false; !done;) {
      CanonicalForm candidate;
      candidate.digits = digits;
      if (is_canonical(system, candidate)) all.push_back(candidate);
      std::size_t slot = length;
      for (;;) {
        if (slot == 0) {
          done = true;
          break;
        }
        --slot;
        if (++digits[slot] < n) break;
        digits[slot] = 0;
      }
    }
  }
  return all;
}

// --------------------------------------------------------------------------

void criterion_1_reference_identities() {
  const auto sd = system_or_die("signed-decimal");
  require(render(sd, encode_radix(sd, 284)) == "3β4", "284 must encode as 3β4");
  require(render(sd, encode_radix(sd, 29)) == "3α", "29 must encode as 3α");
  require(value_of(sd, "δ3") == -27, "δ3 must decode to -27");
  require(render(sd, negate(sd, parse(sd, "2ε"))) == "αε", "the opposite of 2ε must be αε");
  require(value_of(system_or_die("factorial-decimal"), "23") == 7,
          "23 under factorial weights must be 7");
  require(value_of(system_or_die("power-decimal"), "57") == 27,
          "57 under power weights must be 27");
  const auto roman = system_or_die("roman-additive");
  require(value_of(roman, "VI") == 6 && value_of(roman, "IV") == 6,
          "VI and IV must both denote six");
}

void criterion_2_base6_identity() {
  const auto base6 = system_or_die("base6");
  const auto product = mul(base6, parse(base6, "H"), parse(base6, "H"));
  require(value_of(base6, product) == 16, "H x H must equal 16");
  require(render(base6, product) == "ΠH", "H x H must render as ΠH");
  const auto other = mul(base6, parse(base6, "∀"), parse(base6, "Δ"));
  require(value_of(base6, product) == value_of(base6, other) + 1,
          "H x H must equal ∀ x Δ plus one");
}

void criterion_3_rounding_suite() {
  require(round_value(284, 10) == 280, "284 must round to 280 at tens");
  require(round_value(280, 100) == 300, "280 must round to 300 at hundreds");
  require(round_value(145, 100) == 100, "145 must round to 100 at hundreds");
  const auto sd = system_or_die("signed-decimal");
  const Integer truncated = value_of(sd, truncate_at(sd, parse(sd, "2εε"), 2));
  require(truncated == 200, "truncating 2εε at two positions must give 200");
  require(truncated != round_value(145, 100), "truncation must differ from rounding here");
}

void criterion_4_radix_round_trip() {
  for (const char* name :
       {"decimal", "signed-decimal", "base6", "balanced-ternary", "balanced7"}) {
    const auto system = system_or_die(name);
    for (Integer n = -10000; n <= 10000; ++n)
      require(value_of(system, encode_radix(system, n)) == n,
              std::string("round-trip failed in ") + name + " at n = " + n.str());
  }
}

void criterion_5_arithmetic_oracle() {
  std::mt19937_64 rng(20260811);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
  for (const char* name :
       {"decimal", "signed-decimal", "base6", "balanced-ternary", "balanced7"}) {
    const auto system = system_or_die(name);
    for (int i = 0; i < 10'000; ++i) {
      const Integer a = dist(rng), b = dist(rng);
      const auto ea = encode_radix(system, a), eb = encode_radix(system, b);
      require(value_of(system, add(system, ea, eb)) == a + b,
              std::string("add mismatch in ") + name + " at " + a.str() + " + " + b.str());
      require(value_of(system, mul(system, ea, eb)) == a * b,
              std::string("mul mismatch in ") + name + " at " + a.str() + " * " + b.str());
    }
  }
}

void criterion_6_univocality_completeness() {
  const auto sd = system_or_die("signed-decimal");
  const auto sd_unique = analyze_univocality(sd, 4);
  require(sd_unique.univocal_on_window, "signed-decimal must be univocal to length 4");
  const auto sd_complete = analyze_completeness(sd, -1000, 1000, 4);
  require(sd_complete.complete_on_window, "signed-decimal must cover [-1000, 1000]");

  const auto small = system_or_die("factorial-small");
  const auto small_dups = analyze_univocality(small, 2);
  require(!small_dups.univocal_on_window, "factorial digits {0..3} must not be univocal");
  require(!small_dups.duplicates.empty() &&
              render(small, small_dups.duplicates.front().first) == "2" &&
              render(small, small_dups.duplicates.front().second) == "10",
          "factorial duplicate witness must be (2, 10)");
  const auto small_window = analyze_completeness(small, 0, 150, 5);
  require(!small_window.missing.empty() && small_window.missing.front() == 100,
          "the smallest missing factorial value must be exactly 100");

  const auto roman = system_or_die("roman-additive");
  const auto roman_dups = analyze_univocality(roman, 2);
  bool found_six = false;
  for (const auto& dup : roman_dups.duplicates) found_six = found_six || dup.value == 6;
  require(found_six, "roman-additive must produce a witness pair valued 6");
}

void criterion_7_table_metrics() {
  // independent brute force over digit value ranges, not the library's counters
  const auto brute_carry = [](std::int64_t lo, std::int64_t hi, std::int64_t base) {
    std::size_t carry = 0;
    for (std::int64_t x = lo; x <= hi; ++x)
      for (std::int64_t y = lo; y <= hi; ++y)
        if (std::abs(x) >= 2 && std::abs(y) >= 2 && std::abs(x * y) >= base) ++carry;
    return carry;
  };
  const std::size_t decimal_brute = brute_carry(0, 9, 10);
  const std::size_t base6_brute = brute_carry(0, 5, 6);
  require(decimal_brute == 58, "brute-force decimal carry count must be 58");
  require(base6_brute == 15, "brute-force base-6 carry count must be 15");
  require(table_metrics(system_or_die("decimal")).carry_pairs == decimal_brute,
          "decimal carry pairs must match the brute force");
  require(table_metrics(system_or_die("base6")).carry_pairs == base6_brute,
          "base-6 carry pairs must match the brute force");
}

void criterion_8_fractions() {
  const auto decimal = system_or_die("decimal");
  const auto base6 = system_or_die("base6");
  require(render_expansion(decimal, fraction_expansion(decimal, 1, 3, 10)) == "0.(3)",
          "1/3 must expand to 0.(3) in base 10");
  const auto sixth = fraction_expansion(base6, 1, 3, 10);
  require(sixth.finite() && sixth.preperiod.size() == 1 &&
              base6.alphabet[sixth.preperiod.front()].value == 2,
          "1/3 must be finite in base 6 with the single digit worth 2");
  require(render_expansion(base6, sixth) == "0.Π", "base-6 1/3 must render as 0.Π");

  for (const std::int64_t base : {2, 6, 10}) {
    const auto system = make_signed_system(0, base - 1);
    for (Integer q = 1; q <= 1000; ++q) {
      const auto expansion =
          fraction_expansion(system, 1, q, static_cast<std::size_t>(q.convert_to<std::uint64_t>()));
      require(is_finite_fraction(base, q) == expansion.finite(),
              "finiteness criterion must match long division at base " + std::to_string(base) +
                  ", q = " + q.str());
    }
  }
}

void criterion_9_balanced_truncation() {
  const auto balanced = system_or_die("balanced7");
  const Integer base = 7;
  for (const auto& s : enumerate_canonical(balanced, 4)) {
    const Integer value = value_of(balanced, s);
    for (std::size_t cut = 1; cut < s.length(); ++cut) {
      const auto truncated = truncate_at(balanced, s, cut);
      const Integer grain = boost::multiprecision::pow(base, static_cast<unsigned>(cut));
      const Integer tail = value - value_of(balanced, truncated);
      require(2 * boost::multiprecision::abs(tail) < grain,
              "balanced truncation hit a tie at " + render(balanced, s));
      require(truncated == encode_radix(balanced, round_value(value, grain)),
              "truncation must equal round-to-nearest at " + render(balanced, s));
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double time_cap_seconds;  // 0 = untimed
  std::function<void()> body;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reference identities (signed digits, factorial/power weights, additive numerals)", 1.0,
       criterion_1_reference_identities},
      {2, "base-6 identity H*H = ∀*Δ + Γ with rendered product ΠH", 0.0,
       criterion_2_base6_identity},
      {3, "rounding suite and the truncation asymmetry", 0.0, criterion_3_rounding_suite},
      {4, "radix round-trip for |n| <= 10^4 across five systems", 5.0,
       criterion_4_radix_round_trip},
      {5, "add/mul equal integer arithmetic on 10^4 random pairs per system", 10.0,
       criterion_5_arithmetic_oracle},
      {6, "univocality and completeness windows", 10.0, criterion_6_univocality_completeness},
      {7, "times-table carry metrics by in-test brute force", 0.0, criterion_7_table_metrics},
      {8, "fraction expansions and the finiteness criterion for q <= 1000", 5.0,
       criterion_8_fractions},
      {9, "balanced-7 truncation equals rounding, no ties, length <= 4", 0.0,
       criterion_9_balanced_truncation},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && criterion.time_cap_seconds > 0.0 &&
        seconds > criterion.time_cap_seconds) {
      failure = "exceeded the " + std::to_string(criterion.time_cap_seconds) + " s budget";
    }
    if (failure.empty()) {
      std::printf("PASS  %d  %s  [%.3f s]\n", criterion.id, criterion.name, seconds);
    } else {
      ++failures;
      std::printf("FAIL  %d  %s  [%.3f s]: %s\n", criterion.id, criterion.name, seconds,
                  failure.c_str());
    }
  }
  std::printf("%zu of %zu acceptance criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
