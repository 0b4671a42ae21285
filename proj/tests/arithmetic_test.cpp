#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace numera;
using testsupport::enumerate_canonical;

namespace {

const PreNumerationSystem kSigned = *builtin_system("signed-decimal");
const PreNumerationSystem kDecimal = *builtin_system("decimal");
const PreNumerationSystem kBase6 = *builtin_system("base6");
const PreNumerationSystem kRoman = *builtin_system("roman-additive");
const PreNumerationSystem kBalanced7 = *builtin_system("balanced7");

CanonicalForm enc(const PreNumerationSystem& system, const Integer& n) {
  return encode_radix(system, n);
}

} // namespace

TEST_CASE("digit-wise addition") {
  CHECK(render(kDecimal, add(kDecimal, enc(kDecimal, 284), enc(kDecimal, 16))) == "300");
  CHECK(render(kSigned, add(kSigned, parse(kSigned, "2ε"), parse(kSigned, "2ε"))) == "30");
  CHECK_THROWS_AS(add(kRoman, parse(kRoman, "VI"), parse(kRoman, "I")), NotRadixFamilyError);

  SUBCASE("zero is the additive identity") {
    for (const Integer& n : {Integer(0), Integer(7), Integer(-409), Integer(123456)}) {
      const auto x = enc(kSigned, n);
      CHECK(add(kSigned, x, enc(kSigned, 0)) == x);
      CHECK(add(kSigned, enc(kSigned, 0), x) == x);
    }
  }
  SUBCASE("external marks fold into the sum") {
    CHECK(render(kDecimal, add(kDecimal, parse(kDecimal, "-15"), parse(kDecimal, "300"))) == "285");
    CHECK(render(kDecimal, add(kDecimal, parse(kDecimal, "15"), parse(kDecimal, "-300"))) == "-285");
    CHECK(render(kDecimal, add(kDecimal, parse(kDecimal, "-15"), parse(kDecimal, "-300"))) == "-315");
    CHECK(render(kDecimal, add(kDecimal, parse(kDecimal, "15"), parse(kDecimal, "-15"))) == "0");
  }
  SUBCASE("sums with no reachable sign are refused") {
    auto no_sign = make_signed_system(0, 9);
    no_sign.external_sign = false;
    // operands must be unmarked in such a system; a negative total cannot appear
    CHECK(render(no_sign, add(no_sign, enc(no_sign, 3), enc(no_sign, 7))) == "10");
  }
}

TEST_CASE("schoolbook multiplication") {
  const auto h = parse(kBase6, "H");
  const auto product = mul(kBase6, h, h);
  CHECK(value_of(kBase6, product) == 16);
  CHECK(render(kBase6, product) == "ΠH");
  // the identity H×H = ∀×Δ + Γ
  const auto other = mul(kBase6, parse(kBase6, "∀"), parse(kBase6, "Δ"));
  CHECK(value_of(kBase6, product) == value_of(kBase6, other) + 1);

  CHECK(render(kDecimal, mul(kDecimal, enc(kDecimal, 7), enc(kDecimal, 8))) == "56");
  CHECK(render(kSigned, mul(kSigned, parse(kSigned, "δ3"), parse(kSigned, "2ε"))) ==
        render(kSigned, enc(kSigned, -405)));

  SUBCASE("zero annihilates") {
    for (const Integer& n : {Integer(0), Integer(9), Integer(-87), Integer(1000)}) {
      CHECK(render(kSigned, mul(kSigned, enc(kSigned, n), enc(kSigned, 0))) == "0");
      CHECK(render(kSigned, mul(kSigned, enc(kSigned, 0), enc(kSigned, n))) == "0");
    }
  }
  SUBCASE("marked operands multiply by sign algebra") {
    CHECK(value_of(kDecimal, mul(kDecimal, parse(kDecimal, "-12"), parse(kDecimal, "12"))) == -144);
    CHECK(value_of(kDecimal, mul(kDecimal, parse(kDecimal, "-12"), parse(kDecimal, "-12"))) == 144);
  }
  SUBCASE("random products agree with integer arithmetic") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> dist(-99999, 99999);
    for (const auto* system : {&kSigned, &kDecimal, &kBase6, &kBalanced7}) {
      for (int i = 0; i < 300; ++i) {
        const Integer a = dist(rng), b = dist(rng);
        CHECK(value_of(*system, mul(*system, enc(*system, a), enc(*system, b))) == a * b);
        CHECK(value_of(*system, add(*system, enc(*system, a), enc(*system, b))) == a + b);
      }
    }
  }
}

TEST_CASE("times table") {
  const auto table = times_table(kBase6);
  CHECK(table.alphabet_size == 6);
  CHECK(table.entries.size() == 36);
  const auto index = [&](char32_t symbol) { return *kBase6.alphabet.index_of_symbol(symbol); };
  CHECK(render(kBase6, table.at(index(U'Δ'), index(U'H'))) == "Π0");
  CHECK(render(kBase6, table.at(index(U'H'), index(U'H'))) == "ΠH");
  for (std::size_t y = 0; y < table.alphabet_size; ++y)
    CHECK(render(kBase6, table.at(index(U'0'), y)) == "0");

  SUBCASE("every entry decodes to the exact product") {
    for (const auto* system : {&kBase6, &kSigned}) {
      const auto t = times_table(*system);
      for (std::size_t x = 0; x < t.alphabet_size; ++x)
        for (std::size_t y = 0; y < t.alphabet_size; ++y)
          CHECK(value_of(*system, t.at(x, y)) ==
                system->alphabet[x].value * system->alphabet[y].value);
    }
  }
  CHECK_THROWS_AS(times_table(kRoman), NotRadixFamilyError);
}

TEST_CASE("table metrics") {
  const auto decimal_metrics = table_metrics(kDecimal);
  CHECK(decimal_metrics.total_pairs == 100);
  CHECK(decimal_metrics.trivial_pairs == 36);
  CHECK(decimal_metrics.carry_pairs == 58);
  CHECK(decimal_metrics.plain_pairs() == 6);

  const auto base6_metrics = table_metrics(kBase6);
  CHECK(base6_metrics.total_pairs == 36);
  CHECK(base6_metrics.carry_pairs == 15);

  CHECK(table_metrics(*builtin_system("balanced-ternary")).carry_pairs == 0);
  CHECK(table_metrics(make_signed_system(0, 1)).carry_pairs == 0);

  SUBCASE("counts are symmetric in the pair order") {
    for (const auto* system : {&kDecimal, &kBase6, &kSigned, &kBalanced7}) {
      const auto rf = require_radix_family(*system);
      std::size_t asymmetric = 0;
      for (const std::int64_t x : rf.value_by_index)
        for (const std::int64_t y : rf.value_by_index) {
          const bool carry_xy = std::abs(x) >= 2 && std::abs(y) >= 2 && std::abs(x * y) >= rf.base;
          const bool carry_yx = std::abs(y) >= 2 && std::abs(x) >= 2 && std::abs(y * x) >= rf.base;
          if (carry_xy != carry_yx) ++asymmetric;
        }
      CHECK(asymmetric == 0);
    }
  }
}

TEST_CASE("finite fraction criterion") {
  CHECK(is_finite_fraction(10, 40));
  CHECK_FALSE(is_finite_fraction(10, 3));
  CHECK_FALSE(is_finite_fraction(10, 6));
  CHECK(is_finite_fraction(6, 3));
  CHECK(is_finite_fraction(6, 12));
  CHECK(is_finite_fraction(2, 8));
  CHECK_FALSE(is_finite_fraction(2, 6));
  CHECK(is_finite_fraction(10, 1));
  CHECK_THROWS_AS(is_finite_fraction(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(is_finite_fraction(10, 0), std::invalid_argument);
}

TEST_CASE("fraction expansion by long division") {
  const auto third = fraction_expansion(kDecimal, 1, 3, 10);
  CHECK(render(kDecimal, third.integer_part) == "0");
  CHECK(third.preperiod.empty());
  REQUIRE(third.period.size() == 1);
  CHECK(render_expansion(kDecimal, third) == "0.(3)");
  CHECK_FALSE(third.finite());

  CHECK(render_expansion(kBase6, fraction_expansion(kBase6, 1, 3, 10)) == "0.Π");
  CHECK(render_expansion(kBase6, fraction_expansion(kBase6, 1, 4, 10)) == "0.ΓΔ");
  CHECK(render_expansion(kDecimal, fraction_expansion(kDecimal, 1, 6, 10)) == "0.1(6)");
  CHECK(render_expansion(kDecimal, fraction_expansion(kDecimal, 22, 7, 10)) == "3.(142857)");
  CHECK(render_expansion(kDecimal, fraction_expansion(kDecimal, 10, 2, 10)) == "5");
  CHECK(render_expansion(kDecimal, fraction_expansion(kDecimal, 0, 9, 10)) == "0");
  CHECK(render_expansion(kDecimal, fraction_expansion(kDecimal, -1, 3, 10)) == "-0.(3)");
  CHECK(render_expansion(kDecimal, fraction_expansion(kDecimal, 2, 6, 10)) == "0.(3)");  // reduced

  SUBCASE("bounds and preconditions") {
    CHECK_THROWS_AS(fraction_expansion(kDecimal, 1, 7, 3), PeriodExceedsBoundError);
    CHECK_THROWS_AS(fraction_expansion(kDecimal, 1, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(fraction_expansion(kSigned, 1, 3, 10), NotRadixFamilyError);
    CHECK_THROWS_AS(fraction_expansion(kRoman, 1, 3, 10), NotRadixFamilyError);
    auto no_sign = make_signed_system(0, 9);
    no_sign.external_sign = false;
    CHECK_THROWS_AS(fraction_expansion(no_sign, -1, 3, 10), NegativeWithoutSignError);
  }

  SUBCASE("reconstruction is exact for random rationals") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> num(-500, 500);
    std::uniform_int_distribution<std::int64_t> den(1, 200);
    for (const auto* system : {&kDecimal, &kBase6}) {
      const Integer base = system->weights.geometric_base();
      for (int i = 0; i < 400; ++i) {
        const Integer p = num(rng), q = den(rng);
        const auto e = fraction_expansion(*system, p, q, 256);
        // value = integer + pre/base^a + period/(base^a * (base^b - 1))
        const std::size_t a = e.preperiod.size(), b = e.period.size();
        Integer pre = 0;
        for (const std::size_t idx : e.preperiod) pre = pre * base + system->alphabet[idx].value;
        Integer per = 0;
        for (const std::size_t idx : e.period) per = per * base + system->alphabet[idx].value;
        const Integer base_a = boost::multiprecision::pow(base, static_cast<unsigned>(a));
        const Integer base_b = boost::multiprecision::pow(base, static_cast<unsigned>(b));
        // assemble as a single fraction N/D and cross-multiply against p/q
        Integer N = value_of(*system, e.integer_part);
        Integer D = 1;
        N = N * base_a + pre;
        D = base_a;
        if (b > 0) {
          N = N * (base_b - 1) + per;
          D = D * (base_b - 1);
        }
        if (e.negative) N = -N;
        CHECK(N * q == p * D);
        // finiteness matches the reduced denominator criterion
        const Integer p_abs = boost::multiprecision::abs(p);
        const Integer g = boost::multiprecision::gcd(p_abs, q);
        CHECK(e.finite() == is_finite_fraction(base, q / g));
      }
    }
  }

  SUBCASE("finiteness criterion matches the long division oracle") {
    for (const std::int64_t base : {2, 6, 10}) {
      const auto system = make_signed_system(0, base - 1);
      for (Integer q = 1; q <= 300; ++q) {
        const auto e = fraction_expansion(system, 1, q, 1024);
        CHECK(is_finite_fraction(base, q) == e.finite());
      }
    }
  }
}

TEST_CASE("rounding to a grain") {
  CHECK(round_value(284, 10) == 280);
  CHECK(round_value(280, 100) == 300);
  CHECK(round_value(145, 100) == 100);
  CHECK(round_value(25, 10) == 30);  // half away from zero
  CHECK(round_value(-25, 10) == -30);
  CHECK(round_value(-145, 100) == -100);
  CHECK(round_value(-284, 10) == -280);
  CHECK(round_value(7, 1) == 7);
  CHECK(round_value(0, 100) == 0);
  CHECK_THROWS_AS(round_value(7, 0), std::invalid_argument);
}

TEST_CASE("truncation zeroes the rightmost positions") {
  const auto taller = parse(kSigned, "2εε");  // 145
  CHECK(value_of(kSigned, taller) == 145);
  const auto truncated = truncate_at(kSigned, taller, 2);
  CHECK(render(kSigned, truncated) == "200");
  CHECK(value_of(kSigned, truncated) == 200);
  // the same value rounds the other way: the documented asymmetry of N_(5,4)
  CHECK(round_value(145, 100) == 100);

  CHECK(render(kSigned, truncate_at(kSigned, parse(kSigned, "3β4"), 1)) == "3β0");
  CHECK(value_of(kSigned, truncate_at(kSigned, parse(kSigned, "3β4"), 1)) == 280);

  CHECK_THROWS_AS(truncate_at(kSigned, parse(kSigned, "3β4"), 3), PositionError);
  CHECK_THROWS_AS(truncate_at(kSigned, parse(kSigned, "3β4"), 0), PositionError);
  CHECK_THROWS_AS(truncate_at(kRoman, parse(kRoman, "VI"), 1), NotRadixFamilyError);

  SUBCASE("balanced systems truncate to the nearest multiple, no ties") {
    for (const char* name : {"balanced7", "balanced-ternary"}) {
      const auto system = *builtin_system(name);
      const Integer base = system.weights.geometric_base();
      for (const auto& [value, strings] : enumerate_canonical(system, 4))
        for (const auto& s : strings)
          for (std::size_t cut = 1; cut < s.length(); ++cut) {
            const auto t = truncate_at(system, s, cut);
            const Integer grain = boost::multiprecision::pow(base, static_cast<unsigned>(cut));
            const Integer tail = value - value_of(system, t);
            CHECK(2 * boost::multiprecision::abs(tail) < grain);  // strictly inside: never a tie
            CHECK(t == encode_radix(system, round_value(value, grain)));
          }
    }
  }
}
