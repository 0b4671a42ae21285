#include "numera/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "numera/unicode.hpp"

namespace numera {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<Numeral> numerals) : numerals_(std::move(numerals)) {
  for (std::size_t i = 0; i < numerals_.size(); ++i) {
    by_symbol_.emplace(numerals_[i].symbol, i);  // first match wins
    by_value_.emplace(numerals_[i].value, i);
    if (!zero_ && numerals_[i].value == 0) zero_ = i;
  }
}

std::optional<std::size_t> Alphabet::index_of_symbol(char32_t symbol) const {
  const auto it = by_symbol_.find(symbol);
  if (it == by_symbol_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Alphabet::index_of_value(const Integer& value) const {
  const auto it = by_value_.find(value);
  if (it == by_value_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// WeightSequence

WeightSequence::WeightSequence(Kind kind, Integer param, std::vector<Integer> table)
    : kind_(kind), param_(std::move(param)), table_(std::move(table)) {}

WeightSequence WeightSequence::geometric(Integer base) {
  if (base < 2) throw std::invalid_argument("geometric weights need a base >= 2");
  return {Kind::Geometric, std::move(base), {}};
}

WeightSequence WeightSequence::factorial() { return {Kind::Factorial, 0, {}}; }

WeightSequence WeightSequence::power() { return {Kind::Power, 0, {}}; }

WeightSequence WeightSequence::constant(Integer value) {
  if (value == 0) throw std::invalid_argument("constant weight must be nonzero");
  return {Kind::Constant, std::move(value), {}};
}

WeightSequence WeightSequence::table(std::vector<Integer> weights) {
  if (weights.empty()) throw std::invalid_argument("weight table must not be empty");
  return {Kind::Table, 0, std::move(weights)};
}

const Integer& WeightSequence::geometric_base() const {
  if (kind_ != Kind::Geometric) throw std::logic_error("not a geometric sequence");
  return param_;
}

const Integer& WeightSequence::constant_value() const {
  if (kind_ != Kind::Constant) throw std::logic_error("not a constant sequence");
  return param_;
}

std::span<const Integer> WeightSequence::table_weights() const {
  if (kind_ != Kind::Table) throw std::logic_error("not a tabulated sequence");
  return table_;
}

std::optional<std::size_t> WeightSequence::position_limit() const {
  if (kind_ == Kind::Table) return table_.size();
  return std::nullopt;
}

Integer WeightSequence::at(std::size_t position) const {
  if (position == 0) throw PositionError("positions start at 1");
  switch (kind_) {
    case Kind::Geometric:
      return boost::multiprecision::pow(param_, static_cast<unsigned>(position - 1));
    case Kind::Factorial: {
      Integer w = 1;
      for (std::size_t n = 2; n <= position; ++n) w *= n;
      return w;
    }
    case Kind::Power:
      return boost::multiprecision::pow(Integer(position), static_cast<unsigned>(position));
    case Kind::Constant:
      return param_;
    case Kind::Table:
      if (position > table_.size())
        throw PositionError("position " + std::to_string(position) + " is outside the " +
                            std::to_string(table_.size()) + "-entry weight table");
      return table_[position - 1];
  }
  throw std::logic_error("unreachable weight kind");
}

// ---------------------------------------------------------------------------
// Constructors and builtins

namespace {

// Greek letters assigned to -6..-24 once the named glyphs α β δ γ ε run out.
constexpr char32_t kGreekTail[] = {U'ζ', U'η', U'θ', U'ι', U'κ', U'λ', U'μ',
                                   U'ν', U'ξ', U'ο', U'π', U'ρ', U'σ', U'τ',
                                   U'υ', U'φ', U'χ', U'ψ', U'ω'};
constexpr std::int64_t kMaxDigitCount = 2000;

PreNumerationSystem digit_range_system(std::string name, std::int64_t lo, std::int64_t hi,
                                       WeightSequence weights, bool external_sign) {
  std::vector<Numeral> numerals;
  numerals.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t v = lo; v <= hi; ++v)
    numerals.push_back({default_symbol(Integer(v)), Integer(v)});
  return {std::move(name), Alphabet(std::move(numerals)), std::move(weights), external_sign};
}

} // namespace

char32_t default_symbol(const Integer& value) {
  if (value >= 0 && value <= 9) return static_cast<char32_t>(U'0' + value.convert_to<int>());
  if (value >= 10 && value <= 35) return static_cast<char32_t>(U'A' + value.convert_to<int>() - 10);
  if (value <= -1 && value >= -5) {
    static constexpr char32_t named[] = {U'α', U'β', U'δ', U'γ', U'ε'};
    return named[-value.convert_to<int>() - 1];
  }
  if (value <= -6 && value >= -24) return kGreekTail[-value.convert_to<int>() - 6];
  if (value > 35 && value <= 35 + 0x700)
    return static_cast<char32_t>(0xE000 + value.convert_to<int>() - 36);
  if (value < -24 && value >= -24 - 0x700)
    return static_cast<char32_t>(0xE800 + (-value.convert_to<int>()) - 25);
  throw std::invalid_argument("no default symbol for digit value " + value.str());
}

PreNumerationSystem make_signed_system(std::int64_t negative_count,
                                       std::int64_t positive_count) {
  if (negative_count < 0 || positive_count < 0)
    throw std::invalid_argument("digit counts must be nonnegative");
  if (negative_count + positive_count == 0)
    throw std::invalid_argument("at least one nonzero digit is required");
  if (negative_count > kMaxDigitCount || positive_count > kMaxDigitCount)
    throw std::invalid_argument("digit count exceeds the supported alphabet size");
  const std::int64_t base = negative_count + positive_count + 1;
  std::string name = "N_(" + std::to_string(negative_count) + "," +
                     std::to_string(positive_count) + ")";
  return digit_range_system(std::move(name), -negative_count, positive_count,
                            WeightSequence::geometric(Integer(base)),
                            /*external_sign=*/negative_count == 0);
}

PreNumerationSystem make_base6() {
  std::vector<Numeral> numerals{{U'0', 0}, {U'Γ', 1}, {U'Π', 2},
                                {U'Δ', 3}, {U'H', 4}, {U'∀', 5}};
  return {"base6", Alphabet(std::move(numerals)), WeightSequence::geometric(6), true};
}

Integer primorial_base(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  Integer product = 1;
  Integer candidate = 2;
  for (std::size_t found = 0; found < k; ++candidate) {
    bool prime = true;
    for (Integer d = 2; d * d <= candidate; ++d)
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    if (prime) {
      product *= candidate;
      ++found;
    }
  }
  return product;
}

Integer weight(const PreNumerationSystem& system, std::size_t position) {
  return system.weights.at(position);
}

// ---------------------------------------------------------------------------
// Classification and validation

ClassificationReport classify(const PreNumerationSystem& system, std::size_t prefix_length) {
  if (prefix_length < 2) throw std::invalid_argument("prefix_length must be >= 2");
  ClassificationReport report;
  report.finite = true;  // alphabets here are always finite
  using Kind = WeightSequence::Kind;
  using Ordered = ClassificationReport::Ordered;
  switch (system.weights.kind()) {
    case Kind::Geometric:
    case Kind::Factorial:
    case Kind::Power:
      // strictly increasing closed forms
      report.perfectly_ordered = Ordered::Yes;
      report.perfectly_disordered = false;
      report.checked_prefix_length = prefix_length;
      break;
    case Kind::Constant:
      report.perfectly_ordered = Ordered::No;
      report.perfectly_disordered = true;
      report.checked_prefix_length = prefix_length;
      break;
    case Kind::Table: {
      const auto weights = system.weights.table_weights();
      const std::size_t checked = std::min(prefix_length, weights.size());
      bool all_distinct = true;
      bool all_equal = true;
      for (std::size_t i = 0; i < checked; ++i)
        for (std::size_t j = i + 1; j < checked; ++j) {
          if (weights[i] == weights[j]) all_distinct = false;
          if (weights[i] != weights[j]) all_equal = false;
        }
      report.perfectly_ordered = all_distinct ? Ordered::YesOnCheckedPrefix : Ordered::No;
      report.perfectly_disordered = all_equal;
      report.checked_prefix_length = checked;
      break;
    }
  }
  return report;
}

std::vector<std::string> validate(const PreNumerationSystem& system) {
  std::vector<std::string> violations;
  if (system.name.empty()) violations.push_back("system name is empty");
  for (char c : system.name)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      violations.push_back("system name contains whitespace");
      break;
    }
  const auto numerals = system.alphabet.numerals();
  if (numerals.empty()) violations.push_back("alphabet is empty");
  for (std::size_t i = 0; i < numerals.size(); ++i)
    for (std::size_t j = i + 1; j < numerals.size(); ++j) {
      if (numerals[i].symbol == numerals[j].symbol)
        violations.push_back("symbol collision: '" + utf8_encode(numerals[i].symbol) +
                             "' used by numerals " + std::to_string(i) + " and " +
                             std::to_string(j));
      if (numerals[i].value == numerals[j].value)
        violations.push_back("injectivity violation: value " + numerals[i].value.str() +
                             " shared by '" + utf8_encode(numerals[i].symbol) + "' and '" +
                             utf8_encode(numerals[j].symbol) + "'");
    }
  return violations;
}

// ---------------------------------------------------------------------------
// Builtin registry

std::optional<PreNumerationSystem> builtin_system(std::string_view name) {
  auto named = [&](PreNumerationSystem s) {
    s.name = std::string(name);
    return s;
  };
  if (name == "decimal") return named(make_signed_system(0, 9));
  if (name == "signed-decimal") return named(make_signed_system(5, 4));
  if (name == "base6") return make_base6();
  if (name == "balanced-ternary") return named(make_signed_system(1, 1));
  if (name == "balanced7") return named(make_signed_system(3, 3));
  if (name == "factorial-decimal")
    return digit_range_system("factorial-decimal", 0, 9, WeightSequence::factorial(), false);
  if (name == "factorial-small")
    return digit_range_system("factorial-small", 0, 3, WeightSequence::factorial(), false);
  if (name == "power-decimal")
    return digit_range_system("power-decimal", 0, 9, WeightSequence::power(), false);
  if (name == "roman-additive") {
    std::vector<Numeral> numerals{{U'I', 1}, {U'V', 5}, {U'X', 10}};
    return PreNumerationSystem{"roman-additive", Alphabet(std::move(numerals)),
                               WeightSequence::constant(1), false};
  }
  return std::nullopt;
}

std::vector<std::string> builtin_system_names() {
  return {"decimal",         "signed-decimal",  "base6",
          "balanced-ternary", "balanced7",       "factorial-decimal",
          "factorial-small", "power-decimal",   "roman-additive"};
}

} // namespace numera
