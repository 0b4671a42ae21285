#include "cli.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "numera/numera.hpp"

namespace numera::cli {

namespace {

Integer integer_argument(const std::string& text) {
  std::size_t i = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("'" + text + "' is not an integer");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("'" + text + "' is not an integer");
  return Integer(text);
}

PreNumerationSystem checked_system(const std::string& ref) {
  PreNumerationSystem system = resolve_system(ref);
  const auto violations = validate(system);
  if (!violations.empty()) {
    std::string message = "system '" + system.name + "' is invalid:";
    for (const auto& violation : violations) message += "\n  " + violation;
    throw DefinitionError(0, message);
  }
  return system;
}

CanonicalForm parsed_operand(const PreNumerationSystem& system, const std::string& text) {
  return canonicalize(system, parse(system, text));
}

std::string fraction_text(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"positional numeral systems: conversion, arithmetic and analysis", "numera"};
  app.require_subcommand(1);

  std::string system_ref;
  const auto with_system = [&system_ref](CLI::App* cmd) {
    cmd->add_option("--system", system_ref, "built-in system name or definition file path")
        ->required();
    return cmd;
  };

  int exit_code = 0;

  // convert
  std::string to_digits, to_value;
  std::size_t search_len = 0;
  auto* convert = with_system(app.add_subcommand(
      "convert", "encode an integer into digits or evaluate a digit string"));
  convert->add_option("--to-digits", to_digits, "integer to encode (use --to-digits=-27 for negatives)");
  convert->add_option("--to-value", to_value, "digit string to evaluate");
  convert->add_option("--max-len", search_len,
                      "encode by bounded search with at most this many digits");
  convert->callback([&] {
    if (to_digits.empty() == to_value.empty())
      throw std::invalid_argument("convert needs exactly one of --to-digits / --to-value");
    const PreNumerationSystem system = checked_system(system_ref);
    if (!to_digits.empty()) {
      const Integer n = integer_argument(to_digits);
      if (search_len > 0) {
        const auto hit = encode_search(system, n, search_len);
        if (!hit)
          throw Error("value " + n.str() + " is not representable within " +
                      std::to_string(search_len) + " digits");
        out << render(system, *hit) << "\n";
      } else {
        out << render(system, encode_radix(system, n)) << "\n";
      }
    } else {
      out << value_of(system, to_value).str() << "\n";
    }
  });

  // add / mul / compare / negate
  std::string lhs_text, rhs_text;
  auto* add_cmd = with_system(app.add_subcommand("add", "add two digit strings"));
  add_cmd->add_option("x", lhs_text)->required();
  add_cmd->add_option("y", rhs_text)->required();
  add_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    out << render(system, add(system, parsed_operand(system, lhs_text),
                              parsed_operand(system, rhs_text)))
        << "\n";
  });

  auto* mul_cmd = with_system(app.add_subcommand("mul", "multiply two digit strings"));
  mul_cmd->add_option("x", lhs_text)->required();
  mul_cmd->add_option("y", rhs_text)->required();
  mul_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    out << render(system, mul(system, parsed_operand(system, lhs_text),
                              parsed_operand(system, rhs_text)))
        << "\n";
  });

  auto* compare_cmd =
      with_system(app.add_subcommand("compare", "order two digit strings by value"));
  compare_cmd->add_option("x", lhs_text)->required();
  compare_cmd->add_option("y", rhs_text)->required();
  compare_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    switch (compare(system, parsed_operand(system, lhs_text), parsed_operand(system, rhs_text))) {
      case Ordering::Less: out << "less\n"; break;
      case Ordering::Equal: out << "equal\n"; break;
      case Ordering::Greater: out << "greater\n"; break;
    }
  });

  auto* negate_cmd = with_system(app.add_subcommand("negate", "negate a digit string"));
  negate_cmd->add_option("x", lhs_text)->required();
  negate_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    out << render(system, negate(system, parsed_operand(system, lhs_text))) << "\n";
  });

  // round
  std::string grain_text;
  std::size_t truncate_cut = 0;
  auto* round_cmd = with_system(app.add_subcommand(
      "round", "round a digit string to a grain, or truncate digit positions"));
  round_cmd->add_option("x", lhs_text)->required();
  auto* grain_opt = round_cmd->add_option("--grain", grain_text, "round the value to the nearest multiple");
  auto* truncate_opt =
      round_cmd->add_option("--truncate", truncate_cut, "zero out this many rightmost digits");
  grain_opt->excludes(truncate_opt);
  round_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    const CanonicalForm operand = parsed_operand(system, lhs_text);
    if (!grain_text.empty()) {
      const Integer grain = integer_argument(grain_text);
      out << render(system, encode_radix(system, round_value(value_of(system, operand), grain)))
          << "\n";
    } else if (truncate_cut > 0) {
      out << render(system, truncate_at(system, operand, truncate_cut)) << "\n";
    } else {
      throw std::invalid_argument("round needs one of --grain / --truncate");
    }
  });

  // table
  bool metrics_only = false;
  auto* table_cmd =
      with_system(app.add_subcommand("table", "print the times table or its metrics"));
  table_cmd->add_flag("--metrics", metrics_only, "print size measures instead of entries");
  table_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    if (metrics_only) {
      const TableMetrics metrics = table_metrics(system);
      out << "system " << system.name << "\n";
      out << "total-pairs " << metrics.total_pairs << "\n";
      out << "trivial-pairs " << metrics.trivial_pairs << "\n";
      out << "plain-pairs " << metrics.plain_pairs() << "\n";
      out << "carry-pairs " << metrics.carry_pairs << "\n";
      out << "carry-fraction "
          << fraction_text(static_cast<double>(metrics.carry_pairs) /
                           static_cast<double>(metrics.total_pairs))
          << "\n";
    } else {
      const TimesTable table = times_table(system);
      for (std::size_t x = 0; x < table.alphabet_size; ++x)
        for (std::size_t y = 0; y < table.alphabet_size; ++y)
          out << utf8_encode(system.alphabet[x].symbol) << " "
              << utf8_encode(system.alphabet[y].symbol) << " " << render(system, table.at(x, y))
              << "\n";
    }
  });

  // expand
  std::string ratio_text;
  std::size_t max_period = 0;
  auto* expand_cmd =
      with_system(app.add_subcommand("expand", "positional expansion of a fraction P/Q"));
  expand_cmd->add_option("fraction", ratio_text, "fraction as P/Q, e.g. 1/3")->required();
  expand_cmd->add_option("--max-period", max_period,
                         "bound on the repeating block (default: the denominator)");
  expand_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    const std::size_t slash = ratio_text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == ratio_text.size())
      throw std::invalid_argument("fraction must have the form P/Q");
    const Integer p = integer_argument(ratio_text.substr(0, slash));
    const Integer q = integer_argument(ratio_text.substr(slash + 1));
    if (q < 1) throw std::invalid_argument("denominator must be >= 1");
    std::size_t bound = max_period;
    if (bound == 0)
      bound = q <= 1'000'000 ? static_cast<std::size_t>(q.convert_to<std::uint64_t>())
                             : std::numeric_limits<std::size_t>::max();
    out << render_expansion(system, fraction_expansion(system, p, q, bound)) << "\n";
  });

  // analyze
  std::string range_text;
  std::size_t analyze_len = 0;
  bool univocal_mode = false;
  unsigned jobs = 1;
  std::uint64_t budget_states = AnalysisBudget{}.max_states;
  auto* analyze_cmd = with_system(
      app.add_subcommand("analyze", "bounded completeness or univocality analysis"));
  analyze_cmd->add_option("--range", range_text, "integer window A..B for completeness");
  analyze_cmd->add_option("--max-len", analyze_len, "maximum digit string length")->required();
  analyze_cmd->add_flag("--univocal", univocal_mode, "check uniqueness of canonical strings");
  analyze_cmd->add_option("--jobs", jobs, "worker partitions for the search space");
  analyze_cmd->add_option("--budget", budget_states, "state budget for the enumeration");
  analyze_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    const AnalysisBudget budget{budget_states};
    if (univocal_mode) {
      out << report_lines(system, analyze_univocality(system, analyze_len, budget, jobs));
      return;
    }
    if (range_text.empty())
      throw std::invalid_argument("analyze needs --range A..B or --univocal");
    const std::size_t dots = range_text.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("range must have the form A..B");
    const Integer lo = integer_argument(range_text.substr(0, dots));
    const Integer hi = integer_argument(range_text.substr(dots + 2));
    out << report_lines(system, analyze_completeness(system, lo, hi, analyze_len, budget, jobs));
  });

  // classify
  std::size_t prefix_length = 32;
  auto* classify_cmd =
      with_system(app.add_subcommand("classify", "classify the weight sequence"));
  classify_cmd->add_option("--prefix-length", prefix_length, "inspected prefix (default 32)");
  classify_cmd->callback([&] {
    const PreNumerationSystem system = checked_system(system_ref);
    const ClassificationReport report = classify(system, prefix_length);
    out << "system " << system.name << "\n";
    out << "finite " << (report.finite ? "true" : "false") << "\n";
    out << "perfectly-ordered ";
    switch (report.perfectly_ordered) {
      case ClassificationReport::Ordered::Yes: out << "yes\n"; break;
      case ClassificationReport::Ordered::No: out << "no\n"; break;
      case ClassificationReport::Ordered::YesOnCheckedPrefix: out << "yes-on-checked-prefix\n"; break;
    }
    out << "perfectly-disordered " << (report.perfectly_disordered ? "true" : "false") << "\n";
    out << "checked-prefix " << report.checked_prefix_length << "\n";
  });

  // validate
  auto* validate_cmd =
      with_system(app.add_subcommand("validate", "report invariant violations"));
  validate_cmd->callback([&] {
    const PreNumerationSystem system = resolve_system(system_ref);
    const auto violations = validate(system);
    if (violations.empty()) {
      out << "ok\n";
    } else {
      for (const auto& violation : violations) out << "violation " << violation << "\n";
      exit_code = 3;
    }
  });

  // ---------------------------------------------------------------------
  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("numera");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_storage.size());
  for (auto& token : argv_storage) argv.push_back(token.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const DefinitionError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

} // namespace numera::cli
