#include "numera/system_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "numera/unicode.hpp"

namespace numera {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

Integer parse_integer_token(const std::string& token, std::size_t line_no) {
  std::size_t i = (token[0] == '+' || token[0] == '-') ? 1 : 0;
  if (i == token.size()) throw DefinitionError(line_no, "'" + token + "' is not an integer");
  for (; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9')
      throw DefinitionError(line_no, "'" + token + "' is not an integer");
  return Integer(token);
}

WeightSequence parse_weights(const std::vector<std::string>& tokens, std::size_t line_no) {
  if (tokens.size() < 2) throw DefinitionError(line_no, "weights line needs a kind");
  const std::string& kind = tokens[1];
  try {
    if (kind == "geometric") {
      if (tokens.size() != 3) throw DefinitionError(line_no, "usage: weights geometric <base>");
      return WeightSequence::geometric(parse_integer_token(tokens[2], line_no));
    }
    if (kind == "factorial") {
      if (tokens.size() != 2) throw DefinitionError(line_no, "'weights factorial' takes no arguments");
      return WeightSequence::factorial();
    }
    if (kind == "power") {
      if (tokens.size() != 2) throw DefinitionError(line_no, "'weights power' takes no arguments");
      return WeightSequence::power();
    }
    if (kind == "constant") {
      if (tokens.size() != 3) throw DefinitionError(line_no, "usage: weights constant <c>");
      return WeightSequence::constant(parse_integer_token(tokens[2], line_no));
    }
    if (kind == "table") {
      if (tokens.size() < 3) throw DefinitionError(line_no, "usage: weights table <w1> <w2> ...");
      std::vector<Integer> weights;
      for (std::size_t i = 2; i < tokens.size(); ++i)
        weights.push_back(parse_integer_token(tokens[i], line_no));
      return WeightSequence::table(std::move(weights));
    }
  } catch (const std::invalid_argument& e) {
    throw DefinitionError(line_no, e.what());
  }
  throw DefinitionError(line_no, "unknown weight kind '" + kind + "'");
}

} // namespace

PreNumerationSystem parse_system_definition(std::string_view text) {
  std::optional<std::string> name;
  std::optional<WeightSequence> weights;
  std::optional<bool> external_sign;
  std::vector<Numeral> numerals;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++line_no;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& directive = tokens[0];
    if (directive == "name") {
      if (name) throw DefinitionError(line_no, "duplicate name line");
      if (tokens.size() != 2) throw DefinitionError(line_no, "usage: name <identifier>");
      name = tokens[1];
    } else if (directive == "weights") {
      if (weights) throw DefinitionError(line_no, "duplicate weights line");
      weights = parse_weights(tokens, line_no);
    } else if (directive == "numeral") {
      if (tokens.size() != 3) throw DefinitionError(line_no, "usage: numeral <symbol> <value>");
      std::u32string scalars;
      try {
        scalars = utf8_decode(tokens[1]);
      } catch (const BadEncodingError&) {
        throw DefinitionError(line_no, "symbol is not valid UTF-8");
      }
      if (scalars.size() != 1)
        throw DefinitionError(line_no, "symbol must be a single Unicode scalar");
      numerals.push_back({scalars[0], parse_integer_token(tokens[2], line_no)});
    } else if (directive == "external-sign") {
      if (external_sign) throw DefinitionError(line_no, "duplicate external-sign line");
      if (tokens.size() != 2 || (tokens[1] != "true" && tokens[1] != "false"))
        throw DefinitionError(line_no, "usage: external-sign true|false");
      external_sign = (tokens[1] == "true");
    } else {
      throw DefinitionError(line_no, "unknown directive '" + directive + "'");
    }
  }

  if (!name) throw DefinitionError(0, "definition is missing a 'name' line");
  if (!weights) throw DefinitionError(0, "definition is missing a 'weights' line");
  return {std::move(*name), Alphabet(std::move(numerals)), std::move(*weights),
          external_sign.value_or(false)};
}

PreNumerationSystem load_system_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DefinitionError(0, "cannot open system definition '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system_definition(buffer.str());
}

PreNumerationSystem resolve_system(std::string_view name_or_path) {
  if (auto builtin = builtin_system(name_or_path)) return std::move(*builtin);
  return load_system_file(std::filesystem::path(std::string(name_or_path)));
}

} // namespace numera
