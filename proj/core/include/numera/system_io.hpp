#pragma once

#include <filesystem>
#include <string_view>

#include "numera/system.hpp"

namespace numera {

/// Parses the line-based system definition format:
///
///   # comment to end of line
///   name <identifier>                            exactly once
///   weights geometric <base> | factorial | power
///         | constant <c> | table <w1> <w2> ...   exactly once
///   numeral <symbol> <value>                     one line per numeral
///   external-sign true|false                     optional, default false
///
/// <symbol> must be a single Unicode scalar. Throws DefinitionError with a
/// 1-based line number on malformed input. Semantic problems that the format
/// can still express (duplicate values, empty alphabet) are left for
/// `validate` to report.
PreNumerationSystem parse_system_definition(std::string_view text);

/// Reads a definition file from disk.
PreNumerationSystem load_system_file(const std::filesystem::path& path);

/// Resolves a built-in name first, then falls back to a definition file.
PreNumerationSystem resolve_system(std::string_view name_or_path);

} // namespace numera
