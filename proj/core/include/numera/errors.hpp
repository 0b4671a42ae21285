#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace numera {

/// Root of the library's failure hierarchy. Expected negative outcomes
/// (an unrepresentable value in a bounded search, a validation violation)
/// are returned as data, not thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text was empty where at least one numeral is required.
class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty input: at least one numeral is required") {}
};

/// Input bytes are not valid UTF-8.
class BadEncodingError : public Error {
 public:
  explicit BadEncodingError(std::size_t offset)
      : Error("invalid UTF-8 at byte offset " + std::to_string(offset)),
        byte_offset(offset) {}

  std::size_t byte_offset;
};

/// A scalar in the input does not belong to the system's alphabet.
class UnknownSymbolError : public Error {
 public:
  UnknownSymbolError(char32_t bad_symbol, std::size_t scalar_index)
      : Error("unknown symbol at index " + std::to_string(scalar_index)),
        symbol(bad_symbol),
        index(scalar_index) {}

  char32_t symbol;
  std::size_t index;  ///< 0-based scalar position in the input text
};

/// The operation needs geometric weights over a contiguous complete residue
/// digit set containing zero; this system is not of that shape.
class NotRadixFamilyError : public Error {
 public:
  using Error::Error;
};

/// A value whose sign the digit set cannot reach was requested and the
/// system does not accept an external minus mark.
class NegativeWithoutSignError : public Error {
 public:
  using Error::Error;
};

/// The alphabet has no numeral of value zero where one is required.
class NoZeroNumeralError : public Error {
 public:
  NoZeroNumeralError() : Error("alphabet has no numeral of value zero") {}
};

/// A position, cut or length is outside what the weight sequence or digit
/// string supports.
class PositionError : public Error {
 public:
  using Error::Error;
};

/// The repeating block of a fraction expansion exceeds the requested bound.
class PeriodExceedsBoundError : public Error {
 public:
  explicit PeriodExceedsBoundError(std::size_t bound_in)
      : Error("repeating block exceeds the bound of " + std::to_string(bound_in) + " digits"),
        bound(bound_in) {}

  std::size_t bound;
};

/// An enumeration would exceed the configured state budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// A system definition file is malformed. Line numbers are 1-based;
/// line 0 marks file-level problems.
class DefinitionError : public Error {
 public:
  DefinitionError(std::size_t line_in, const std::string& what)
      : Error(line_in == 0 ? what : "line " + std::to_string(line_in) + ": " + what),
        line(line_in) {}

  std::size_t line;
};

} // namespace numera
