#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tri3/triangular.hpp"

namespace tri3 {

/// The instance file could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance text is not well-formed JSON or does not follow the schema.
/// `line`/`column` are 1-based and zero when the error has no single
/// source position (schema errors report a JSON path instead).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses and validates an instance. Throws IoError, ParseError, or
/// ValidationError (axiom failures, with the full report).
TriSystem parse_instance(const std::filesystem::path& path);
TriSystem parse_instance_text(std::string_view text, const std::string& source = "<input>");

/// Serializes in the instance format, listing only nonzero tensor entries
/// in lexicographic (i, j, k) order. Output is byte-stable.
std::string write_instance(const TriSystem& sys);

}  // namespace tri3
