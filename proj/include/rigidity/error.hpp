#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

enum class Errc {
  kIndexOutOfRange,
  kLoopEdge,
  kUnknownEdge,
  kDuplicateInsert,
  kSizeMismatch,
  kKOutOfRange,
  kInvalidSide,
  kBadGrid,
  kParse,
};

const char* errc_name(Errc code) noexcept;

/// Exception type for every precondition violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Input-format error carrying the 1-based line number it refers to.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::kParse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rigidity
