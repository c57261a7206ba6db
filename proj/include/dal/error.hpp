#ifndef DAL_ERROR_HPP_
#define DAL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dal {

// Root of every error raised by the library. The CLI maps all of them to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A construct is not part of the language of the selected logic variant.
class VariantError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A term mentions a symbol the interpretation/valuation does not cover.
class SymbolError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or command-line value; `line` is 1-based, 0 if unknown.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dal

#endif  // DAL_ERROR_HPP_
