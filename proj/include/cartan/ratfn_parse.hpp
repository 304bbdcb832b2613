#ifndef CARTAN_RATFN_PARSE_HPP
#define CARTAN_RATFN_PARSE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cartan/ratfn.hpp"

namespace cartan {

/// Syntax error with a 1-based line/column into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a rational-function literal such as `(x^2*y - 1/3)/(1 + x^2)`.
/// Grammar: integers, coordinate names, `+ - * /`, `^` with a nonnegative
/// integer exponent, parentheses.
RationalFn parse_ratfn(std::string_view text, std::span<const std::string> coords);

}  // namespace cartan

#endif  // CARTAN_RATFN_PARSE_HPP
