#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polarlink/polynomial.hpp"

namespace polarlink {

/// Raised for malformed polynomial expressions. `position` is a 0-based
/// byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownVariable, BadExponent };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses and expands an expression over the named variables.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
///
/// Rational literals are `digits` or `digits/digits`. Whitespace is ignored
/// between tokens. Implicit multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Splits "x,y,z" into names and validates them as ASCII identifiers.
/// Throws std::invalid_argument on empty, duplicate or malformed names.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace polarlink
