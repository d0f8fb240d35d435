#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nacent/constructors.hpp"

namespace nacent {

/// Group-spec syntax error. `position` is the 1-based column of the
/// offending character (one past the end for premature end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::set<std::string> expected, const std::string& message);

  std::size_t position() const { return position_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::set<std::string> expected_;
};

/// spec := term { "x" term } ; term := NAME "(" INT { "," INT } ")"
/// NAME is one of C D S A PSL2 PSU3 H Q; "x" is a left-associative direct
/// product; whitespace between tokens is ignored.
GroupSpec parse_spec(std::string_view text);

std::string to_string(const GroupSpec& spec);

}  // namespace nacent
