#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jonq/ratfunc.hpp"

namespace jonq {

/// Syntax or semantic error in an expression, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };
  ParseError(Kind kind, const std::string& message, std::size_t line, std::size_t column);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

// Grammar (whitespace insignificant):
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := '-'* base ('^' ['-'] integer)?
//   base     := integer | variable | '(' expr ')'
//   variable := 'x' positive-integer | 'u' | 'v' | 't' | 'a1' | 'a2'
RatFunc parse(std::string_view text);

/// Canonical text; parse(render(f)) == f and equal inputs give identical bytes.
std::string render(const RatFunc& f);
std::string render(const Polynomial& p);

}  // namespace jonq
