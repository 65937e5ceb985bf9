#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stratakit/kgroup.hpp"

namespace stratakit {

// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Descriptors for named lines; unnamed segments use "rho". Lines missing from
// the table default to dim 1 with no wraparound.
using LineTable = std::map<std::string, CuspidalLine>;

// expr := prod ('+' prod)*
// prod := atom ('*' atom)*
// atom := 'Z[' int ',' int (';' ident)? ']' | 'Z{' [seg (',' seg)*] '}'
//       | 'D^' int '(' expr ')' | '(' expr ')'
// seg  := '[' int ',' int (';' ident)? ']'
// Whitespace is ignored between tokens.
Expr parse_expression(std::string_view src, const LineTable& lines = {});

struct Identity {
  Expr lhs;
  Expr rhs;
};

// expr '=' expr
Identity parse_identity(std::string_view src, const LineTable& lines = {});

}  // namespace stratakit
