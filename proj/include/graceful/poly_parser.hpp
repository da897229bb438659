#ifndef GRACEFUL_POLY_PARSER_HPP
#define GRACEFUL_POLY_PARSER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graceful/bivariate.hpp"

namespace graceful {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Grammar (whitespace insignificant):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' unsigned-integer)?
//   base   := unsigned-integer | 'i' | 'n' | '(' poly ')'
// Integer literals are unbounded.  `bindings` maps extra identifiers (such
// as a fixed parameter k) to integer values before expansion; the public CLI
// grammar uses no bindings.
BivariatePoly parse_polynomial(std::string_view text,
                               const std::map<std::string, long>& bindings = {});

// Exponent cap for '^' (guards runaway expansion); exceeding it raises
// ParseError.
int max_parse_exponent();
void set_max_parse_exponent(int cap);

}  // namespace graceful

#endif  // GRACEFUL_POLY_PARSER_HPP
