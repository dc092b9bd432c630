// Text grammar for polynomials and rational-log expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := number | variable | '(' expr ')' | ln '(' expr ')' | ln '(' sqrt '(' expr ')' ')'
//
// Numbers are integers or decimals; "1/2" is parsed as a quotient.
#pragma once

#include "folia/poly.hpp"
#include "folia/ratlog.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace folia {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what), column_(column) {}
    /// 1-based column of the offending character.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

RatLogExpr parse_ratlog(std::string_view text, const VarList& vars);
/// Rejects logarithms and non-constant denominators.
Poly parse_poly(std::string_view text, const VarList& vars);
Rational parse_rational(std::string_view text);

}  // namespace folia
