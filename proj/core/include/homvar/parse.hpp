#pragma once

#include "homvar/symbolic.hpp"

#include <string>

namespace homvar {

// Expression grammar (also produced by print_expr, so parse/print round-trip):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | base ('^' INT)?
//   base    := INT | variable | '(' expr ')'
//   variable := 'u' '[' INT ';' INT (',' INT)* ']'
//
// '^' takes positive integer exponents. '#' starts a comment running to the
// end of the line. Ratios p/q are ordinary division of integer literals.
RatExpr parse_expr(const std::string& text);

// Canonical text form of an expression; parse_expr(print_expr(e)) == e.
std::string print_expr(const RatExpr& e);

std::string print_poly(const Poly& p);

}  // namespace homvar
