#ifndef TCL_PARSE_HPP
#define TCL_PARSE_HPP

#include <span>
#include <string>
#include <string_view>

#include "tcl/poly.hpp"

namespace tcl {

// Parses polynomial text over the given variables:
//
//   poly    := ['+'|'-'] product (('+'|'-') product)*
//   product := power ('*'? power)*
//   power   := primary ('^' uint)?
//   primary := uint | var | '(' poly ')'
//
// Variables match [A-Za-z][A-Za-z0-9_]*; whitespace is insignificant.
// Integer coefficients are reduced mod p. Throws ParseError carrying the
// byte offset of the offending input.
Poly parse_poly(std::string_view text, std::span<const std::string> vars, PrimeChar ch);

// Canonical text: terms in descending order joined by " + ", coefficients
// in [1, p-1], "0" for the zero polynomial. parse_poly inverts it.
std::string to_string(const Poly& a, std::span<const std::string> vars);

// Single monomial, "1" for the empty one.
std::string to_string(const Monomial& m, std::span<const std::string> vars);

}  // namespace tcl

#endif  // TCL_PARSE_HPP
