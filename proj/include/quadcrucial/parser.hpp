#pragma once

// Text front end for quadratic maps.
//
// Grammar (one variable `z`):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | implicit)*      implicit: a following 'z' or '('
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'z' | '(' expr ')'
// Fractions such as 1/3 are ordinary divisions. The numerator and denominator that result
// are read off as written (no cancellation), so "z^2/z" is rejected as degenerate.

#include <string>
#include <string_view>

#include "quadcrucial/algebra.hpp"
#include "quadcrucial/quadmap.hpp"

namespace quadcrucial {

struct RationalFunction {
  QPoly num;
  QPoly den;
};

/// Parses an expression into numerator/denominator. Throws SyntaxError.
RationalFunction parse_rational_function(std::string_view text);

/// Throws SyntaxError, DegreeError (degree above 2) or DegenerateMap (zero resultant,
/// which includes every map of degree below 2).
Lift parse_map(std::string_view text);

/// An expression that parse_map reads back to a projectively equal lift.
std::string print_map(const Lift& lift);

}  // namespace quadcrucial
