#pragma once

// Expression language for algebra definitions:
//
//   expr     := term (('+'|'-') term)*
//   term     := ['-'|'+'] factor ('*' factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | name | '(' expr ')'
//   rational := int ('/' uint)?
//
// Whitespace is insignificant. The formatter prints terms in decreasing
// degree-lexicographic order with coefficients as `a` or `a/b`, and its
// output always parses back to the same polynomial.

#include <string>
#include <string_view>

#include "rcalg/algebra.hpp"

namespace rcalg {

// Throws ParseError (syntax, unknown generator, bad exponent).
GradedPoly parse_expr(std::string_view text, const AlgebraPtr& algebra);

std::string format(const GradedPoly& f);

}  // namespace rcalg
