#pragma once

#include <string_view>
#include <vector>

#include "colonlab/polynomial.hpp"

namespace colonlab {

// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*'? factor)* | factor ('*' factor)*
//   factor := ident ('^' uint)? | '(' expr ')' ('^' uint)?
//   coeff  := uint | uint '/' uint
// Integer literals are reduced into the ring's field. Errors are reported
// as ParseError with a 1-based line and column.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Separator-delimited list of expressions; an all-blank input is empty.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              char separator = ',');

}  // namespace colonlab
