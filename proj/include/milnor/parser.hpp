#pragma once

#include <string>

#include "milnor/mpoly.hpp"

namespace milnor {

/// Recursive-descent parser for polynomial expressions in x, y, t.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := number | 'x' | 'y' | 't' | '(' expr ')' | '-' base
///
/// Numbers are integers, rationals a/b, or decimals (converted exactly).
/// Implicit multiplication is rejected with a caret-pointed message.
/// The result is declared over the variables that actually occur.
MPoly parse_poly(const std::string& text);

/// Like parse_poly but with the declared variable set forced, so expressions
/// can be combined with other polynomials regardless of which variables occur.
MPoly parse_poly(const std::string& text, VarSet vars);

}  // namespace milnor
