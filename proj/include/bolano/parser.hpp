#pragma once

#include <string_view>

#include "bolano/expr.hpp"

namespace bolano {

/// Parses the operator expression language:
///
///   expr     := ["+"|"-"] term (("+"|"-") term)*
///   term     := factor (("*"|"/") factor)*
///   factor   := base (("^"|"**") exponent)?
///   exponent := ["+"|"-"] (number | ident | "(" expr ")")
///   base     := number | "I" | ident | ladder | "(" expr ")"
///             | ("sum"|"prod") "(" ident "," expr "," expr "," expr ")"
///             | "exp" "(" expr ")"
///   ladder   := ("b"|"bd") ["_" subscript]
///   ident    := letter (letter|digit)* ["_" subscript]
///
/// Multiplication is always explicit. Decimal literals become exact
/// rationals. Throws ParseError carrying a byte offset and the expected
/// tokens.
Expr parse(std::string_view text);

/// parse followed by expand.
LadderPoly parse_poly(std::string_view text);

}  // namespace bolano
