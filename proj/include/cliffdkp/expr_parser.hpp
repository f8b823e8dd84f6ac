#pragma once

#include <string_view>

#include "cliffdkp/field_poly.hpp"

namespace cliffdkp {

/// Parses a polynomial in the field symbols of rank p over dimension n.
///
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ('^' nat)?
///   primary := rational | symbol | '(' expr ')' | '-' primary
///   symbol  := 'y' idx | 'pi' one idx? | 'p' one idx?
///            | 'Dy' one idx | 'Dpi' one one idx | 'Dp' one one idx
///   one     := '[' nat ']'
///   idx     := '[' (nat (',' nat)*)? ']'
///   rational:= nat ('/' nat)?
///
/// The trailing multi-index of pi/p may be omitted when p = 0. Unsorted
/// multi-indices are canonicalized with their permutation sign; a repeated
/// entry makes the symbol zero. Whitespace is ignored.
///
/// Throws ParseError (with byte offset), RangeError or RankError.
FieldPoly parse_expr(std::string_view src, int n, int p);

}  // namespace cliffdkp
