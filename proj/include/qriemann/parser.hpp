#pragma once

#include "qriemann/element.hpp"
#include "qriemann/presentation.hpp"

#include <string_view>

namespace qriemann {

// Parses the canonical expression grammar:
//
//   expr     := term (('+'|'-') term)*
//   term     := '-'? factor (('*'|'/') factor)*
//   factor   := primary ('^' exponent)?
//   primary  := integer | name | '(' expr ')'
//   exponent := '-'? integer | '(' '-'? integer '/' '2' ')'
//
// "q" is the scalar deformation parameter; other names must be
// generators of the presentation.  Division requires a single-term
// divisor with invertible letters.  Exponents of the (k/2) form apply
// to q and to half-unit generators.  Malformed input raises
// std::invalid_argument.
Element parse_element(std::string_view text, const Presentation& p);

} // namespace qriemann
