#pragma once

#include <string>

#include "gpi/free_algebra.hpp"

namespace gpi {

/// Expression syntax:
///   sum   := circ (('+' | '-') circ)*
///   circ  := prod ('o' prod)*            left-associated a o b = ab + ba
///   prod  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' uint)?
///   atom  := 'x' uint | int | int '/' int | '(' sum ')' | '[' sum (',' sum)+ ']'
/// [a,b,c] means [[a,b],c]. A nonzero constant term is rejected in k0<X>.
/// Errors are ParseError with a 0-based character position.
NCPoly parse_expr(const std::string& text, const FieldSpec& field, bool unital);

}  // namespace gpi
