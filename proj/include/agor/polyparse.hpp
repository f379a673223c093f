#pragma once

#include <string>

#include "agor/poly.hpp"

namespace agor {

// Parses the polynomial text grammar:
//   poly   := term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)*
//   factor := VAR ('^' UINT)?
//   coeff  := UINT ('/' UINT)?
// Whitespace is ignored; variables must be declared in the ring. A leading
// sign on the first term is accepted. Throws ParseError with position info.
Polynomial parse_poly(const RingPtr& ring, const std::string& text);

} // namespace agor
