#ifndef BLOWUP_PARSER_HPP
#define BLOWUP_PARSER_HPP

#include <string>

#include "blowup/bilaurent.hpp"

namespace blowup {

// Grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 'z' ['^' int] | 'u' ['^' nonneg-int]
//   coeff  := int ['/' positive-int]
// Whitespace is insignificant. "z^-1" is legal, "u^-1" is a parse error.
// Parsing the printed form of a polynomial reproduces it exactly.
BiLaurent parse_polynomial(const std::string& text);

}  // namespace blowup

#endif
