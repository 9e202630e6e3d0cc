#pragma once

#include <string_view>

#include "qsh/ratfunc.hpp"

namespace qsh {

// Parses an arithmetic expression over integers and variables:
// + - * / ^ (integer exponents, possibly negative) and parentheses.
// Identifiers of the form L<vertex>_<slot> are Chern roots, the rest are
// parameters. Accepts everything RatFunc::str() emits. Throws ParseError.
RatFunc parse_expression(std::string_view text);

}  // namespace qsh
