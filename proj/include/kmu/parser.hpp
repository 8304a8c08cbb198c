#pragma once

#include <string>
#include <string_view>

#include "kmu/polynomial.hpp"

namespace kmu {

// Text grammar: integers, variable identifiers, + - * / ^ and parentheses;
// whitespace insignificant; ^ binds tighter than * which binds tighter
// than +/-.  Division is only defined by (nonzero) constants, which is what
// rational coefficients need for round trips.  Errors carry the offending
// position.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Canonical rendering; format(parse(t)) == format of t's canonical form and
// parse(format(f)) == f.
std::string format_polynomial(const Polynomial& f);

}  // namespace kmu
