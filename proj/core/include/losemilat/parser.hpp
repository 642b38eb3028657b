#pragma once

// Text grammar:
//   variable   := "x" digits            (value >= 1, no leading zeros)
//   term       := variable { ["*"] variable }
//   constraint := term ("=" | "<=") term
// Whitespace is insignificant around tokens. "x12" is always variable 12.

#include <string>
#include <string_view>

#include "losemilat/semilattice.hpp"

namespace losemilat {

Term parse_term(std::string_view text);

/// "t = s" keeps side order; "t <= s" desugars to t*s = t.
Equation parse_constraint(std::string_view text);

/// Ascending, "*"-separated: Term{3,1} renders as "x1*x3".
std::string render(const Term& t);
std::string render(const Equation& eq);

}  // namespace losemilat
