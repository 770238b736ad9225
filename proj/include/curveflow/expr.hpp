#pragma once

#include <string>
#include <string_view>

#include "curveflow/diffpoly.hpp"

namespace curveflow {

// Surface syntax, ASCII only:
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|implicit) factor)*
//   factor   := atom ('^' nat)? | '-' factor | '(' expr ')'
//   atom     := rational | 'G' | 'k' prime* | 'k^(' nat ')'
//   rational := nat ('/' nat)?
//   prime    := "'"
// Whitespace is insignificant; juxtaposition multiplies.

/// Throws ParseError (1-based byte offset, expected-token set) on bad input.
DiffPoly parse(std::string_view text);

/// Canonical rendering: terms in canonical monomial order, reduced fractions,
/// derivative orders >= 4 as k^(m).  parse(print(p)) == p for every p.
std::string print(const DiffPoly& p);

std::string print(const Rational& r);

}  // namespace curveflow
