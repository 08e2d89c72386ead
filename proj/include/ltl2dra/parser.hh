#pragma once

#include <string>

#include "ltl2dra/formula.hh"

namespace ltl2dra {

// Grammar, loosest to tightest: <-> (right-assoc), -> (right-assoc), |, &,
// U (right-assoc), unary ! X F G, atoms/constants/parentheses.
// Constants: tt/true, ff/false. Identifiers: [a-zA-Z_][a-zA-Z0-9_]* not equal
// to a keyword; operators X F G U must stand alone ("GF" is an atom, "G F" is
// not). -> and <-> are rewritten away; W, R and M are rejected.
Formula parse(const std::string& text);

} // namespace ltl2dra
