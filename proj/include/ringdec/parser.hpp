// Goal text parser. Grammar (loosest to tightest):
//   goal  := expr '=' expr [':' carrier] '[' mode ']'
//   expr  := additive over '+', binary '-'
//   unary '-' binds tighter than '+'/'-', looser than '*'
//   '*', '/', '*+', '*~' multiplicative, left associative
//   '^+ k', '^ k', '^-1', '%:R', '%:~R', '.+1' postfix, tightest
//   atoms: literals, identifiers, hom application f(e), (e), (e : C),
//          Posz(e)/Negz(e) in integer contexts
#pragma once

#include "ringdec/carriers.hpp"
#include "ringdec/surface.hpp"

namespace ringdec::parser {

surface::Goal parse_goal(const std::string& text, const carriers::Registry& reg);

// Parses a bare term (no '=' or mode suffix); used by tests.
surface::TermPtr parse_term(const std::string& text, const carriers::Registry& reg);

}  // namespace ringdec::parser
