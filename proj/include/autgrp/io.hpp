#ifndef AUTGRP_IO_HPP_
#define AUTGRP_IO_HPP_

#include <string>
#include <string_view>

#include "autgrp/automaton.hpp"

namespace autgrp {

// Line-oriented DSL, `#` starts a comment:
//
//   alphabet 3
//   state a = id (a, c, b)
//   state c = (12) (e, e, c)
//
// Throws Error with a 1-based line number on syntax errors and on
// validation defects.
Automaton parse_automaton(std::string_view text);

// Canonical document; parse_automaton(print_automaton(a)) == a.
std::string print_automaton(Automaton const& a);

// Moore diagram in DOT: one edge q -> next(q, x) labelled "x|perm(q)(x)"
// per state and letter.
std::string export_dot(Automaton const& a);

}  // namespace autgrp

#endif  // AUTGRP_IO_HPP_
