#ifndef AUTGRP_CONSTRUCT_HPP_
#define AUTGRP_CONSTRUCT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autgrp/action.hpp"
#include "autgrp/automaton.hpp"
#include "autgrp/report.hpp"
#include "autgrp/word_problem.hpp"

namespace autgrp {

// `adding` (binary adding machine, bit 0 -> letter 1, bit 1 -> letter 2),
// `gabc` (<A,B,C | A^2,B^2,C^2,(ABC)^2> over 3 letters) and
// `gab` (<A,B | A^2,B^4,(AB)^4> over 4 letters).
Automaton builtin(std::string_view name);
std::vector<std::string_view> builtin_names();
std::string_view builtin_source(std::string_view name);

// Name of the inverse of state `name` in inverse_automaton(): `name~`.
std::string inverse_name(std::string_view name);

// One state q~ per state q with q~ = s^-1(r_{s^-1(1)}~, ..., r_{s^-1(d)}~).
Automaton inverse_automaton(Automaton const& a);

// a_1 b_1 c_1 a_2 b_2 c_2 ... for equal-length streams a, b, c, ...
InputWord interleave(std::span<InputWord const> streams);
std::vector<InputWord> deinterleave(std::span<Letter const> word,
                                    std::size_t streams);

enum class PowerVariant {
  corrected,
  // Restrictions advance the machine on every level, as originally written.
  // Fails the interleaving property; kept to demonstrate that.
  literal,
};

PowerVariant parse_power_variant(std::string_view text);
std::string_view to_string(PowerVariant v);

// `name@level`.
std::string power_name(std::string_view state, std::size_t level);

// Automaton for the L-th direct power of the group of `a`, acting on L
// interleaved streams. In the corrected variant
//
//   q@1 = s(r_1@L, ..., r_d@L)
//   q@j = (q@(j-1), ..., q@(j-1))   for 2 <= j <= L
//
// so q@j acts as q on the letters at positions = j (mod L) and fixes the
// rest. Identity delay states e@2..e@L are emitted explicitly.
Automaton direct_power(Automaton const& a, std::size_t levels,
                       PowerVariant variant = PowerVariant::corrected);

// Commutators of every pair of base states on distinct levels of the
// corrected power must be trivial. Same-level pairs are included with the
// verdict the base automaton gives for the same commutator.
SuiteReport power_commutation_suite(Automaton const& a, std::size_t levels,
                                    std::size_t budget = kDefaultBudget);

}  // namespace autgrp

#endif  // AUTGRP_CONSTRUCT_HPP_
