#ifndef AUTGRP_ACTION_HPP_
#define AUTGRP_ACTION_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autgrp/automaton.hpp"
#include "autgrp/permutation.hpp"
#include "autgrp/word.hpp"

namespace autgrp {

// A finite vertex of the tree X*.
using InputWord = std::vector<Letter>;

// Root action of a single signed state. For q = s(r_1, ..., r_d) the inverse
// acts by s^-1 at the root.
inline Letter apply(Automaton const& a, Generator g, Letter x) {
  return g.inverse ? a.inverse_perm(g.state)(x) : a.perm(g.state)(x);
}

// Restriction of a single signed state at letter x. For the inverse this is
// (r_{s^-1(x)})^-1.
inline Generator restrict(Automaton const& a, Generator g, Letter x) {
  if (!g.inverse) return {a.next(g.state, x), false};
  return {a.next(g.state, a.inverse_perm(g.state)(x)), true};
}

// Extended transition function; transition(q, empty) == q.
StateId transition(Automaton const& a, StateId q, std::span<Letter const> w);

// Extended output function of the initial automaton A_q.
InputWord act_state(Automaton const& a, StateId q, std::span<Letter const> w);

// Action of a group word; the leftmost generator acts first.
InputWord act(Automaton const& a, GroupWord const& g, std::span<Letter const> w);

// The word u with act(g, v w) == act(g, v) act(u, w) for every w.
GroupWord restriction(Automaton const& a, GroupWord const& g,
                      std::span<Letter const> v);

// Action of g on the first level, a homomorphism into S(X).
Permutation root_perm(Automaton const& a, GroupWord const& g);

// psi(g) = root(g|_1, ..., g|_d).
struct Decomposition {
  Permutation root;
  std::vector<GroupWord> coords;

  friend bool operator==(Decomposition const&, Decomposition const&) = default;
};

// Coordinates are the literal restriction words, not simplified.
Decomposition decompose(Automaton const& a, GroupWord const& g);

// Input words on the command line and in reports: digits, or letters joined
// by `sep` when sep is non-empty.
InputWord parse_letters(std::string_view text, std::size_t degree,
                        std::string_view sep = {});
std::string format_letters(std::span<Letter const> w, std::string_view sep = {});

}  // namespace autgrp

#endif  // AUTGRP_ACTION_HPP_
