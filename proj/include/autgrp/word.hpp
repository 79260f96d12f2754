#ifndef AUTGRP_WORD_HPP_
#define AUTGRP_WORD_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autgrp/automaton.hpp"

namespace autgrp {

// A signed state q or q^-1.
struct Generator {
  StateId state = kIdentity;
  bool inverse = false;

  Generator inverted() const noexcept { return {state, !inverse}; }

  friend bool operator==(Generator const&, Generator const&) = default;
  friend auto operator<=>(Generator const&, Generator const&) = default;
};

struct Syllable {
  StateId state;
  int exponent;

  friend bool operator==(Syllable const&, Syllable const&) = default;
};

// A word in signed automaton states, stored as unit generators. The
// identity state never appears; the empty word is the group identity.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Generator> letters);

  static GroupWord generator(StateId q, int exponent = 1);

  std::vector<Generator> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Maximal runs of equal generators re-aggregated into exponents.
  std::vector<Syllable> syllables() const;

  // Sum of exponents of state q over the whole word.
  int exponent_sum(StateId q) const;

  GroupWord inverse() const;
  GroupWord pow(std::size_t k) const;

  GroupWord& operator*=(GroupWord const& rhs);
  friend GroupWord operator*(GroupWord lhs, GroupWord const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(GroupWord const&, GroupWord const&) = default;

 private:
  std::vector<Generator> letters_;
};

// Grammar: atoms NAME or NAME^INT joined by `*`, whitespace ignored, `e` is
// the empty word.
GroupWord parse_word(std::string_view text, Automaton const& a);

// Inverse of parse_word: `a*b^2*a`, or `e` for the empty word.
std::string to_string(GroupWord const& w, Automaton const& a);

// Commutator x^-1 y^-1 x y.
GroupWord commutator(GroupWord const& x, GroupWord const& y);

}  // namespace autgrp

#endif  // AUTGRP_WORD_HPP_
