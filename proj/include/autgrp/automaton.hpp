#ifndef AUTGRP_AUTOMATON_HPP_
#define AUTGRP_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autgrp/permutation.hpp"

namespace autgrp {

using StateId = std::uint32_t;

// The implicit trivial state. It is always id 0 and always named "e".
inline constexpr StateId kIdentity = 0;
inline constexpr std::string_view kIdentityName = "e";

class Alphabet {
 public:
  // Throws Error(alphabet_too_small) when size < 2.
  explicit Alphabet(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool contains(Letter x) const noexcept { return x >= 1 && x <= size_; }

  friend bool operator==(Alphabet const&, Alphabet const&) = default;

 private:
  std::size_t size_;
};

// g = perm(h_1, ..., h_d): root permutation plus the state reached after
// reading each letter.
struct WreathRule {
  Permutation perm;
  std::vector<std::string> restrictions;

  friend bool operator==(WreathRule const&, WreathRule const&) = default;
};

struct StateDef {
  std::string name;
  WreathRule rule;

  friend bool operator==(StateDef const&, StateDef const&) = default;
};

enum class DefectKind {
  dangling_reference,
  size_mismatch,
  arity_mismatch,
  reserved_redefinition,
  duplicate_state,
};

std::string_view to_string(DefectKind kind);

struct Defect {
  DefectKind kind;
  std::string state;
  std::string detail;

  friend bool operator==(Defect const&, Defect const&) = default;
};

// An invertible Mealy automaton given by wreath recursion.
//
// Construction never throws on malformed rules: defects are recorded and
// reported by validate(). Algorithms that need the transition tables call
// require_valid() first. Dangling references resolve to `e` in the tables
// of an invalid automaton.
class Automaton {
 public:
  Automaton(Alphabet alphabet, std::vector<StateDef> states);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::size_t degree() const noexcept { return alphabet_.size(); }

  // User states in definition order; `e` is not included.
  std::vector<StateDef> const& states() const noexcept { return states_; }

  std::vector<Defect> const& defects() const noexcept { return defects_; }
  bool valid() const noexcept { return defects_.empty(); }
  void require_valid() const;

  // Number of state ids, including `e`.
  std::size_t size() const noexcept { return names_.size(); }

  std::optional<StateId> find(std::string_view name) const;
  StateId id(std::string_view name) const;  // throws Error(unknown_state)
  std::string const& name(StateId q) const { return names_[q]; }

  Permutation const& perm(StateId q) const { return perms_[q]; }
  Permutation const& inverse_perm(StateId q) const { return inverse_perms_[q]; }
  StateId next(StateId q, Letter x) const { return next_[q * degree() + x - 1]; }

  friend bool operator==(Automaton const& lhs, Automaton const& rhs) {
    return lhs.alphabet_ == rhs.alphabet_ && lhs.states_ == rhs.states_;
  }

 private:
  Alphabet alphabet_;
  std::vector<StateDef> states_;
  std::vector<Defect> defects_;

  std::vector<std::string> names_;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverse_perms_;
  std::vector<StateId> next_;
};

std::vector<Defect> validate(Automaton const& a);

// State names: [A-Za-z_][A-Za-z0-9_@~']*
bool is_valid_name(std::string_view name) noexcept;

}  // namespace autgrp

#endif  // AUTGRP_AUTOMATON_HPP_
