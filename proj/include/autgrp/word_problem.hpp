#ifndef AUTGRP_WORD_PROBLEM_HPP_
#define AUTGRP_WORD_PROBLEM_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autgrp/action.hpp"
#include "autgrp/automaton.hpp"
#include "autgrp/word.hpp"

namespace autgrp {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

// A composite state: a freely reduced product of signed states, read left
// to right. Restricting it at a letter never makes it longer.
struct ProductState {
  std::vector<Generator> factors;

  friend bool operator==(ProductState const&, ProductState const&) = default;
};

struct ProductStateHash {
  std::size_t operator()(ProductState const& s) const noexcept;
};

// Free reduction in the free group on the states; also drops `e`.
ProductState reduce(ProductState s);

struct TrivialityVerdict {
  enum class Kind { trivial, nontrivial, budget_exceeded };

  Kind kind = Kind::trivial;
  InputWord witness;         // moved by the element when nontrivial
  std::size_t explored = 0;  // product states visited

  bool trivial() const noexcept { return kind == Kind::trivial; }
  bool nontrivial() const noexcept { return kind == Kind::nontrivial; }
  bool exceeded() const noexcept { return kind == Kind::budget_exceeded; }
};

std::string_view to_string(TrivialityVerdict::Kind kind);

// Breadth-first search over the product states reachable from g by
// restriction. Nontrivial as soon as one of them moves a letter; trivial
// once the search closes.
TrivialityVerdict is_trivial(Automaton const& a, GroupWord const& g,
                             std::size_t budget = kDefaultBudget);

// is_trivial(g h^-1).
TrivialityVerdict are_equal(Automaton const& a, GroupWord const& g,
                            GroupWord const& h,
                            std::size_t budget = kDefaultBudget);

// Smallest k in [1, cap] with g^k trivial, nullopt when there is none.
// Throws Error(budget_exceeded).
std::optional<std::size_t> element_order(Automaton const& a, GroupWord const& g,
                                         std::size_t cap,
                                         std::size_t budget = kDefaultBudget);

struct Minimization {
  Automaton automaton;
  // Every state of the input, `e` included, to its class representative.
  std::map<std::string, std::string> mapping;
};

// Partition refinement: start from blocks of equal root permutation and
// split by the blocks of the restriction targets until stable. `e` takes
// part in the refinement, so identity-acting states collapse into it.
Minimization minimize(Automaton const& a);

// Root must match exactly; coordinates are compared as group elements.
// Throws Error(budget_exceeded).
bool check_decomposition(Automaton const& a, GroupWord const& g,
                         Decomposition const& claimed,
                         std::size_t budget = kDefaultBudget);

}  // namespace autgrp

#endif  // AUTGRP_WORD_PROBLEM_HPP_
