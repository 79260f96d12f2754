#include "autgrp/word_problem.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "autgrp/error.hpp"

namespace autgrp {

std::size_t ProductStateHash::operator()(ProductState const& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto g : s.factors) {
    h ^= (static_cast<std::size_t>(g.state) << 1) | (g.inverse ? 1U : 0U);
    h *= 0x100000001b3ULL;
  }
  return h;
}

ProductState reduce(ProductState s) {
  std::vector<Generator> stack;
  stack.reserve(s.factors.size());
  for (auto g : s.factors) {
    if (g.state == kIdentity) continue;
    if (!stack.empty() && stack.back() == g.inverted()) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  s.factors = std::move(stack);
  return s;
}

std::string_view to_string(TrivialityVerdict::Kind kind) {
  switch (kind) {
    case TrivialityVerdict::Kind::trivial: return "trivial";
    case TrivialityVerdict::Kind::nontrivial: return "nontrivial";
    case TrivialityVerdict::Kind::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

TrivialityVerdict is_trivial(Automaton const& a, GroupWord const& g,
                             std::size_t budget) {
  a.require_valid();
  if (budget < 1) throw Error(ErrorKind::invalid_argument, "budget must be positive");
  for (auto gen : g.letters()) {
    if (gen.state >= a.size()) {
      throw Error(ErrorKind::unknown_state, "unknown state id " + std::to_string(gen.state));
    }
  }

  std::size_t const d = a.degree();

  struct Node {
    ProductState state;
    std::size_t parent;
    Letter via;
  };
  std::vector<Node> nodes;
  std::unordered_set<ProductState, ProductStateHash> visited;

  auto root = reduce(ProductState{g.letters()});
  if (root.factors.empty()) return {TrivialityVerdict::Kind::trivial, {}, 1};

  visited.insert(root);
  nodes.push_back({std::move(root), 0, 0});

  std::vector<Letter> images(d);
  std::vector<ProductState> children(d);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    auto const& factors = nodes[head].state.factors;
    for (Letter x = 1; x <= d; ++x) {
      auto& child = children[x - 1].factors;
      child.clear();
      Letter y = x;
      for (auto gen : factors) {
        child.push_back(restrict(a, gen, y));
        y = apply(a, gen, y);
      }
      images[x - 1] = y;
    }

    for (Letter x = 1; x <= d; ++x) {
      if (images[x - 1] == x) continue;
      InputWord witness{x};
      for (std::size_t n = head; n != 0; n = nodes[n].parent) {
        witness.push_back(nodes[n].via);
      }
      std::reverse(witness.begin(), witness.end());
      return {TrivialityVerdict::Kind::nontrivial, std::move(witness), visited.size()};
    }

    for (Letter x = 1; x <= d; ++x) {
      auto child = reduce(std::move(children[x - 1]));
      children[x - 1] = ProductState{};
      if (child.factors.empty()) continue;
      if (!visited.insert(child).second) continue;
      if (visited.size() > budget) {
        return {TrivialityVerdict::Kind::budget_exceeded, {}, visited.size()};
      }
      nodes.push_back({std::move(child), head, x});
    }
  }
  return {TrivialityVerdict::Kind::trivial, {}, visited.size()};
}

TrivialityVerdict are_equal(Automaton const& a, GroupWord const& g,
                            GroupWord const& h, std::size_t budget) {
  return is_trivial(a, g * h.inverse(), budget);
}

std::optional<std::size_t> element_order(Automaton const& a, GroupWord const& g,
                                         std::size_t cap, std::size_t budget) {
  if (cap < 1) throw Error(ErrorKind::invalid_argument, "order cap must be positive");
  GroupWord power;
  for (std::size_t k = 1; k <= cap; ++k) {
    power *= g;
    auto verdict = is_trivial(a, power, budget);
    if (verdict.exceeded()) {
      throw Error(ErrorKind::budget_exceeded,
                  "budget of " + std::to_string(budget) +
                      " product states exceeded at power " + std::to_string(k));
    }
    if (verdict.trivial()) return k;
  }
  return std::nullopt;
}

Minimization minimize(Automaton const& a) {
  a.require_valid();
  std::size_t const n = a.size();
  std::size_t const d = a.degree();

  // Initial blocks: equal root permutation.
  std::vector<std::size_t> block(n);
  {
    std::vector<Permutation const*> reps;
    for (StateId q = 0; q < n; ++q) {
      auto it = std::find_if(reps.begin(), reps.end(),
                             [&](Permutation const* p) { return *p == a.perm(q); });
      block[q] = static_cast<std::size_t>(it - reps.begin());
      if (it == reps.end()) reps.push_back(&a.perm(q));
    }
  }

  std::size_t count = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> signatures;
    std::vector<std::size_t> refined(n);
    for (StateId q = 0; q < n; ++q) {
      std::vector<std::size_t> signature{block[q]};
      for (Letter x = 1; x <= d; ++x) signature.push_back(block[a.next(q, x)]);
      auto it = std::find(signatures.begin(), signatures.end(), signature);
      refined[q] = static_cast<std::size_t>(it - signatures.begin());
      if (it == signatures.end()) signatures.push_back(std::move(signature));
    }
    block = std::move(refined);
    if (signatures.size() == count) break;
    count = signatures.size();
  }

  // Blocks are numbered by first occurrence, so block 0 holds `e` and every
  // block's representative is its earliest state.
  std::vector<StateId> representative(count, kIdentity);
  std::vector<bool> seen(count, false);
  for (StateId q = 0; q < n; ++q) {
    if (!seen[block[q]]) {
      seen[block[q]] = true;
      representative[block[q]] = q;
    }
  }

  std::vector<StateDef> states;
  for (std::size_t b = 1; b < count; ++b) {
    StateId const q = representative[b];
    WreathRule rule{a.perm(q), {}};
    for (Letter x = 1; x <= d; ++x) {
      rule.restrictions.push_back(a.name(representative[block[a.next(q, x)]]));
    }
    states.push_back({a.name(q), std::move(rule)});
  }

  Minimization result{Automaton(a.alphabet(), std::move(states)), {}};
  for (StateId q = 0; q < n; ++q) {
    result.mapping[a.name(q)] = a.name(representative[block[q]]);
  }
  return result;
}

bool check_decomposition(Automaton const& a, GroupWord const& g,
                         Decomposition const& claimed, std::size_t budget) {
  if (claimed.coords.size() != a.degree()) {
    throw Error(ErrorKind::arity_mismatch,
                "claimed decomposition has " + std::to_string(claimed.coords.size()) +
                    " coordinates, expected " + std::to_string(a.degree()));
  }
  if (root_perm(a, g) != claimed.root) return false;
  for (Letter x = 1; x <= a.degree(); ++x) {
    Letter const vertex[] = {x};
    auto verdict = are_equal(a, restriction(a, g, vertex), claimed.coords[x - 1], budget);
    if (verdict.exceeded()) {
      throw Error(ErrorKind::budget_exceeded,
                  "budget of " + std::to_string(budget) +
                      " product states exceeded on coordinate " + std::to_string(x));
    }
    if (!verdict.trivial()) return false;
  }
  return true;
}

}  // namespace autgrp
