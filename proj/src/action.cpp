#include "autgrp/action.hpp"

#include <cctype>

#include "autgrp/error.hpp"

namespace autgrp {

namespace {

void check_letters(Automaton const& a, std::span<Letter const> w) {
  for (Letter x : w) {
    if (!a.alphabet().contains(x)) {
      throw Error(ErrorKind::letter_out_of_range,
                  "letter " + std::to_string(x) + " outside 1.." +
                      std::to_string(a.degree()));
    }
  }
}

void check_state(Automaton const& a, StateId q) {
  if (q >= a.size()) {
    throw Error(ErrorKind::unknown_state, "unknown state id " + std::to_string(q));
  }
}

void check_word(Automaton const& a, GroupWord const& g) {
  for (auto gen : g.letters()) check_state(a, gen.state);
}

}  // namespace

StateId transition(Automaton const& a, StateId q, std::span<Letter const> w) {
  a.require_valid();
  check_state(a, q);
  check_letters(a, w);
  for (Letter x : w) q = a.next(q, x);
  return q;
}

InputWord act_state(Automaton const& a, StateId q, std::span<Letter const> w) {
  a.require_valid();
  check_state(a, q);
  check_letters(a, w);
  InputWord out;
  out.reserve(w.size());
  for (Letter x : w) {
    out.push_back(a.perm(q)(x));
    q = a.next(q, x);
  }
  return out;
}

InputWord act(Automaton const& a, GroupWord const& g, std::span<Letter const> w) {
  a.require_valid();
  check_word(a, g);
  check_letters(a, w);
  InputWord current(w.begin(), w.end());
  for (auto gen : g.letters()) {
    for (Letter& x : current) {
      Letter const y = apply(a, gen, x);
      gen = restrict(a, gen, x);
      x = y;
    }
  }
  return current;
}

GroupWord restriction(Automaton const& a, GroupWord const& g,
                      std::span<Letter const> v) {
  a.require_valid();
  check_word(a, g);
  check_letters(a, v);
  // (g_1 g_2)|_v = g_1|_v g_2|_{g_1(v)}: push the vertex through each
  // generator in turn, restricting as we go.
  std::vector<Generator> letters;
  letters.reserve(g.size());
  InputWord vertex(v.begin(), v.end());
  for (auto gen : g.letters()) {
    for (Letter& x : vertex) {
      Letter const y = apply(a, gen, x);
      gen = restrict(a, gen, x);
      x = y;
    }
    letters.push_back(gen);
  }
  return GroupWord(std::move(letters));
}

Permutation root_perm(Automaton const& a, GroupWord const& g) {
  a.require_valid();
  check_word(a, g);
  auto result = Permutation::identity(a.degree());
  for (auto gen : g.letters()) {
    result = compose(result, gen.inverse ? a.inverse_perm(gen.state) : a.perm(gen.state));
  }
  return result;
}

Decomposition decompose(Automaton const& a, GroupWord const& g) {
  Decomposition result{root_perm(a, g), {}};
  result.coords.reserve(a.degree());
  for (Letter x = 1; x <= a.degree(); ++x) {
    Letter const vertex[] = {x};
    result.coords.push_back(restriction(a, g, vertex));
  }
  return result;
}

InputWord parse_letters(std::string_view text, std::size_t degree,
                        std::string_view sep) {
  InputWord out;
  auto push = [&](std::string_view token) {
    Letter value = 0;
    if (token.empty()) throw Error(ErrorKind::syntax, "empty letter");
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorKind::syntax, "unexpected character '" + std::string(1, c) +
                                           "' in input word");
      }
      value = value * 10 + static_cast<Letter>(c - '0');
      if (value > degree) break;
    }
    if (value < 1 || value > degree) {
      throw Error(ErrorKind::letter_out_of_range,
                  "letter " + std::string(token) + " outside 1.." + std::to_string(degree));
    }
    out.push_back(value);
  };

  if (sep.empty()) {
    for (std::size_t i = 0; i < text.size(); ++i) push(text.substr(i, 1));
    return out;
  }
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto next = text.find(sep, start);
    push(text.substr(start, next - start));
    if (next == std::string_view::npos) break;
    start = next + sep.size();
  }
  return out;
}

std::string format_letters(std::span<Letter const> w, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace autgrp
